// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdiscord/correlation.hpp"
#include "qdiscord/entropic_discord.hpp"
#include "qdiscord/operator_core.hpp"

namespace qdiscord {

// State files are JSON documents:
//
//   {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
//
// with (dA·dB)² entries row-major. Doubles are written in shortest
// round-trip form, so save → load is bit-exact.

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& doc);

/// Throws ParseError (with line and column) on malformed text, BadDim on
/// inconsistent dims, ValidationError naming the failed property otherwise.
DensityMatrix parse_state(const std::string& text);
DensityMatrix load_state(const std::filesystem::path& path);
std::string format_state(const DensityMatrix& rho);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

/// {"matrix": [[[re, im], ...], ...]}; "dims" is optional and ignored.
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix load_matrix(const std::filesystem::path& path);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

struct CorrelationRowsFile {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::vector<CorrelationRow> rows;
};

/// {"dimA": dA, "dimB": dB, "rows": [{"a_index": n, "values": [...]}, ...]}
CorrelationRowsFile parse_correlation_rows(const std::string& text);
CorrelationRowsFile load_correlation_rows(const std::filesystem::path& path);
nlohmann::json correlation_rows_to_json(const CorrelationRowsFile& file);

struct AnalyzeOptions {
    RankTolerance rank_tolerance;
    double commutator_tolerance = kDefaultCommutatorTolerance;
    EntropicConfig entropic;
    bool with_entropic = true;
};

struct GeometricSummary {
    double value = 0.0;
    double k_max = 0.0;
    Eigen::Vector3d e_star = Eigen::Vector3d::UnitX();
};

struct Timings {
    double zero_discord_ms = 0.0;
    double geometric_ms = 0.0;
    double entropic_ms = 0.0;
    double mutual_information_ms = 0.0;
};

struct DiscordReport {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    ZeroDiscordVerdict verdict;
    double mutual_information = 0.0;
    std::optional<GeometricSummary> geometric;       // iff 2 × 2
    std::optional<EntropicDiscordResult> entropic;   // iff d_A = 2
    EntropicConfig entropic_config;
    Timings timings;
};

DiscordReport analyze(const DensityMatrix& rho, const AnalyzeOptions& options = {});

nlohmann::json report_to_json(const DiscordReport& report, bool include_timings = true);

}  // namespace qdiscord
