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

#include "qdiscord/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "qdiscord/geometric_discord.hpp"

namespace qdiscord {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DiscordError(ErrorCode::ParseError, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << "parse error at line " << line << ", column " << column << ": " << e.what();
        throw DiscordError(ErrorCode::ParseError, msg.str());
    }
}

[[noreturn]] void structure_error(const std::string& what) {
    throw DiscordError(ErrorCode::ParseError, "malformed document: " + what);
}

Complex complex_from_json(const json& entry) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        structure_error("matrix entries must be [re, im] number pairs");
    }
    return {entry[0].get<double>(), entry[1].get<double>()};
}

ComplexMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) structure_error("\"matrix\" must be a non-empty array of rows");
    const std::size_t n = rows.size();
    ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) structure_error("\"matrix\" must be square");
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_from_json(row[j]);
        }
    }
    return m;
}

std::size_t positive_count(const json& v, const char* name) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        structure_error(std::string("\"") + name + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

json state_to_json(const DensityMatrix& rho) {
    return json{{"dims", {rho.dim_a(), rho.dim_b()}}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& doc) {
    if (!doc.is_object()) structure_error("state document must be an object");
    if (!doc.contains("dims")) structure_error("missing \"dims\"");
    if (!doc.contains("matrix")) structure_error("missing \"matrix\"");
    const json& dims = doc["dims"];
    if (!dims.is_array() || dims.size() != 2) structure_error("\"dims\" must be [dA, dB]");
    const std::size_t da = positive_count(dims[0], "dims[0]");
    const std::size_t db = positive_count(dims[1], "dims[1]");
    ComplexMatrix m = matrix_from_json(doc["matrix"]);
    if (static_cast<std::size_t>(m.rows()) != da * db) {
        std::ostringstream msg;
        msg << "dims: matrix is " << m.rows() << "x" << m.cols() << " but dims " << da << "x" << db;
        throw DiscordError(ErrorCode::BadDim, msg.str());
    }
    return DensityMatrix(std::move(m), da, db);
}

DensityMatrix parse_state(const std::string& text) { return state_from_json(parse_document(text)); }

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state(read_file(path)); }

std::string format_state(const DensityMatrix& rho) { return state_to_json(rho).dump(1) + "\n"; }

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DiscordError(ErrorCode::BadInput, "cannot write " + path.string());
    out << format_state(rho);
}

ComplexMatrix parse_matrix(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("matrix")) structure_error("missing \"matrix\"");
    return matrix_from_json(doc["matrix"]);
}

ComplexMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

CorrelationRowsFile parse_correlation_rows(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) structure_error("rows document must be an object");
    for (const char* key : {"dimA", "dimB", "rows"}) {
        if (!doc.contains(key)) structure_error(std::string("missing \"") + key + "\"");
    }
    CorrelationRowsFile out;
    out.dim_a = positive_count(doc["dimA"], "dimA");
    out.dim_b = positive_count(doc["dimB"], "dimB");
    const json& rows = doc["rows"];
    if (!rows.is_array()) structure_error("\"rows\" must be an array");
    const std::size_t width = out.dim_b * out.dim_b;
    for (const json& row : rows) {
        if (!row.is_object() || !row.contains("a_index") || !row.contains("values")) {
            structure_error("each row needs \"a_index\" and \"values\"");
        }
        if (!row["a_index"].is_number_integer() || row["a_index"].get<long long>() < 0) {
            structure_error("\"a_index\" must be a nonnegative integer");
        }
        const json& values = row["values"];
        if (!values.is_array() || values.size() != width) {
            std::ostringstream msg;
            msg << "\"values\" must hold dimB² = " << width << " numbers";
            structure_error(msg.str());
        }
        CorrelationRow parsed;
        parsed.a_index = row["a_index"].get<std::size_t>();
        parsed.values.resize(static_cast<Eigen::Index>(width));
        for (std::size_t k = 0; k < width; ++k) {
            if (!values[k].is_number()) structure_error("\"values\" entries must be numbers");
            parsed.values(static_cast<Eigen::Index>(k)) = values[k].get<double>();
        }
        out.rows.push_back(std::move(parsed));
    }
    return out;
}

CorrelationRowsFile load_correlation_rows(const std::filesystem::path& path) {
    return parse_correlation_rows(read_file(path));
}

json correlation_rows_to_json(const CorrelationRowsFile& file) {
    json rows = json::array();
    for (const auto& row : file.rows) {
        rows.push_back({{"a_index", row.a_index},
                        {"values", std::vector<double>(row.values.data(), row.values.data() + row.values.size())}});
    }
    return json{{"dimA", file.dim_a}, {"dimB", file.dim_b}, {"rows", std::move(rows)}};
}

DiscordReport analyze(const DensityMatrix& rho, const AnalyzeOptions& options) {
    DiscordReport report;
    report.dim_a = rho.dim_a();
    report.dim_b = rho.dim_b();
    report.entropic_config = options.entropic;

    auto start = std::chrono::steady_clock::now();
    report.verdict = zero_discord_test(rho, options.commutator_tolerance, options.rank_tolerance);
    report.timings.zero_discord_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    report.mutual_information = mutual_information(rho);
    report.timings.mutual_information_ms = elapsed_ms(start);

    if (rho.dim_a() == 2 && rho.dim_b() == 2) {
        start = std::chrono::steady_clock::now();
        const GeometricResult g = geometric_discord_2q(rho);
        report.geometric = GeometricSummary{g.value, g.k_max, g.e_star};
        report.timings.geometric_ms = elapsed_ms(start);
    }
    if (rho.dim_a() == 2 && options.with_entropic) {
        start = std::chrono::steady_clock::now();
        report.entropic = entropic_discord_report(rho, options.entropic);
        report.timings.entropic_ms = elapsed_ms(start);
    }
    return report;
}

json report_to_json(const DiscordReport& report, bool include_timings) {
    json doc;
    doc["dims"] = {report.dim_a, report.dim_b};
    doc["rank_L"] = report.verdict.rank_l;
    doc["witness_triggered"] = report.verdict.witness_triggered;
    doc["max_commutator"] = report.verdict.max_commutator;
    doc["commutators_checked"] = report.verdict.commutators_checked;
    doc["is_zero_discord"] = report.verdict.is_zero_discord;
    doc["mutual_information"] = report.mutual_information;
    if (report.geometric) {
        const auto& g = *report.geometric;
        doc["geometric_discord"] = g.value;
        doc["geometric"] = {{"k_max", g.k_max}, {"e_star", {g.e_star(0), g.e_star(1), g.e_star(2)}}};
    }
    if (report.entropic) {
        const auto& e = *report.entropic;
        const Eigen::Vector3d& dir = e.classical.best_direction;
        doc["entropic_discord"] = e.value;
        doc["entropic"] = {
            {"raw", e.raw},
            {"classical_correlation", e.classical.value},
            {"min_conditional_entropy", e.classical.min_conditional_entropy},
            {"measurement_direction", {dir(0), dir(1), dir(2)}},
            {"optimizer",
             {{"measurement_class", "projective optimum (upper bound on discord)"},
              {"grid_points", report.entropic_config.grid_points},
              {"refine_iters", report.entropic_config.refine_iters},
              {"refine_starts", report.entropic_config.refine_starts},
              {"evaluations", e.classical.evaluations}}}};
    }
    if (include_timings) {
        doc["timings_ms"] = {{"zero_discord", report.timings.zero_discord_ms},
                             {"mutual_information", report.timings.mutual_information_ms},
                             {"geometric", report.timings.geometric_ms},
                             {"entropic", report.timings.entropic_ms}};
    }
    return doc;
}

}  // namespace qdiscord
