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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qdiscord/operator_core.hpp"

namespace qdiscord {

/// Rank-1 von Neumann measurement on subsystem A.
class MeasurementA {
public:
    /// Throws BadInput unless every projector is rank-1 idempotent and they
    /// sum to the identity, within 1e-10.
    explicit MeasurementA(std::vector<ComplexMatrix> projectors);

    /// Qubit measurement Π± = (1 ± e·σ)/2.
    static MeasurementA from_bloch(const Eigen::Vector3d& e);

    /// |ψ_k⟩⟨ψ_k| for the orthonormal columns of `kets`.
    static MeasurementA from_kets(const ComplexMatrix& kets);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(projectors_.front().rows()); }
    const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }

private:
    std::vector<ComplexMatrix> projectors_;
};

struct ConditionalEnsemble {
    std::vector<std::size_t> outcomes;  // outcomes with p_k < 1e-12 are omitted
    std::vector<double> probs;
    std::vector<DensityMatrix> states;
};

/// I = H(rho_A) + H(rho_B) − H(rho), in bits.
double mutual_information(const DensityMatrix& rho);

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho, const MeasurementA& m);

/// Σ_k p_k H(rho_{B|k}) for the qubit measurement along e (d_A = 2).
double conditional_entropy(const DensityMatrix& rho, const Eigen::Vector3d& e);

struct EntropicConfig {
    std::size_t grid_points = 2048;
    std::size_t refine_iters = 200;
    std::size_t refine_starts = 8;
};

struct ClassicalCorrelation {
    double value = 0.0;                 // Q_A
    double min_conditional_entropy = 0.0;
    Eigen::Vector3d best_direction = Eigen::Vector3d::UnitZ();
    std::size_t evaluations = 0;
};

/// Q_A = H(rho_B) − min Σ p_k H(rho_{B|k}) over projective qubit
/// measurements: a Fibonacci grid on the Bloch sphere followed by simplex
/// refinement from the best grid points. Throws Unsupported for d_A ≠ 2.
ClassicalCorrelation classical_correlation_qa(const DensityMatrix& rho, const EntropicConfig& cfg = {});

struct EntropicDiscordResult {
    double value = 0.0;  // max(raw, 0)
    double raw = 0.0;    // I − Q_A
    double mutual_information = 0.0;
    ClassicalCorrelation classical;
};

/// Projective optimum, hence an upper bound on the POVM-optimized discord.
EntropicDiscordResult entropic_discord_report(const DensityMatrix& rho, const EntropicConfig& cfg = {});
double entropic_discord(const DensityMatrix& rho, const EntropicConfig& cfg = {});

}  // namespace qdiscord
