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

#include "qdiscord/entropic_discord.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qdiscord/optimize.hpp"

namespace qdiscord {

namespace {

constexpr double kMeasurementTolerance = 1e-10;
constexpr double kOutcomeCutoff = 1e-12;

// −Σ λ log₂ λ + p log₂ p for an unnormalized conditional block of trace p,
// i.e. p · H(block / p).
double weighted_conditional_entropy(const ComplexMatrix& block) {
    const RealVector lambda = eigenvalues_hermitian(block);
    const double p = lambda.sum();
    if (p < kOutcomeCutoff) return 0.0;
    double h = 0.0;
    for (double l : lambda) {
        if (l > kOutcomeCutoff * p) h -= l * std::log2(l / p);
    }
    return std::max(h, 0.0);
}

// Precomputed A-blocks for repeated qubit-measurement evaluations.
class ConditionalEntropyObjective {
public:
    explicit ConditionalEntropyObjective(const DensityMatrix& rho)
        : b00_(rho.block(0, 0)), b01_(rho.block(0, 1)), b10_(rho.block(1, 0)), b11_(rho.block(1, 1)),
          rho_b_(b00_ + b11_) {}

    double operator()(const Eigen::Vector3d& e) const {
        // X_+ = Σ_ij (Π_+)_ji rho_ij with Π_+ = (1 + e·σ)/2
        const Complex p00 = 0.5 * (1.0 + e.z());
        const Complex p11 = 0.5 * (1.0 - e.z());
        const Complex p01(0.5 * e.x(), -0.5 * e.y());
        const Complex p10(0.5 * e.x(), 0.5 * e.y());
        const ComplexMatrix plus = p00 * b00_ + p10 * b01_ + p01 * b10_ + p11 * b11_;
        const ComplexMatrix minus = rho_b_ - plus;
        return weighted_conditional_entropy(plus) + weighted_conditional_entropy(minus);
    }

private:
    ComplexMatrix b00_, b01_, b10_, b11_;
    ComplexMatrix rho_b_;
};

}  // namespace

MeasurementA::MeasurementA(std::vector<ComplexMatrix> projectors) : projectors_(std::move(projectors)) {
    if (projectors_.empty()) {
        throw DiscordError(ErrorCode::BadInput, "MeasurementA: no projectors");
    }
    const auto d = projectors_.front().rows();
    if (static_cast<std::size_t>(d) != projectors_.size()) {
        throw DiscordError(ErrorCode::BadInput, "MeasurementA: need exactly d rank-1 projectors");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : projectors_) {
        if (p.rows() != d || p.cols() != d) {
            throw DiscordError(ErrorCode::DimMismatch, "MeasurementA: projector size mismatch");
        }
        if ((p * p - p).norm() > kMeasurementTolerance || (p - p.adjoint()).norm() > kMeasurementTolerance ||
            std::abs(p.trace() - Complex(1.0, 0.0)) > kMeasurementTolerance) {
            throw DiscordError(ErrorCode::BadInput, "MeasurementA: element is not a rank-1 projector");
        }
        sum += p;
    }
    if ((sum - ComplexMatrix::Identity(d, d)).norm() > kMeasurementTolerance) {
        throw DiscordError(ErrorCode::BadInput, "MeasurementA: projectors do not sum to the identity");
    }
}

MeasurementA MeasurementA::from_bloch(const Eigen::Vector3d& e) {
    const Eigen::Vector3d u = e.normalized();
    ComplexMatrix n = u(0) * pauli_x() + u(1) * pauli_y() + u(2) * pauli_z();
    return MeasurementA({0.5 * (identity(2) + n), 0.5 * (identity(2) - n)});
}

MeasurementA MeasurementA::from_kets(const ComplexMatrix& kets) {
    std::vector<ComplexMatrix> projectors;
    for (Eigen::Index k = 0; k < kets.cols(); ++k) projectors.push_back(kets.col(k) * kets.col(k).adjoint());
    return MeasurementA(std::move(projectors));
}

double mutual_information(const DensityMatrix& rho) {
    const double h_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double h_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    return h_a + h_b - von_neumann_entropy(rho);
}

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho, const MeasurementA& m) {
    if (m.dim() != rho.dim_a()) {
        throw DiscordError(ErrorCode::DimMismatch, "conditional_ensemble: measurement does not act on A");
    }
    const auto da = static_cast<Eigen::Index>(rho.dim_a());
    const auto db = static_cast<Eigen::Index>(rho.dim_b());
    ConditionalEnsemble out;
    for (std::size_t k = 0; k < m.projectors().size(); ++k) {
        const ComplexMatrix& proj = m.projectors()[k];
        ComplexMatrix x = ComplexMatrix::Zero(db, db);
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < da; ++j) {
                if (proj(j, i) != Complex(0.0, 0.0))
                    x += proj(j, i) * rho.block(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        const double p = x.trace().real();
        if (p < kOutcomeCutoff) continue;
        out.outcomes.push_back(k);
        out.probs.push_back(p);
        out.states.push_back(DensityMatrix::single(x / p));
    }
    return out;
}

double conditional_entropy(const DensityMatrix& rho, const Eigen::Vector3d& e) {
    if (rho.dim_a() != 2) {
        throw DiscordError(ErrorCode::Unsupported, "conditional_entropy: qubit measurements need d_A = 2");
    }
    return ConditionalEntropyObjective(rho)(e.normalized());
}

ClassicalCorrelation classical_correlation_qa(const DensityMatrix& rho, const EntropicConfig& cfg) {
    if (rho.dim_a() != 2) {
        throw DiscordError(ErrorCode::Unsupported,
                           "classical_correlation_qa: measurement optimization is implemented for d_A = 2 only");
    }
    const ConditionalEntropyObjective objective(rho);
    ClassicalCorrelation out;

    const std::vector<Eigen::Vector3d> grid = fibonacci_sphere(std::max<std::size_t>(1, cfg.grid_points));
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = objective(grid[i]);
    out.evaluations = grid.size();

    // Ties resolve toward the lower lattice index.
    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    double best = values[order.front()];
    Eigen::Vector3d best_e = grid[order.front()];

    const Objective angular = [&](const Eigen::VectorXd& p) { return objective(unit_from_angles(p(0), p(1))); };
    NelderMeadOptions nm;
    nm.max_iterations = cfg.refine_iters;
    nm.initial_step = 0.05;
    nm.x_tol = 1e-9;
    const std::size_t starts = std::min(cfg.refine_starts, order.size());
    for (std::size_t s = 0; s < starts && cfg.refine_iters > 0; ++s) {
        const Eigen::Vector2d angles = angles_from_unit(grid[order[s]]);
        const NelderMeadResult run = nelder_mead(angular, Eigen::VectorXd(angles), nm);
        out.evaluations += run.evaluations;
        if (run.value < best) {
            best = run.value;
            best_e = unit_from_angles(run.x(0), run.x(1));
        }
    }

    out.min_conditional_entropy = best;
    out.best_direction = best_e;
    out.value = von_neumann_entropy(partial_trace(rho, Subsystem::B)) - best;
    return out;
}

EntropicDiscordResult entropic_discord_report(const DensityMatrix& rho, const EntropicConfig& cfg) {
    EntropicDiscordResult out;
    out.classical = classical_correlation_qa(rho, cfg);
    out.mutual_information = mutual_information(rho);
    out.raw = out.mutual_information - out.classical.value;
    out.value = std::max(out.raw, 0.0);
    return out;
}

double entropic_discord(const DensityMatrix& rho, const EntropicConfig& cfg) {
    return entropic_discord_report(rho, cfg).value;
}

}  // namespace qdiscord
