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

#include "qdiscord/dqc1.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <sstream>

namespace qdiscord {

namespace {

constexpr double kUnitaryTolerance = 1e-9;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Dqc1Instance::Dqc1Instance(std::size_t n, double alpha, ComplexMatrix u) : n_(n), alpha_(alpha), u_(std::move(u)) {
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
        throw DiscordError(ErrorCode::BadInput, "Dqc1Instance: alpha must lie in (0, 1]");
    }
    if (n_ < 1 || n_ > kMaxDqc1Qubits) {
        std::ostringstream msg;
        msg << "Dqc1Instance: n must be in [1, " << kMaxDqc1Qubits << "]";
        throw DiscordError(ErrorCode::BadInput, msg.str());
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_);
    if (u_.rows() != d || u_.cols() != d) {
        throw DiscordError(ErrorCode::BadDim, "Dqc1Instance: unitary must be 2^n x 2^n");
    }
    if (!is_unitary(u_, kUnitaryTolerance)) {
        throw DiscordError(ErrorCode::NotUnitary, "Dqc1Instance: matrix is not unitary");
    }
}

Complex Dqc1Instance::normalized_trace() const {
    return u_.trace() / static_cast<double>(u_.rows());
}

DensityMatrix dqc1_output_state(const Dqc1Instance& inst) {
    const Eigen::Index d = inst.unitary().rows();
    ComplexMatrix m(2 * d, 2 * d);
    m.topLeftCorner(d, d).setIdentity();
    m.bottomRightCorner(d, d).setIdentity();
    m.topRightCorner(d, d) = inst.alpha() * inst.unitary().adjoint();
    m.bottomLeftCorner(d, d) = inst.alpha() * inst.unitary();
    m /= static_cast<double>(2 * d);
    return DensityMatrix(std::move(m), 2, static_cast<std::size_t>(d));
}

Complex dqc1_exact_readout(const DensityMatrix& state, double alpha) {
    if (state.dim_a() != 2 || !is_power_of_two(state.dim_b())) {
        throw DiscordError(ErrorCode::BadInput, "dqc1_exact_readout: state must have dims (2, 2^n)");
    }
    if (!(alpha > 0.0)) {
        throw DiscordError(ErrorCode::BadInput, "dqc1_exact_readout: alpha must be positive");
    }
    // ⟨σ ⊗ 1⟩ = Σ_ij σ_ji Tr(rho_ij)
    const ComplexMatrix reduced = partial_trace(state, Subsystem::A);
    const ComplexMatrix sx = pauli_x();
    const ComplexMatrix sy = pauli_y();
    const double ex = (sx * reduced).trace().real();
    const double ey = (sy * reduced).trace().real();
    return Complex(ex, ey) / alpha;
}

TraceEstimate dqc1_sample_trace(const Dqc1Instance& inst, std::uint64_t samples, RngSeed seed) {
    if (samples < 1) {
        throw DiscordError(ErrorCode::BadInput, "dqc1_sample_trace: need at least one sample");
    }
    const Complex tau = dqc1_exact_readout(dqc1_output_state(inst), inst.alpha());
    const double a = inst.alpha();
    const double p_x = std::clamp(0.5 * (1.0 + a * tau.real()), 0.0, 1.0);
    const double p_y = std::clamp(0.5 * (1.0 + a * tau.imag()), 0.0, 1.0);

    std::mt19937_64 rng(seed.value);
    std::binomial_distribution<std::uint64_t> shots_x(samples, p_x);
    std::binomial_distribution<std::uint64_t> shots_y(samples, p_y);
    const auto up_x = shots_x(rng);
    const auto up_y = shots_y(rng);

    const double m = static_cast<double>(samples);
    const double mean_x = (2.0 * static_cast<double>(up_x) - m) / m;
    const double mean_y = (2.0 * static_cast<double>(up_y) - m) / m;

    TraceEstimate out;
    out.tau_hat = Complex(mean_x, mean_y) / a;
    out.samples = samples;
    out.seed = seed;
    out.std_error = std::sqrt((1.0 - mean_x * mean_x) / m + (1.0 - mean_y * mean_y) / m) / a;
    return out;
}

bool hermitian_parts_dependent(const ComplexMatrix& u, double tol) {
    const ComplexMatrix re = 0.5 * (u + u.adjoint());
    const ComplexMatrix im = (u - u.adjoint()) / Complex(0.0, 2.0);
    const double nr = re.squaredNorm();
    const double ni = im.squaredNorm();
    if (nr == 0.0 || ni == 0.0) return true;
    const double cross = std::norm(hs_inner(re, im));
    return std::abs(nr * ni - cross) <= tol * nr * ni;
}

ClassicalityVerdict dqc1_classicality_check(const ComplexMatrix& u, double tol) {
    if (!is_unitary(u, kUnitaryTolerance)) {
        throw DiscordError(ErrorCode::NotUnitary, "dqc1_classicality_check: matrix is not unitary");
    }
    const ComplexMatrix u2 = u * u;
    const Complex c = u2.trace() / static_cast<double>(u.rows());
    const ComplexMatrix identity_part = c * ComplexMatrix::Identity(u.rows(), u.cols());

    ClassicalityVerdict out;
    out.residual = (u2 - identity_part).norm() / u2.norm();
    out.zero_discord = out.residual <= tol;
    if (out.zero_discord) {
        double phase = 0.5 * std::arg(c);
        out.phase = phase;
    }
#ifndef NDEBUG
    // Equivalent linear-dependence formulation, checked only where the
    // verdict is far from the threshold.
    if (out.residual < tol || out.residual > 1e-3) {
        assert(hermitian_parts_dependent(u, 1e-6) == out.zero_discord);
    }
#endif
    return out;
}

ComplexMatrix pauli_string(std::string_view labels) {
    if (labels.empty()) {
        throw DiscordError(ErrorCode::BadInput, "pauli_string: empty label");
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char c : labels) {
        ComplexMatrix factor;
        switch (c) {
            case 'I': factor = identity(2); break;
            case 'X': factor = pauli_x(); break;
            case 'Y': factor = pauli_y(); break;
            case 'Z': factor = pauli_z(); break;
            default: throw DiscordError(ErrorCode::BadInput, std::string("pauli_string: unknown label ") + c);
        }
        out = tensor(out, factor);
    }
    return out;
}

}  // namespace qdiscord
