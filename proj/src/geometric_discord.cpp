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

#include "qdiscord/geometric_discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qdiscord/optimize.hpp"

namespace qdiscord {

namespace {

constexpr double kPointTolerance = 1e-10;

void require_two_qubits(const DensityMatrix& rho, const char* what) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2) {
        throw DiscordError(ErrorCode::BadDim, std::string(what) + ": requires a two-qubit state");
    }
}

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

std::array<Matrix2c, 3> pauli_fixed() {
    return {pauli_x(), pauli_y(), pauli_z()};
}

Matrix2c qubit_state(const Eigen::Vector3d& r) {
    static const auto s = pauli_fixed();
    return 0.5 * (Matrix2c::Identity() + r(0) * s[0] + r(1) * s[1] + r(2) * s[2]);
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Eigen::Vector3d project_to_ball(const Eigen::Vector3d& v) {
    const double n = v.norm();
    return n > 1.0 ? Eigen::Vector3d(v / n) : v;
}

// First nonzero component positive.
Eigen::Vector3d canonical_sign(Eigen::Vector3d v) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            if (v(i) < 0.0) v = -v;
            break;
        }
    }
    return v;
}

Eigen::Vector3d top_eigenvector(const Eigen::Matrix3d& k, double& k_max) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(k);
    const Eigen::Vector3d values = solver.eigenvalues();  // ascending
    k_max = values(2);
    const double tie = 1e-10 * std::max(1.0, std::abs(k_max));
    Eigen::Matrix3d projector = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) {
        if (k_max - values(i) <= tie) projector += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).transpose();
    }
    for (int i = 0; i < 3; ++i) {
        const Eigen::Vector3d candidate = projector.col(i);
        if (candidate.norm() > 1e-6) return canonical_sign(candidate.normalized());
    }
    return canonical_sign(solver.eigenvectors().col(2));
}

}  // namespace

BlochTriple bloch_triple(const DensityMatrix& rho) {
    require_two_qubits(rho, "bloch_triple");
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix one = identity(2);
    BlochTriple out;
    for (int i = 0; i < 3; ++i) {
        out.x(i) = (m * tensor(pauli(i), one)).trace().real();
        out.y(i) = (m * tensor(one, pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j) out.t(i, j) = (m * tensor(pauli(i), pauli(j))).trace().real();
    }
    return out;
}

ComplexMatrix bloch_operator(const BlochTriple& triple) {
    const ComplexMatrix one = identity(2);
    ComplexMatrix m = tensor(one, one);
    for (int i = 0; i < 3; ++i) {
        m += triple.x(i) * tensor(pauli(i), one);
        m += triple.y(i) * tensor(one, pauli(i));
        for (int j = 0; j < 3; ++j) m += triple.t(i, j) * tensor(pauli(i), pauli(j));
    }
    return 0.25 * m;
}

DensityMatrix state_from_bloch(const BlochTriple& triple) {
    return DensityMatrix(bloch_operator(triple), 2, 2);
}

ZeroDiscordPoint::ZeroDiscordPoint(Eigen::Vector3d e, double t, Eigen::Vector3d s_plus, Eigen::Vector3d s_minus)
    : e_(std::move(e)), t_(t), s_plus_(std::move(s_plus)), s_minus_(std::move(s_minus)) {
    if (std::abs(e_.norm() - 1.0) > kPointTolerance) {
        throw DiscordError(ErrorCode::OutsidePhysical, "ZeroDiscordPoint: e must be a unit vector");
    }
    if (std::abs(t_) > 1.0 + kPointTolerance) {
        throw DiscordError(ErrorCode::OutsidePhysical, "ZeroDiscordPoint: t must lie in [-1, 1]");
    }
    if ((s_plus_ + s_minus_).norm() > 1.0 + t_ + kPointTolerance ||
        (s_plus_ - s_minus_).norm() > 1.0 - t_ + kPointTolerance) {
        throw DiscordError(ErrorCode::OutsidePhysical, "ZeroDiscordPoint: conditional states are not positive");
    }
}

ZeroDiscordPoint ZeroDiscordPoint::from_ensemble(const Eigen::Vector3d& e, double t,
                                                 const Eigen::Vector3d& r1, const Eigen::Vector3d& r2) {
    const double p1 = 0.5 * (1.0 + t);
    const double p2 = 0.5 * (1.0 - t);
    return ZeroDiscordPoint(e, t, p1 * r1 + p2 * r2, p1 * r1 - p2 * r2);
}

BlochTriple ZeroDiscordPoint::bloch() const {
    BlochTriple out;
    out.x = t_ * e_;
    out.y = s_plus_;
    out.t = e_ * s_minus_.transpose();
    return out;
}

DensityMatrix ZeroDiscordPoint::density_matrix() const {
    const ComplexMatrix raw = bloch_operator(bloch());
    const Spectrum spec = eig_hermitian(raw);
    RealVector values = spec.eigenvalues.cwiseMax(0.0);
    values /= values.sum();
    const ComplexMatrix fixed = spec.eigenvectors * values.cast<Complex>().asDiagonal() * spec.eigenvectors.adjoint();
    return DensityMatrix(fixed, 2, 2);
}

GeometricResult geometric_discord_2q(const DensityMatrix& rho) {
    require_two_qubits(rho, "geometric_discord_2q");
    const BlochTriple b = bloch_triple(rho);
    const Eigen::Matrix3d k = b.x * b.x.transpose() + b.t * b.t.transpose();
    double k_max = 0.0;
    const Eigen::Vector3d e = top_eigenvector(k, k_max);
    const double value = 0.25 * (b.x.squaredNorm() + b.t.squaredNorm() - k_max);

    // Stationary point of the distance in (t, s₊, s₋) at fixed e.
    const double t = std::clamp(b.x.dot(e), -1.0, 1.0);
    ZeroDiscordPoint point(e, t, b.y, b.t.transpose() * e);
    DensityMatrix chi = point.density_matrix();
    return GeometricResult{std::max(value, 0.0), k_max, k, e, std::move(point), std::move(chi)};
}

double hs_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DiscordError(ErrorCode::DimMismatch, "hs_distance_sq: operand shapes differ");
    }
    // Tr(X²) = ‖X‖²_F for Hermitian X.
    return (a - b).squaredNorm();
}

double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b()) {
        throw DiscordError(ErrorCode::DimMismatch, "hs_distance_sq: states have different dimensions");
    }
    return hs_distance_sq(a.matrix(), b.matrix());
}

double hs_distance_sq(const BlochTriple& a, const BlochTriple& b) {
    return 0.25 * ((a.x - b.x).squaredNorm() + (a.y - b.y).squaredNorm() + (a.t - b.t).squaredNorm());
}

OracleResult geometric_discord_oracle(const DensityMatrix& rho, const OracleOptions& options) {
    require_two_qubits(rho, "geometric_discord_oracle");
    const Matrix4c target = rho.matrix();

    // 9 parameters: θ, φ, u (t = sin u), r1 (3), r2 (3).
    auto decode_chi = [](const Eigen::VectorXd& p) {
        const Eigen::Vector3d e = unit_from_angles(p(0), p(1));
        const double t = std::sin(p(2));
        const Eigen::Vector3d r1 = project_to_ball(p.segment<3>(3));
        const Eigen::Vector3d r2 = project_to_ball(p.segment<3>(6));
        const Matrix2c proj_plus = qubit_state(e);
        const Matrix2c proj_minus = qubit_state(-e);
        return Matrix4c(0.5 * (1.0 + t) * kron2(proj_plus, qubit_state(r1)) +
                        0.5 * (1.0 - t) * kron2(proj_minus, qubit_state(r2)));
    };
    const Objective objective = [&](const Eigen::VectorXd& p) {
        return (target - decode_chi(p)).squaredNorm();
    };

    OracleResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> u_dist(-1.2, 1.2);
    std::uniform_real_distribution<double> r_dist(-0.5, 0.5);

    NelderMeadOptions nm;
    nm.max_iterations = options.max_iterations;
    nm.initial_step = 0.3;
    for (std::size_t restart = 0; restart < std::max<std::size_t>(1, options.restarts); ++restart) {
        Eigen::VectorXd start(9);
        start << theta_dist(rng), phi_dist(rng), u_dist(rng), r_dist(rng), r_dist(rng), r_dist(rng), r_dist(rng),
            r_dist(rng), r_dist(rng);
        NelderMeadResult run = nelder_mead(objective, start, nm);
        best.evaluations += run.evaluations;
        NelderMeadOptions polish = nm;
        for (std::size_t round = 0; round < options.polish_rounds; ++round) {
            polish.initial_step *= 0.1;
            NelderMeadResult again = nelder_mead(objective, run.x, polish);
            best.evaluations += again.evaluations;
            if (again.value <= run.value) run = std::move(again);
        }
        if (run.value < best.value) {
            best.value = run.value;
            best.parameters = run.x;
        }
    }
    best.e = unit_from_angles(best.parameters(0), best.parameters(1));
    return best;
}

bool tetrahedron_contains(const Eigen::Vector3d& t, double tol) {
    // Eigenvalues of rho(t): ¼(1 + t·v) over the four vertices v.
    static const std::array<Eigen::Vector3d, 4> vertices = {
        Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(-1, 1, 1), Eigen::Vector3d(1, -1, 1), Eigen::Vector3d(1, 1, -1)};
    if (!t.allFinite()) return false;
    return std::all_of(vertices.begin(), vertices.end(),
                       [&](const Eigen::Vector3d& v) { return 1.0 + t.dot(v) >= -tol; });
}

bool octahedron_contains(const Eigen::Vector3d& t, double tol) {
    return t.allFinite() && t.cwiseAbs().sum() <= 1.0 + tol;
}

double bell_diagonal_discord(const Eigen::Vector3d& t) {
    if (!tetrahedron_contains(t)) {
        throw DiscordError(ErrorCode::OutsidePhysical, "bell_diagonal_discord: t lies outside the tetrahedron");
    }
    const Eigen::Vector3d sq = t.cwiseAbs2();
    return 0.25 * (sq(0) + sq(1) + sq(2) - sq.maxCoeff());
}

}  // namespace qdiscord
