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

#include <cstdint>

#include <Eigen/Dense>

#include "qdiscord/operator_core.hpp"

namespace qdiscord {

/// Two-qubit Bloch data: rho = ¼(1⊗1 + x·σ⊗1 + 1⊗y·σ + Σ T_ij σ_i⊗σ_j).
struct BlochTriple {
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    Eigen::Vector3d y = Eigen::Vector3d::Zero();
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// Throws BadDim unless d_A = d_B = 2.
BlochTriple bloch_triple(const DensityMatrix& rho);

/// Unvalidated operator built from the Bloch expansion.
ComplexMatrix bloch_operator(const BlochTriple& triple);

/// Validated state built from the Bloch expansion.
DensityMatrix state_from_bloch(const BlochTriple& triple);

/// A point of the two-qubit zero-discord set:
/// chi = p₁ Π_e ⊗ ρ₁ + p₂ Π_{-e} ⊗ ρ₂ with t = p₁ − p₂ and
/// s± = Bloch vector of p₁ρ₁ ± p₂ρ₂, i.e. Bloch triple (t·e, s₊, e·s₋ᵀ).
class ZeroDiscordPoint {
public:
    /// Throws OutsidePhysical unless ‖e‖ = 1, |t| ≤ 1 and both conditional
    /// blocks are positive (‖s₊ ± s₋‖ ≤ 1 ± t), within 1e-10.
    ZeroDiscordPoint(Eigen::Vector3d e, double t, Eigen::Vector3d s_plus, Eigen::Vector3d s_minus);

    /// From ensemble data: weight (1+t)/2 on Bloch ball point r1 along +e,
    /// (1−t)/2 on r2 along −e.
    static ZeroDiscordPoint from_ensemble(const Eigen::Vector3d& e, double t,
                                          const Eigen::Vector3d& r1, const Eigen::Vector3d& r2);

    const Eigen::Vector3d& e() const noexcept { return e_; }
    double t() const noexcept { return t_; }
    const Eigen::Vector3d& s_plus() const noexcept { return s_plus_; }
    const Eigen::Vector3d& s_minus() const noexcept { return s_minus_; }

    BlochTriple bloch() const;
    /// Eigenvalues are clamped at −1e-12 and the trace renormalized.
    DensityMatrix density_matrix() const;

private:
    Eigen::Vector3d e_;
    double t_;
    Eigen::Vector3d s_plus_;
    Eigen::Vector3d s_minus_;
};

struct GeometricResult {
    double value = 0.0;
    double k_max = 0.0;
    Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
    Eigen::Vector3d e_star = Eigen::Vector3d::UnitX();
    ZeroDiscordPoint point;
    DensityMatrix chi_star;
};

/// Closed-form geometric discord ¼(‖x‖² + ‖T‖² − k_max) with
/// K = x xᵀ + T Tᵀ, and the nearest zero-discord state built from
/// t = x·e, s₊ = y, s₋ = Tᵀe at the top eigenvector e of K.
///
/// A degenerate top eigenvalue is resolved by projecting the standard basis
/// vectors (lowest index first) onto the top eigenspace, then making the
/// first nonzero component positive.
GeometricResult geometric_discord_2q(const DensityMatrix& rho);

/// Tr(a − b)²; throws DimMismatch.
double hs_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b);

/// ¼(‖Δx‖² + ‖Δy‖² + ‖ΔT‖²_F), the Bloch-coordinate form of the same distance.
double hs_distance_sq(const BlochTriple& a, const BlochTriple& b);

struct OracleOptions {
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 3000;
    /// Each restart re-seeds a fresh simplex at its own optimum this many times.
    std::size_t polish_rounds = 2;
};

struct OracleResult {
    double value = 0.0;
    Eigen::VectorXd parameters;
    Eigen::Vector3d e = Eigen::Vector3d::UnitZ();
    std::size_t evaluations = 0;
};

/// Direct numerical minimum of ‖rho − chi‖² over the zero-discord set,
/// parametrized by e (polar angles), t = sin(u), and two Bloch-ball points.
/// Independent of the closed form: it only ever evaluates distances to
/// explicit zero-discord states.
OracleResult geometric_discord_oracle(const DensityMatrix& rho, const OracleOptions& options = {});

bool tetrahedron_contains(const Eigen::Vector3d& t, double tol = 1e-12);
bool octahedron_contains(const Eigen::Vector3d& t, double tol = 1e-12);

/// ¼(t₁² + t₂² + t₃² − max tᵢ²); throws OutsidePhysical outside the tetrahedron.
double bell_diagonal_discord(const Eigen::Vector3d& t);

}  // namespace qdiscord
