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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qdiscord/error.hpp"

namespace qdiscord {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { A, B };

// Validation slack shared by every density-matrix check.
inline constexpr double kStateTolerance = 1e-10;

/// A bipartite density matrix on C^dimA ⊗ C^dimB.
///
/// Construction validates Hermiticity, unit trace and positivity, each
/// within kStateTolerance. The first tensor factor is subsystem A, so the
/// matrix is laid out as dimA × dimA blocks of size dimB.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix mat, std::size_t dim_a, std::size_t dim_b);

    /// Single-system state, stored as dimA = d, dimB = 1.
    static DensityMatrix single(ComplexMatrix mat);

    std::size_t dim_a() const noexcept { return dim_a_; }
    std::size_t dim_b() const noexcept { return dim_b_; }
    std::size_t dim() const noexcept { return dim_a_ * dim_b_; }
    const ComplexMatrix& matrix() const noexcept { return mat_; }

    /// Block (i, j) of the A index: (<i| ⊗ 1) rho (|j> ⊗ 1).
    ComplexMatrix block(std::size_t i, std::size_t j) const;

private:
    ComplexMatrix mat_;
    std::size_t dim_a_;
    std::size_t dim_b_;
};

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;  // column i pairs with eigenvalues[i]
};

struct RealSvd {
    RealMatrix u;               // left singular vectors as columns
    RealVector singular_values; // descending, nonnegative
    RealMatrix w;               // right singular vectors as columns
};

ComplexMatrix identity(std::size_t d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// sigma_1, sigma_2, sigma_3 by index 0..2.
ComplexMatrix pauli(int index);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Reduced state of the kept subsystem, as a validated single-system state.
DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep);

/// Throws NonHermitian if ‖h − h†‖_F exceeds 1e-9 · max(1, ‖h‖_F).
Spectrum eig_hermitian(const ComplexMatrix& h);

RealVector eigenvalues_hermitian(const ComplexMatrix& h);

/// r = u · diag(c) · wᵀ. With thin = true only min(rows, cols) singular
/// vector columns are kept, which is what large correlation matrices need.
RealSvd svd_real(const RealMatrix& r, bool thin = false);

/// Entropy in bits of a nonnegative spectrum that sums to one.
double shannon_entropy_bits(const RealVector& probabilities);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const ComplexMatrix& rho);

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a† b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& u, double tol);

/// (u ⊗ v) rho (u ⊗ v)†.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho,
                                    const ComplexMatrix& u,
                                    const ComplexMatrix& v);

/// Exchanges the roles of A and B.
DensityMatrix swap_subsystems(const DensityMatrix& rho);

}  // namespace qdiscord
