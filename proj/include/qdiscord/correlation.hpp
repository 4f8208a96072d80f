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

#include "qdiscord/hermitian_basis.hpp"
#include "qdiscord/operator_core.hpp"

namespace qdiscord {

/// Singular values above max(atol, rtol · c_1) count toward the rank.
struct RankTolerance {
    double atol = 1e-10;
    double rtol = 1e-9;

    double threshold(double largest_singular_value) const;
};

inline constexpr double kDefaultCommutatorTolerance = 1e-9;

std::size_t numerical_rank(const RealVector& singular_values, const RankTolerance& tol = {});

/// Expansion coefficients r_nm = Tr[rho (A_n ⊗ B_m)] together with their SVD.
///
/// svd.u and svd.w are square orthogonal when d_B² ≤ 1024; for larger
/// B-side operator spaces only the first d_A² right singular vectors are
/// kept.
struct CorrelationMatrix {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    RealMatrix r;
    HermitianBasis basis_a;
    HermitianBasis basis_b;
    RealSvd svd;
    RankTolerance rank_tolerance;

    const RealVector& singulars() const noexcept { return svd.singular_values; }
};

/// c · S ⊗ F term of the rotated expansion rho = Σ_n c_n S_n ⊗ F_n.
struct LocalOperatorPair {
    double c = 0.0;
    ComplexMatrix s;  // on A
    ComplexMatrix f;  // on B
};

struct ZeroDiscordVerdict {
    bool is_zero_discord = false;
    std::size_t rank_l = 0;
    double max_commutator = 0.0;
    bool witness_triggered = false;
    std::size_t commutators_checked = 0;
    /// The pairwise test failed but a joint eigenbasis of the retained S_n
    /// was found (degenerate singular values only).
    bool accepted_by_joint_diagonalization = false;
};

CorrelationMatrix correlation_matrix(const DensityMatrix& rho,
                                     const HermitianBasis& basis_a,
                                     const HermitianBasis& basis_b,
                                     const RankTolerance& tol = {});

/// Uses generalized Gell-Mann bases on both sides.
CorrelationMatrix correlation_matrix(const DensityMatrix& rho, const RankTolerance& tol = {});

std::size_t numerical_rank(const CorrelationMatrix& cm);

std::vector<LocalOperatorPair> local_operators(const CorrelationMatrix& cm);

DensityMatrix reconstruct_state(const CorrelationMatrix& cm);

/// Zero discord on A iff rank L ≤ d_A and every pair of retained S_n
/// commutes, with commutators normalized by ‖S_n‖_F ‖S_m‖_F.
ZeroDiscordVerdict zero_discord_test(const CorrelationMatrix& cm,
                                     double tol = kDefaultCommutatorTolerance);
ZeroDiscordVerdict zero_discord_test(const DensityMatrix& rho,
                                     double tol = kDefaultCommutatorTolerance,
                                     const RankTolerance& rank_tol = {});

struct CorrelationRow {
    std::size_t a_index = 0;
    RealVector values;  // length d_B²
};

struct RowsWitness {
    bool discord_proven = false;
    std::size_t independent_count = 0;
    /// a_index values of d_A + 1 independent rows, when proven.
    std::vector<std::size_t> certifying_rows;
};

/// Discord is certified once d_A + 1 linearly independent rows of the
/// correlation matrix are known. Throws BadInput on duplicate or
/// out-of-range a_index, ragged rows, or non-finite values.
RowsWitness partial_rows_witness(const std::vector<CorrelationRow>& rows,
                                 std::size_t dim_a,
                                 const RankTolerance& tol = {});

}  // namespace qdiscord
