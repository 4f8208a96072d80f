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

#include "qdiscord/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace qdiscord {

namespace {

constexpr std::size_t kFullSvdLimit = 1024;

// Joint-eigenbasis fallback for degenerate singular values: the weighted
// sum of commuting Hermitian operators is diagonalized and each S_n must be
// diagonal in its eigenbasis.
bool jointly_diagonalizable(const std::vector<LocalOperatorPair>& pairs, double tol) {
    if (pairs.empty()) return true;
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> weight(0.5, 1.5);
    ComplexMatrix mix = ComplexMatrix::Zero(pairs.front().s.rows(), pairs.front().s.cols());
    for (const auto& p : pairs) mix += weight(rng) * p.s;
    const Spectrum spec = eig_hermitian(mix);
    const ComplexMatrix& v = spec.eigenvectors;
    for (const auto& p : pairs) {
        ComplexMatrix rotated = v.adjoint() * p.s * v;
        const double norm = rotated.norm();
        rotated.diagonal().setZero();
        if (norm > 0.0 && rotated.norm() / norm > tol) return false;
    }
    return true;
}

}  // namespace

double RankTolerance::threshold(double largest_singular_value) const {
    return std::max(atol, rtol * largest_singular_value);
}

std::size_t numerical_rank(const RealVector& singular_values, const RankTolerance& tol) {
    if (singular_values.size() == 0) return 0;
    const double tau = tol.threshold(singular_values.maxCoeff());
    return static_cast<std::size_t>((singular_values.array() > tau).count());
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho,
                                     const HermitianBasis& basis_a,
                                     const HermitianBasis& basis_b,
                                     const RankTolerance& tol) {
    if (basis_a.dim() != rho.dim_a() || basis_b.dim() != rho.dim_b()) {
        throw DiscordError(ErrorCode::DimMismatch, "correlation_matrix: basis dimensions do not match the state");
    }
    const auto da = static_cast<Eigen::Index>(rho.dim_a());
    const auto na = static_cast<Eigen::Index>(basis_a.size());
    const auto nb = static_cast<Eigen::Index>(basis_b.size());

    // block_coeffs[i*da + j](m) = Tr(rho_ij B_m)
    std::vector<ComplexVector> block_coeffs;
    block_coeffs.reserve(static_cast<std::size_t>(da * da));
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            block_coeffs.push_back(basis_b.coefficients(
                rho.block(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
        }
    }

    // r_nm = Σ_ij (A_n)_ji Tr(rho_ij B_m) = Tr(C_m A_n)
    CorrelationMatrix cm{rho.dim_a(), rho.dim_b(), RealMatrix(na, nb), basis_a, basis_b, {}, tol};
    ComplexMatrix c_m(da, da);
    for (Eigen::Index m = 0; m < nb; ++m) {
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < da; ++j) c_m(i, j) = block_coeffs[static_cast<std::size_t>(i * da + j)](m);
        cm.r.col(m) = basis_a.coefficients(c_m).real();
    }
    cm.svd = svd_real(cm.r, basis_b.size() > kFullSvdLimit);
    return cm;
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho, const RankTolerance& tol) {
    if (rho.dim_a() < 2 || rho.dim_b() < 2) {
        throw DiscordError(ErrorCode::BadDim, "correlation_matrix: both subsystems need dimension >= 2");
    }
    return correlation_matrix(rho, gell_mann_basis(rho.dim_a()), gell_mann_basis(rho.dim_b()), tol);
}

std::size_t numerical_rank(const CorrelationMatrix& cm) {
    return numerical_rank(cm.singulars(), cm.rank_tolerance);
}

std::vector<LocalOperatorPair> local_operators(const CorrelationMatrix& cm) {
    const std::size_t rank = numerical_rank(cm);
    std::vector<LocalOperatorPair> out;
    out.reserve(rank);
    for (std::size_t n = 0; n < rank; ++n) {
        const auto col = static_cast<Eigen::Index>(n);
        LocalOperatorPair pair;
        pair.c = cm.svd.singular_values(col);
        pair.s = reconstruct(cm.svd.u.col(col), cm.basis_a);
        pair.f = reconstruct(cm.svd.w.col(col), cm.basis_b);
        out.push_back(std::move(pair));
    }
    return out;
}

DensityMatrix reconstruct_state(const CorrelationMatrix& cm) {
    const auto da = static_cast<Eigen::Index>(cm.dim_a);
    const auto db = static_cast<Eigen::Index>(cm.dim_b);
    const auto nb = cm.r.cols();

    // x_m = Σ_n r_nm A_n, then rho_ij = Σ_m (x_m)_ij B_m
    std::vector<ComplexMatrix> x;
    x.reserve(static_cast<std::size_t>(nb));
    for (Eigen::Index m = 0; m < nb; ++m) x.push_back(reconstruct(cm.r.col(m), cm.basis_a));

    ComplexMatrix rho(da * db, da * db);
    ComplexVector coeffs(nb);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            for (Eigen::Index m = 0; m < nb; ++m) coeffs(m) = x[static_cast<std::size_t>(m)](i, j);
            rho.block(i * db, j * db, db, db) = cm.basis_b.synthesize(coeffs);
        }
    }
    return DensityMatrix(std::move(rho), cm.dim_a, cm.dim_b);
}

ZeroDiscordVerdict zero_discord_test(const CorrelationMatrix& cm, double tol) {
    const std::vector<LocalOperatorPair> pairs = local_operators(cm);
    ZeroDiscordVerdict verdict;
    verdict.rank_l = pairs.size();
    verdict.witness_triggered = verdict.rank_l > cm.dim_a;

    for (std::size_t n = 0; n < pairs.size(); ++n) {
        for (std::size_t m = n + 1; m < pairs.size(); ++m) {
            const double scale = pairs[n].s.norm() * pairs[m].s.norm();
            const double value = scale > 0.0 ? commutator_norm(pairs[n].s, pairs[m].s) / scale : 0.0;
            verdict.max_commutator = std::max(verdict.max_commutator, value);
            ++verdict.commutators_checked;
        }
    }

    if (verdict.witness_triggered) return verdict;
    if (verdict.max_commutator <= tol) {
        verdict.is_zero_discord = true;
    } else if (jointly_diagonalizable(pairs, tol)) {
        verdict.is_zero_discord = true;
        verdict.accepted_by_joint_diagonalization = true;
    }
    return verdict;
}

ZeroDiscordVerdict zero_discord_test(const DensityMatrix& rho, double tol, const RankTolerance& rank_tol) {
    return zero_discord_test(correlation_matrix(rho, rank_tol), tol);
}

RowsWitness partial_rows_witness(const std::vector<CorrelationRow>& rows,
                                 std::size_t dim_a,
                                 const RankTolerance& tol) {
    if (dim_a < 2) {
        throw DiscordError(ErrorCode::BadInput, "partial_rows_witness: d_A must be at least 2");
    }
    std::set<std::size_t> seen;
    for (const auto& row : rows) {
        if (row.a_index >= dim_a * dim_a) {
            std::ostringstream msg;
            msg << "partial_rows_witness: a_index " << row.a_index << " out of range for d_A = " << dim_a;
            throw DiscordError(ErrorCode::BadInput, msg.str());
        }
        if (!seen.insert(row.a_index).second) {
            std::ostringstream msg;
            msg << "partial_rows_witness: duplicate a_index " << row.a_index;
            throw DiscordError(ErrorCode::BadInput, msg.str());
        }
        if (row.values.size() != rows.front().values.size() || row.values.size() == 0) {
            throw DiscordError(ErrorCode::BadInput, "partial_rows_witness: rows must share a nonzero length");
        }
        if (!row.values.allFinite()) {
            throw DiscordError(ErrorCode::BadInput, "partial_rows_witness: non-finite row entry");
        }
    }

    RowsWitness out;
    if (rows.empty()) return out;

    const auto cols = rows.front().values.size();
    RealMatrix stacked(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = rows[i].values.transpose();
    const RealVector all_singulars = svd_real(stacked, true).singular_values;
    out.independent_count = numerical_rank(all_singulars, tol);
    out.discord_proven = out.independent_count >= dim_a + 1;
    if (!out.discord_proven) return out;

    // Greedy certificate, measured against the full stack's threshold.
    const double tau = tol.threshold(all_singulars.maxCoeff());
    RealMatrix chosen(0, cols);
    for (std::size_t i = 0; i < rows.size() && out.certifying_rows.size() < dim_a + 1; ++i) {
        RealMatrix candidate(chosen.rows() + 1, cols);
        candidate.topRows(chosen.rows()) = chosen;
        candidate.bottomRows(1) = rows[i].values.transpose();
        const RealVector c = svd_real(candidate, true).singular_values;
        if (static_cast<Eigen::Index>((c.array() > tau).count()) == candidate.rows()) {
            chosen = std::move(candidate);
            out.certifying_rows.push_back(rows[i].a_index);
        }
    }
    return out;
}

}  // namespace qdiscord
