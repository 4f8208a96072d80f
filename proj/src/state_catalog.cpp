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

#include "qdiscord/state_catalog.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qdiscord/geometric_discord.hpp"

namespace qdiscord {

namespace {

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed) {
    std::mt19937_64 rng(seed.value);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

ComplexMatrix ket_projector(const ComplexVector& ket) { return ket * ket.adjoint(); }

ComplexVector basis_ket(std::size_t d, std::size_t k) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
}

}  // namespace

DensityMatrix bell_diagonal_state(const Eigen::Vector3d& t) {
    if (!tetrahedron_contains(t)) {
        std::ostringstream msg;
        msg << "bell_diagonal_state: t = (" << t(0) << ", " << t(1) << ", " << t(2)
            << ") lies outside the tetrahedron";
        throw DiscordError(ErrorCode::OutsidePhysical, msg.str());
    }
    ComplexMatrix m = identity(4);
    for (int i = 0; i < 3; ++i) m += t(i) * tensor(pauli(i), pauli(i));
    return DensityMatrix(0.25 * m, 2, 2);
}

Eigen::Vector3d bell_state_t(int index) {
    switch (index) {
        case 0: return {1.0, -1.0, 1.0};
        case 1: return {-1.0, 1.0, 1.0};
        case 2: return {1.0, 1.0, -1.0};
        case 3: return {-1.0, -1.0, -1.0};
        default: throw DiscordError(ErrorCode::BadIndex, "bell_state: index must be 0..3");
    }
}

DensityMatrix bell_state(int index) {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector ket = ComplexVector::Zero(4);
    switch (index) {
        case 0: ket(0) = h; ket(3) = h; break;
        case 1: ket(0) = h; ket(3) = -h; break;
        case 2: ket(1) = h; ket(2) = h; break;
        case 3: ket(1) = h; ket(2) = -h; break;
        default: throw DiscordError(ErrorCode::BadIndex, "bell_state: index must be 0..3");
    }
    return pure_state(ket, 2, 2);
}

DensityMatrix four_nonorthogonal_state() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector zero = basis_ket(2, 0);
    ComplexVector one = basis_ket(2, 1);
    ComplexVector plus(2), minus(2);
    plus << h, h;
    minus << h, -h;
    const ComplexMatrix m = tensor(ket_projector(zero), ket_projector(plus)) +
                            tensor(ket_projector(one), ket_projector(minus)) +
                            tensor(ket_projector(plus), ket_projector(one)) +
                            tensor(ket_projector(minus), ket_projector(zero));
    return DensityMatrix(0.25 * m, 2, 2);
}

DensityMatrix facet_state(int s1, int s2, int s3) {
    for (int s : {s1, s2, s3}) {
        if (s != 1 && s != -1) {
            throw DiscordError(ErrorCode::BadInput, "facet_state: signs must be +1 or -1");
        }
    }
    return bell_diagonal_state(Eigen::Vector3d(s1, s2, s3) / 3.0);
}

DensityMatrix classical_quantum_state(const std::vector<double>& p,
                                      const ComplexMatrix& kets,
                                      const std::vector<DensityMatrix>& states) {
    if (p.empty() || p.size() != states.size() || static_cast<std::size_t>(kets.cols()) != p.size()) {
        throw DiscordError(ErrorCode::BadInput,
                           "classical_quantum_state: need one ket and one state per probability");
    }
    double total = 0.0;
    for (double pk : p) {
        if (!(pk >= 0.0)) {
            throw DiscordError(ErrorCode::BadProbabilities, "classical_quantum_state: negative probability");
        }
        total += pk;
    }
    if (std::abs(total - 1.0) > kStateTolerance) {
        throw DiscordError(ErrorCode::BadProbabilities, "classical_quantum_state: probabilities must sum to 1");
    }
    const auto gram = kets.adjoint() * kets;
    if ((gram - ComplexMatrix::Identity(kets.cols(), kets.cols())).norm() > kStateTolerance) {
        throw DiscordError(ErrorCode::NonOrthonormal, "classical_quantum_state: kets are not orthonormal");
    }
    const std::size_t db = states.front().dim();
    for (const auto& s : states) {
        if (s.dim() != db) {
            throw DiscordError(ErrorCode::DimMismatch, "classical_quantum_state: B states differ in dimension");
        }
    }
    const auto da = static_cast<std::size_t>(kets.rows());
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(da * db), static_cast<Eigen::Index>(da * db));
    for (std::size_t k = 0; k < p.size(); ++k) {
        m += p[k] * tensor(ket_projector(kets.col(static_cast<Eigen::Index>(k))), states[k].matrix());
    }
    return DensityMatrix(std::move(m), da, db);
}

DensityMatrix classical_pair_state() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix(std::move(m), 2, 2);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()), a.dim(), b.dim());
}

DensityMatrix pure_state(const ComplexVector& ket, std::size_t dim_a, std::size_t dim_b) {
    if (static_cast<std::size_t>(ket.size()) != dim_a * dim_b) {
        throw DiscordError(ErrorCode::DimMismatch, "pure_state: ket length does not match dims");
    }
    if (std::abs(ket.norm() - 1.0) > kStateTolerance) {
        throw DiscordError(ErrorCode::BadKet, "pure_state: ket is not normalized");
    }
    return DensityMatrix(ket_projector(ket), dim_a, dim_b);
}

DensityMatrix random_density_matrix(std::size_t dim_a, std::size_t dim_b, RngSeed seed) {
    if (dim_a < 2 || dim_b < 2) {
        throw DiscordError(ErrorCode::BadDim, "random_density_matrix: both dims must be at least 2");
    }
    const ComplexMatrix g = gaussian_matrix(dim_a * dim_b, dim_a * dim_b, seed);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(std::move(m), dim_a, dim_b);
}

DensityMatrix random_single_state(std::size_t d, RngSeed seed) {
    if (d < 1) {
        throw DiscordError(ErrorCode::BadDim, "random_single_state: dimension must be positive");
    }
    const ComplexMatrix g = gaussian_matrix(d, d, seed);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix::single(std::move(m));
}

ComplexMatrix random_unitary(std::size_t d, RngSeed seed) {
    if (d < 1) {
        throw DiscordError(ErrorCode::BadDim, "random_unitary: dimension must be positive");
    }
    const ComplexMatrix g = gaussian_matrix(d, d, seed);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexMatrix u = q;
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        u.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
    }
    return u;
}

DensityMatrix measure_prepare_channel_a(const DensityMatrix& rho,
                                        const ComplexVector& psi0,
                                        const ComplexVector& psi1) {
    if (rho.dim_a() != 2) {
        throw DiscordError(ErrorCode::BadDim, "measure_prepare_channel_a: subsystem A must be a qubit");
    }
    for (const auto* ket : {&psi0, &psi1}) {
        if (ket->size() != 2 || !ket->allFinite() || std::abs(ket->norm() - 1.0) > kStateTolerance) {
            throw DiscordError(ErrorCode::BadKet, "measure_prepare_channel_a: kets must be normalized qubit states");
        }
    }
    const ComplexMatrix m = tensor(ket_projector(psi0), rho.block(0, 0)) +
                            tensor(ket_projector(psi1), rho.block(1, 1));
    return DensityMatrix(m, rho.dim_a(), rho.dim_b());
}

}  // namespace qdiscord
