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

#include "qdiscord/hermitian_basis.hpp"

#include <cmath>
#include <sstream>

namespace qdiscord {

namespace {

constexpr double kBasisTolerance = 1e-12;
const Complex kI(0.0, 1.0);

}  // namespace

HermitianBasis HermitianBasis::gell_mann(std::size_t d) {
    if (d < 2) {
        throw DiscordError(ErrorCode::BadDim, "gell_mann_basis: dimension must be at least 2");
    }
    HermitianBasis basis;
    basis.dim_ = d;
    basis.structured_.reserve(d * d);
    basis.structured_.push_back({Kind::Identity, 0, 0});
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) basis.structured_.push_back({Kind::Symmetric, j, k});
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) basis.structured_.push_back({Kind::Antisymmetric, j, k});
    for (std::size_t l = 1; l < d; ++l) basis.structured_.push_back({Kind::Diagonal, 0, l});
    return basis;
}

HermitianBasis HermitianBasis::from_operators(std::vector<ComplexMatrix> ops) {
    if (ops.empty()) {
        throw DiscordError(ErrorCode::BadDim, "from_operators: empty operator list");
    }
    const auto d = static_cast<std::size_t>(ops.front().rows());
    if (d < 2 || ops.size() != d * d) {
        throw DiscordError(ErrorCode::BadDim, "from_operators: need d² operators of size d ≥ 2");
    }
    for (const auto& op : ops) {
        if (static_cast<std::size_t>(op.rows()) != d || static_cast<std::size_t>(op.cols()) != d) {
            throw DiscordError(ErrorCode::DimMismatch, "from_operators: operator size mismatch");
        }
        if ((op - op.adjoint()).norm() > kBasisTolerance) {
            throw DiscordError(ErrorCode::NonHermitian, "from_operators: operator is not Hermitian");
        }
    }
    const ComplexMatrix normalized_identity = identity(d) / std::sqrt(static_cast<double>(d));
    if ((ops.front() - normalized_identity).norm() > kBasisTolerance) {
        throw DiscordError(ErrorCode::NonOrthonormal, "from_operators: first operator must be 1/sqrt(d)");
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i; j < ops.size(); ++j) {
            const Complex g = (ops[i] * ops[j]).trace();
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > kBasisTolerance) {
                std::ostringstream msg;
                msg << "from_operators: Tr(A_" << i << " A_" << j << ") = " << g.real();
                throw DiscordError(ErrorCode::NonOrthonormal, msg.str());
            }
        }
    }
    HermitianBasis basis;
    basis.dim_ = d;
    basis.dense_ = std::move(ops);
    return basis;
}

ComplexMatrix HermitianBasis::op(std::size_t index) const {
    if (index >= size()) {
        throw DiscordError(ErrorCode::BadIndex, "HermitianBasis::op: index out of range");
    }
    if (!dense_.empty()) return dense_[index];
    ComplexVector unit = ComplexVector::Zero(static_cast<Eigen::Index>(size()));
    unit(static_cast<Eigen::Index>(index)) = 1.0;
    return synthesize(unit);
}

std::vector<ComplexMatrix> HermitianBasis::ops() const {
    std::vector<ComplexMatrix> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(op(i));
    return out;
}

ComplexVector HermitianBasis::coefficients(const ComplexMatrix& x) const {
    const auto d = static_cast<Eigen::Index>(dim_);
    if (x.rows() != d || x.cols() != d) {
        throw DiscordError(ErrorCode::DimMismatch, "HermitianBasis::coefficients: operator size mismatch");
    }
    ComplexVector c(static_cast<Eigen::Index>(size()));
    if (!dense_.empty()) {
        for (std::size_t n = 0; n < dense_.size(); ++n) {
            // Tr(x A) = Σ_ab x_ab A_ba
            c(static_cast<Eigen::Index>(n)) = x.cwiseProduct(dense_[n].transpose()).sum();
        }
        return c;
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t n = 0; n < structured_.size(); ++n) {
        const Element& e = structured_[n];
        const auto j = static_cast<Eigen::Index>(e.j);
        const auto k = static_cast<Eigen::Index>(e.k);
        Complex value;
        switch (e.kind) {
            case Kind::Identity:
                value = x.trace() / std::sqrt(static_cast<double>(dim_));
                break;
            case Kind::Symmetric:
                value = (x(k, j) + x(j, k)) * inv_sqrt2;
                break;
            case Kind::Antisymmetric:
                value = (-kI * x(k, j) + kI * x(j, k)) * inv_sqrt2;
                break;
            case Kind::Diagonal: {
                const double l = static_cast<double>(e.k);
                Complex acc = 0.0;
                for (Eigen::Index m = 0; m < k; ++m) acc += x(m, m);
                acc -= l * x(k, k);
                value = acc / std::sqrt(l * (l + 1.0));
                break;
            }
        }
        c(static_cast<Eigen::Index>(n)) = value;
    }
    return c;
}

ComplexMatrix HermitianBasis::synthesize(const ComplexVector& coeffs) const {
    if (static_cast<std::size_t>(coeffs.size()) != size()) {
        throw DiscordError(ErrorCode::DimMismatch, "HermitianBasis::synthesize: coefficient count mismatch");
    }
    const auto d = static_cast<Eigen::Index>(dim_);
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    if (!dense_.empty()) {
        for (std::size_t n = 0; n < dense_.size(); ++n) out += coeffs(static_cast<Eigen::Index>(n)) * dense_[n];
        return out;
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t n = 0; n < structured_.size(); ++n) {
        const Complex c = coeffs(static_cast<Eigen::Index>(n));
        if (c == Complex(0.0, 0.0)) continue;
        const Element& e = structured_[n];
        const auto j = static_cast<Eigen::Index>(e.j);
        const auto k = static_cast<Eigen::Index>(e.k);
        switch (e.kind) {
            case Kind::Identity:
                out.diagonal().array() += c / std::sqrt(static_cast<double>(dim_));
                break;
            case Kind::Symmetric:
                out(j, k) += c * inv_sqrt2;
                out(k, j) += c * inv_sqrt2;
                break;
            case Kind::Antisymmetric:
                out(j, k) += -kI * c * inv_sqrt2;
                out(k, j) += kI * c * inv_sqrt2;
                break;
            case Kind::Diagonal: {
                const double l = static_cast<double>(e.k);
                const Complex scaled = c / std::sqrt(l * (l + 1.0));
                for (Eigen::Index m = 0; m < k; ++m) out(m, m) += scaled;
                out(k, k) -= l * scaled;
                break;
            }
        }
    }
    return out;
}

bool HermitianBasis::operator==(const HermitianBasis& other) const {
    if (dim_ != other.dim_) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (op(i) != other.op(i)) return false;
    }
    return true;
}

RealVector expand(const ComplexMatrix& op, const HermitianBasis& basis) {
    const auto d = static_cast<Eigen::Index>(basis.dim());
    if (op.rows() != d || op.cols() != d) {
        throw DiscordError(ErrorCode::DimMismatch, "expand: operator size does not match basis");
    }
    if (!is_hermitian(op, 1e-10)) {
        throw DiscordError(ErrorCode::NonHermitian, "expand: operator is not Hermitian");
    }
    return basis.coefficients(op).real();
}

ComplexMatrix reconstruct(const RealVector& coeffs, const HermitianBasis& basis) {
    return basis.synthesize(coeffs.cast<Complex>());
}

}  // namespace qdiscord
