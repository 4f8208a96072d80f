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

#include "qdiscord/operator_core.hpp"

namespace qdiscord {

/// Orthonormal basis of Hermitian operators on C^d under Tr(A_i A_j) = δ_ij.
///
/// Element 0 is always 1/√d. The generalized Gell-Mann basis is stored
/// implicitly (every element has at most two nonzeros), so expansions cost
/// O(d²) instead of O(d⁴); explicit bases hold their operators densely.
class HermitianBasis {
public:
    /// Normalized identity, then symmetric (j<k), antisymmetric (j<k) and
    /// diagonal (l = 1..d-1) generalized Gell-Mann operators, scaled by 1/√2.
    static HermitianBasis gell_mann(std::size_t d);

    /// Wraps an explicit operator list. Throws BadDim on a wrong count,
    /// NonHermitian, or NonOrthonormal (which also covers ops[0] ≠ 1/√d).
    static HermitianBasis from_operators(std::vector<ComplexMatrix> ops);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ * dim_; }

    ComplexMatrix op(std::size_t index) const;
    std::vector<ComplexMatrix> ops() const;

    /// c_n = Tr(x · A_n) for any square x; complex for non-Hermitian x.
    ComplexVector coefficients(const ComplexMatrix& x) const;

    /// Σ_n c_n A_n.
    ComplexMatrix synthesize(const ComplexVector& coeffs) const;

    bool operator==(const HermitianBasis& other) const;

private:
    enum class Kind { Identity, Symmetric, Antisymmetric, Diagonal };
    struct Element {
        Kind kind;
        std::size_t j;
        std::size_t k;  // Diagonal: k holds l
    };

    HermitianBasis() = default;

    std::size_t dim_ = 0;
    std::vector<Element> structured_;
    std::vector<ComplexMatrix> dense_;
};

inline HermitianBasis gell_mann_basis(std::size_t d) { return HermitianBasis::gell_mann(d); }

/// Real coefficients v_n = Tr(op · A_n) of a Hermitian operator.
/// Throws DimMismatch or NonHermitian.
RealVector expand(const ComplexMatrix& op, const HermitianBasis& basis);

/// Σ_n v_n A_n.
ComplexMatrix reconstruct(const RealVector& coeffs, const HermitianBasis& basis);

}  // namespace qdiscord
