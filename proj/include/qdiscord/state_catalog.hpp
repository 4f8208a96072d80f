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
#include <vector>

#include <Eigen/Dense>

#include "qdiscord/operator_core.hpp"

namespace qdiscord {

/// Explicit RNG seed; equal seeds give bit-identical outputs.
struct RngSeed {
    std::uint64_t value = 0;
};

/// rho(t) = (1⊗1 + Σ tᵢ σᵢ⊗σᵢ)/4; throws OutsidePhysical outside the tetrahedron.
DensityMatrix bell_diagonal_state(const Eigen::Vector3d& t);

/// 0: Φ⁺, 1: Φ⁻, 2: Ψ⁺, 3: Ψ⁻. Throws BadIndex otherwise.
DensityMatrix bell_state(int index);

/// Correlation vector t of bell_state(index): (1,−1,1), (−1,1,1), (1,1,−1), (−1,−1,−1).
Eigen::Vector3d bell_state_t(int index);

/// ¼(|0⟩⟨0|⊗|+⟩⟨+| + |1⟩⟨1|⊗|−⟩⟨−| + |+⟩⟨+|⊗|1⟩⟨1| + |−⟩⟨−|⊗|0⟩⟨0|).
DensityMatrix four_nonorthogonal_state();

/// Octahedron facet center t = (s₁, s₂, s₃)/3 for signs sᵢ ∈ {+1, −1}.
/// Throws BadInput for any other sign value.
DensityMatrix facet_state(int s1, int s2, int s3);

/// Σ_k p_k |ψ_k⟩⟨ψ_k| ⊗ rho_k with the columns of `kets` as |ψ_k⟩.
/// Throws BadProbabilities or NonOrthonormal.
DensityMatrix classical_quantum_state(const std::vector<double>& p,
                                      const ComplexMatrix& kets,
                                      const std::vector<DensityMatrix>& states);

/// ½(|00⟩⟨00| + |11⟩⟨11|).
DensityMatrix classical_pair_state();

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// |ψ⟩⟨ψ| for a normalized ket on C^dA ⊗ C^dB.
DensityMatrix pure_state(const ComplexVector& ket, std::size_t dim_a, std::size_t dim_b);

/// G G† / Tr(G G†) with G a seeded standard complex Gaussian matrix.
/// Throws BadDim unless both dims are at least 2.
DensityMatrix random_density_matrix(std::size_t dim_a, std::size_t dim_b, RngSeed seed);

/// Same construction for a single system of dimension d ≥ 1.
DensityMatrix random_single_state(std::size_t d, RngSeed seed);

/// Haar unitary from the QR factorization of a complex Gaussian matrix with
/// the phases of R's diagonal absorbed into Q.
ComplexMatrix random_unitary(std::size_t d, RngSeed seed);

/// rho → Σ_k |ψ_k⟩⟨ψ_k| ⊗ (⟨k| ⊗ 1) rho (|k⟩ ⊗ 1) on a qubit A. The kets
/// must be normalized but need not be orthogonal. Throws BadKet or BadDim.
DensityMatrix measure_prepare_channel_a(const DensityMatrix& rho,
                                        const ComplexVector& psi0,
                                        const ComplexVector& psi1);

}  // namespace qdiscord
