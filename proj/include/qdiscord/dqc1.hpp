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
#include <optional>
#include <string_view>

#include "qdiscord/operator_core.hpp"
#include "qdiscord/state_catalog.hpp"

namespace qdiscord {

inline constexpr std::size_t kMaxDqc1Qubits = 11;

/// One-clean-qubit circuit: control qubit ½(1 + ασ₃), n maximally mixed
/// target qubits, Hadamard on the control, then controlled-U.
class Dqc1Instance {
public:
    /// Throws BadInput for α ∉ (0, 1] or n ∉ [1, 11], BadDim when U is not
    /// 2ⁿ × 2ⁿ, NotUnitary when ‖U†U − 1‖_F > 1e-9.
    Dqc1Instance(std::size_t n, double alpha, ComplexMatrix u);

    std::size_t qubits() const noexcept { return n_; }
    double alpha() const noexcept { return alpha_; }
    const ComplexMatrix& unitary() const noexcept { return u_; }

    /// Tr U / 2ⁿ.
    Complex normalized_trace() const;

private:
    std::size_t n_;
    double alpha_;
    ComplexMatrix u_;
};

/// 2^{-(n+1)} (1 ⊗ 1 + α|1⟩⟨0| ⊗ U + α|0⟩⟨1| ⊗ U†), control qubit as A.
DensityMatrix dqc1_output_state(const Dqc1Instance& inst);

/// (⟨σ₁ ⊗ 1⟩ + i⟨σ₂ ⊗ 1⟩) / α. Throws BadInput unless d_A = 2 and d_B is a
/// power of two, or when α is not positive.
Complex dqc1_exact_readout(const DensityMatrix& state, double alpha);

struct TraceEstimate {
    Complex tau_hat;
    std::uint64_t samples = 0;
    double std_error = 0.0;
    RngSeed seed;
};

/// M shots of σ₁ and, separately, M shots of σ₂ on the control qubit, with
/// outcome probabilities taken from the exact output state.
TraceEstimate dqc1_sample_trace(const Dqc1Instance& inst, std::uint64_t samples, RngSeed seed);

struct ClassicalityVerdict {
    bool zero_discord = false;
    std::optional<double> phase;
    /// ‖U² − c·1‖_F / ‖U²‖_F with c = Tr(U²)/2ⁿ.
    double residual = 0.0;
};

/// Zero discord on the control qubit iff U = e^{iφ}A with A² = 1, tested as
/// U² ∝ 1. The phase is arg(c)/2 ∈ (−π/2, π/2].
ClassicalityVerdict dqc1_classicality_check(const ComplexMatrix& u, double tol = 1e-9);

/// Linear dependence of (U + U†)/2 and (U − U†)/(2i) via their
/// Hilbert-Schmidt Gram determinant, relative to the product of norms.
bool hermitian_parts_dependent(const ComplexMatrix& u, double tol = 1e-9);

/// Tensor product of single-qubit Paulis named by "I", "X", "Y", "Z",
/// leftmost character on the most significant qubit.
ComplexMatrix pauli_string(std::string_view labels);

}  // namespace qdiscord
