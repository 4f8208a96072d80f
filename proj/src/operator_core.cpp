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

#include "qdiscord/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdiscord {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::BadDim: return "BadDim";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::OutsidePhysical: return "OutsidePhysical";
        case ErrorCode::BadProbabilities: return "BadProbabilities";
        case ErrorCode::NonOrthonormal: return "NonOrthonormal";
        case ErrorCode::BadKet: return "BadKet";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::UnknownState: return "UnknownState";
    }
    return "Unknown";
}

namespace {

// Eigenvalues in [-1e-10, 0) are numerical PSD slack.
constexpr double kEntropyCutoff = 1e-12;

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    return h;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::size_t dim_a, std::size_t dim_b)
    : dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a == 0 || dim_b == 0) {
        throw DiscordError(ErrorCode::BadDim, "density matrix dimensions must be positive");
    }
    const auto d = static_cast<Eigen::Index>(dim_a * dim_b);
    if (mat.rows() != d || mat.cols() != d) {
        std::ostringstream msg;
        msg << "density matrix is " << mat.rows() << "x" << mat.cols() << " but dims "
            << dim_a << "x" << dim_b << " need " << d << "x" << d;
        throw DiscordError(ErrorCode::DimMismatch, msg.str());
    }
    if (!mat.allFinite()) {
        throw DiscordError(ErrorCode::ValidationError, "finite: density matrix has non-finite entries");
    }
    if ((mat - mat.adjoint()).norm() > kStateTolerance) {
        throw DiscordError(ErrorCode::ValidationError, "hermitian: density matrix is not Hermitian");
    }
    mat_ = hermitian_part(mat);
    if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > kStateTolerance) {
        std::ostringstream msg;
        msg << "trace: density matrix trace is " << mat_.trace().real() << ", expected 1";
        throw DiscordError(ErrorCode::ValidationError, msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kStateTolerance) {
        std::ostringstream msg;
        msg << "psd: density matrix has eigenvalue " << solver.eigenvalues().minCoeff();
        throw DiscordError(ErrorCode::ValidationError, msg.str());
    }
}

DensityMatrix DensityMatrix::single(ComplexMatrix mat) {
    const auto d = static_cast<std::size_t>(mat.rows());
    return DensityMatrix(std::move(mat), d, 1);
}

ComplexMatrix DensityMatrix::block(std::size_t i, std::size_t j) const {
    const auto db = static_cast<Eigen::Index>(dim_b_);
    return mat_.block(static_cast<Eigen::Index>(i) * db, static_cast<Eigen::Index>(j) * db, db, db);
}

ComplexMatrix identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix pauli(int index) {
    switch (index) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        case 2: return pauli_z();
        default: throw DiscordError(ErrorCode::BadIndex, "pauli index must be 0, 1 or 2");
    }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    const auto da = static_cast<Eigen::Index>(rho.dim_a());
    const auto db = static_cast<Eigen::Index>(rho.dim_b());
    const ComplexMatrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        ComplexMatrix out(da, da);
        for (Eigen::Index i = 0; i < da; ++i) {
            for (Eigen::Index j = 0; j < da; ++j) {
                out(i, j) = m.block(i * db, j * db, db, db).trace();
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < da; ++i) {
        out += m.block(i * db, i * db, db, db);
    }
    return out;
}

DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep) {
    return DensityMatrix::single(partial_trace(rho, keep));
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols() || u.rows() == 0) return false;
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

Spectrum eig_hermitian(const ComplexMatrix& h) {
    if (!is_hermitian(h, 1e-9)) {
        throw DiscordError(ErrorCode::NonHermitian, "eig_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h));
    // Eigen sorts ascending.
    Spectrum out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

RealVector eigenvalues_hermitian(const ComplexMatrix& h) {
    if (!is_hermitian(h, 1e-9)) {
        throw DiscordError(ErrorCode::NonHermitian, "eigenvalues_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

RealSvd svd_real(const RealMatrix& r, bool thin) {
    RealSvd out;
    if (r.size() == 0) {
        out.u = RealMatrix::Identity(r.rows(), r.rows());
        out.w = RealMatrix::Identity(r.cols(), r.cols());
        out.singular_values = RealVector::Zero(0);
        return out;
    }
    const unsigned options = thin ? (Eigen::ComputeThinU | Eigen::ComputeThinV)
                                 : (Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::BDCSVD<RealMatrix> svd(r, options);
    out.u = svd.matrixU();
    out.w = svd.matrixV();
    out.singular_values = svd.singularValues();
    return out;
}

double shannon_entropy_bits(const RealVector& probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > kEntropyCutoff) h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    return shannon_entropy_bits(eigenvalues_hermitian(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(rho.matrix());
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DiscordError(ErrorCode::DimMismatch, "commutator_norm: operands must be square and equal-sized");
    }
    return (a * b - b * a).norm();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DiscordError(ErrorCode::DimMismatch, "hs_inner: shape mismatch");
    }
    return (a.adjoint() * b).trace();
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho,
                                    const ComplexMatrix& u,
                                    const ComplexMatrix& v) {
    if (u.rows() != static_cast<Eigen::Index>(rho.dim_a()) ||
        v.rows() != static_cast<Eigen::Index>(rho.dim_b())) {
        throw DiscordError(ErrorCode::DimMismatch, "apply_local_unitaries: unitary sizes do not match state dims");
    }
    const ComplexMatrix uv = tensor(u, v);
    return DensityMatrix(uv * rho.matrix() * uv.adjoint(), rho.dim_a(), rho.dim_b());
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
    const auto da = static_cast<Eigen::Index>(rho.dim_a());
    const auto db = static_cast<Eigen::Index>(rho.dim_b());
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index a = 0; a < db; ++a) {
            for (Eigen::Index j = 0; j < da; ++j) {
                for (Eigen::Index b = 0; b < db; ++b) {
                    out(a * da + i, b * da + j) = m(i * db + a, j * db + b);
                }
            }
        }
    }
    return DensityMatrix(std::move(out), rho.dim_b(), rho.dim_a());
}

}  // namespace qdiscord
