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

#include <numeric>

#include <gtest/gtest.h>

#include "qdiscord/correlation.hpp"
#include "qdiscord/geometric_discord.hpp"
#include "qdiscord/state_catalog.hpp"
#include "test_util.hpp"

using namespace qdiscord;

namespace {

ComplexVector ket2(Complex a, Complex b) {
    ComplexVector k(2);
    k << a, b;
    return k;
}

void expect_maximally_mixed_marginals(const DensityMatrix& rho) {
    EXPECT_LE((partial_trace(rho, Subsystem::A) - identity(2) / 2.0).norm(), 1e-14);
    EXPECT_LE((partial_trace(rho, Subsystem::B) - identity(2) / 2.0).norm(), 1e-14);
}

}  // namespace

TEST(BellDiagonal, Examples) {
    EXPECT_LE((bell_diagonal_state({0, 0, 0}).matrix() - identity(4) / 4.0).norm(), 1e-15);
    EXPECT_LE((bell_diagonal_state({1, -1, 1}).matrix() - bell_state(0).matrix()).norm(), 1e-15);
    EXPECT_DISCORD_ERROR(bell_diagonal_state({2, 0, 0}), ErrorCode::OutsidePhysical);
    expect_maximally_mixed_marginals(bell_diagonal_state({0.3, -0.2, 0.1}));
}

TEST(BellDiagonal, BlochRoundtrip) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int accepted = 0;
    while (accepted < 200) {
        const Eigen::Vector3d t(u(rng), u(rng), u(rng));
        if (!tetrahedron_contains(t)) continue;
        ++accepted;
        EXPECT_LE((bloch_triple(bell_diagonal_state(t)).t.diagonal() - t).norm(), 1e-12);
    }
}

TEST(BellStates, VerticesAndMarginals) {
    const Eigen::Vector3d vertices[] = {{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, -1, -1}};
    for (int k = 0; k < 4; ++k) {
        const DensityMatrix rho = bell_state(k);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
        EXPECT_NEAR((rho.matrix() * rho.matrix()).trace().real(), 1.0, 1e-14);
        expect_maximally_mixed_marginals(rho);
        EXPECT_LE((bloch_triple(rho).t.diagonal() - vertices[k]).norm(), 1e-14);
        EXPECT_EQ(bell_state_t(k), vertices[k]);
    }
    EXPECT_DISCORD_ERROR(bell_state(4), ErrorCode::BadIndex);
    EXPECT_DISCORD_ERROR(bell_state(-1), ErrorCode::BadIndex);
}

TEST(FourNonorthogonal, Properties) {
    const DensityMatrix rho = four_nonorthogonal_state();
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
    EXPECT_FALSE(zero_discord_test(rho).is_zero_discord);
    EXPECT_GT(geometric_discord_2q(rho).value, 1e-3);
    // ¼(|0⟩⟨0|⊗|+⟩⟨+| + |1⟩⟨1|⊗|−⟩⟨−| + |+⟩⟨+|⊗|1⟩⟨1| + |−⟩⟨−|⊗|0⟩⟨0|)
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexVector zero = ket2(1, 0), one = ket2(0, 1), plus = ket2(s, s), minus = ket2(s, -s);
    auto proj = [](const ComplexVector& k) { return ComplexMatrix(k * k.adjoint()); };
    const ComplexMatrix expected = 0.25 * (tensor(proj(zero), proj(plus)) + tensor(proj(one), proj(minus)) +
                                           tensor(proj(plus), proj(one)) + tensor(proj(minus), proj(zero)));
    EXPECT_LE((rho.matrix() - expected).norm(), 1e-15);
}

TEST(FacetStates, CentersOfOctahedronFacets) {
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            for (int s3 : {1, -1}) {
                const DensityMatrix rho = facet_state(s1, s2, s3);
                const Eigen::Vector3d t = bloch_triple(rho).t.diagonal();
                EXPECT_LE((t - Eigen::Vector3d(s1, s2, s3) / 3.0).norm(), 1e-15);
                EXPECT_TRUE(octahedron_contains(t));
                expect_maximally_mixed_marginals(rho);
            }
        }
    }
    EXPECT_DISCORD_ERROR(facet_state(0, 1, 1), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(facet_state(1, 2, 1), ErrorCode::BadInput);
}

TEST(ClassicalQuantum, Examples) {
    const DensityMatrix rb = random_single_state(3, RngSeed{1});
    const ComplexMatrix basis = identity(2);
    const DensityMatrix single = classical_quantum_state({1.0}, basis.col(0), {rb});
    EXPECT_LE((single.matrix() - tensor(basis.col(0) * basis.col(0).adjoint(), rb.matrix())).norm(), 1e-15);

    const DensityMatrix zero_state = DensityMatrix::single(basis.col(0) * basis.col(0).adjoint());
    const DensityMatrix one_state = DensityMatrix::single(basis.col(1) * basis.col(1).adjoint());
    const DensityMatrix pair = classical_quantum_state({0.5, 0.5}, basis, {zero_state, one_state});
    EXPECT_LE((pair.matrix() - classical_pair_state().matrix()).norm(), 1e-15);
    EXPECT_NEAR(pair.matrix()(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(pair.matrix()(3, 3).real(), 0.5, 1e-15);

    const DensityMatrix flat = classical_quantum_state({0.5, 0.5}, basis, {rb, rb});
    EXPECT_LE((flat.matrix() - tensor(identity(2) / 2.0, rb.matrix())).norm(), 1e-15);
}

TEST(ClassicalQuantum, ErrorsAndRankBound) {
    const DensityMatrix rb = random_single_state(2, RngSeed{1});
    EXPECT_DISCORD_ERROR(classical_quantum_state({0.5, 0.6}, identity(2), {rb, rb}), ErrorCode::BadProbabilities);
    EXPECT_DISCORD_ERROR(classical_quantum_state({1.5, -0.5}, identity(2), {rb, rb}), ErrorCode::BadProbabilities);
    ComplexMatrix skew = identity(2);
    skew(0, 1) = 0.3;
    EXPECT_DISCORD_ERROR(classical_quantum_state({0.5, 0.5}, skew, {rb, rb}), ErrorCode::NonOrthonormal);
    EXPECT_THROW(classical_quantum_state({0.5, 0.5}, identity(2), {rb}), DiscordError);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t da = 2 + seed % 3;
        EXPECT_LE(zero_discord_test(qdiscord::testing::random_cq_state(da, 2 + seed % 2, seed)).rank_l, da);
    }
}

TEST(RandomStates, ValidAndDeterministic) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DensityMatrix a = random_density_matrix(2 + seed % 3, 3, RngSeed{seed});
        const DensityMatrix b = random_density_matrix(2 + seed % 3, 3, RngSeed{seed});
        EXPECT_TRUE(a.matrix() == b.matrix());
        EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-14);
        EXPECT_TRUE(is_hermitian(a.matrix(), 0.0));
        EXPECT_FALSE(a.matrix() == random_density_matrix(2 + seed % 3, 3, RngSeed{seed + 1}).matrix());
    }
    EXPECT_DISCORD_ERROR(random_density_matrix(1, 2, RngSeed{0}), ErrorCode::BadDim);
}

TEST(RandomUnitary, UnitaryAndDeterministic) {
    for (std::size_t d = 1; d <= 8; ++d) {
        const ComplexMatrix u = random_unitary(d, RngSeed{d});
        EXPECT_LE((u.adjoint() * u - identity(d)).norm(), 1e-10);
        EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-10);
        EXPECT_TRUE(u == random_unitary(d, RngSeed{d}));
    }
}

TEST(RandomUnitary, HaarSecondMoment) {
    // E|Tr U|² = 1 for Haar U with d ≥ 2.
    constexpr int kSeeds = 500;
    std::vector<double> samples;
    for (int s = 0; s < kSeeds; ++s) samples.push_back(std::norm(random_unitary(8, RngSeed{std::uint64_t(s)}).trace()));
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / kSeeds;
    double var = 0.0;
    for (double v : samples) var += (v - mean) * (v - mean);
    const double se = std::sqrt(var / (kSeeds - 1) / kSeeds);
    EXPECT_LE(std::abs(mean - 1.0), 3.0 * se) << "mean " << mean << " se " << se;
}

TEST(MeasurePrepare, OrthonormalKetsLeaveClassicalStateUnchanged) {
    const DensityMatrix rho = classical_pair_state();
    EXPECT_LE((measure_prepare_channel_a(rho, ket2(1, 0), ket2(0, 1)).matrix() - rho.matrix()).norm(), 1e-15);
}

TEST(MeasurePrepare, NonorthogonalKetsCreateDiscord) {
    const double s = 1.0 / std::sqrt(2.0);
    const DensityMatrix out = measure_prepare_channel_a(classical_pair_state(), ket2(1, 0), ket2(s, s));
    EXPECT_FALSE(zero_discord_test(out).is_zero_discord);
    EXPECT_GT(geometric_discord_2q(out).value, 1e-3);
}

TEST(MeasurePrepare, PreservesMarginalOfB) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DensityMatrix rho = random_density_matrix(2, 3, RngSeed{seed});
        const ComplexVector k0 = random_unitary(2, RngSeed{seed + 1}).col(0);
        const ComplexVector k1 = random_unitary(2, RngSeed{seed + 2}).col(0);
        const DensityMatrix out = measure_prepare_channel_a(rho, k0, k1);
        EXPECT_LE((partial_trace(out, Subsystem::B) - partial_trace(rho, Subsystem::B)).norm(), 1e-12);
    }
}

TEST(MeasurePrepare, Errors) {
    EXPECT_DISCORD_ERROR(measure_prepare_channel_a(bell_state(0), ket2(1, 1), ket2(0, 1)), ErrorCode::BadKet);
    EXPECT_DISCORD_ERROR(measure_prepare_channel_a(bell_state(0), ComplexVector::Zero(3), ket2(0, 1)), ErrorCode::BadKet);
    EXPECT_DISCORD_ERROR(measure_prepare_channel_a(random_density_matrix(3, 2, RngSeed{0}), ket2(1, 0), ket2(0, 1)),
                         ErrorCode::BadDim);
}
