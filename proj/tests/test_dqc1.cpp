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
#include "qdiscord/dqc1.hpp"
#include "test_util.hpp"

using namespace qdiscord;

TEST(Dqc1Instance, Validation) {
    const ComplexMatrix u = random_unitary(4, RngSeed{0});
    EXPECT_NO_THROW(Dqc1Instance(2, 1.0, u));
    EXPECT_DISCORD_ERROR(Dqc1Instance(2, 0.0, u), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(Dqc1Instance(2, 1.5, u), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(Dqc1Instance(0, 1.0, identity(1)), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(Dqc1Instance(12, 1.0, u), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(Dqc1Instance(3, 1.0, u), ErrorCode::BadDim);
    EXPECT_DISCORD_ERROR(Dqc1Instance(2, 1.0, 1.01 * u), ErrorCode::NotUnitary);
}

TEST(Dqc1Output, MatchesHermitianPartsForm) {
    const Complex i(0.0, 1.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 1 + seed % 3;
        const std::size_t d = std::size_t{1} << n;
        const ComplexMatrix u = random_unitary(d, RngSeed{seed});
        const double alpha = 0.3 + 0.07 * double(seed);
        const DensityMatrix rho = dqc1_output_state(Dqc1Instance(n, alpha, u));
        const ComplexMatrix h1 = (u + u.adjoint()) / 2.0;
        const ComplexMatrix h2 = (u - u.adjoint()) / (2.0 * i);
        const ComplexMatrix expected =
            (identity(2 * d) + alpha * tensor(pauli_x(), h1) + alpha * tensor(pauli_y(), h2)) / double(2 * d);
        EXPECT_LE((rho.matrix() - expected).norm(), 1e-12);
        EXPECT_EQ(rho.dim_a(), 2u);
        EXPECT_EQ(rho.dim_b(), d);
    }
}

TEST(Dqc1Readout, RecoversNormalizedTrace) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ComplexMatrix u = random_unitary(8, RngSeed{seed});
        for (double alpha : {1.0, 0.5, 0.25}) {
            const Dqc1Instance inst(3, alpha, u);
            EXPECT_LE(std::abs(dqc1_exact_readout(dqc1_output_state(inst), alpha) - inst.normalized_trace()), 1e-12);
        }
    }
    // Hand-checked sign convention: U = i·1 gives τ = i.
    const Dqc1Instance phase(1, 1.0, Complex(0, 1) * identity(2));
    EXPECT_LE(std::abs(dqc1_exact_readout(dqc1_output_state(phase), 1.0) - Complex(0, 1)), 1e-15);
}

TEST(Dqc1Readout, Errors) {
    EXPECT_DISCORD_ERROR(dqc1_exact_readout(random_density_matrix(3, 2, RngSeed{0}), 1.0), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(dqc1_exact_readout(random_density_matrix(2, 3, RngSeed{0}), 1.0), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(dqc1_exact_readout(random_density_matrix(2, 2, RngSeed{0}), 0.0), ErrorCode::BadInput);
}

TEST(Dqc1Sampling, DeterministicAndBounded) {
    const Dqc1Instance inst(2, 0.5, random_unitary(4, RngSeed{3}));
    const TraceEstimate a = dqc1_sample_trace(inst, 1000, RngSeed{7});
    const TraceEstimate b = dqc1_sample_trace(inst, 1000, RngSeed{7});
    EXPECT_EQ(a.tau_hat, b.tau_hat);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.samples, 1000u);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const TraceEstimate e = dqc1_sample_trace(inst, 10, RngSeed{s});
        EXPECT_LE(std::abs(e.tau_hat.real()), 1.0 / inst.alpha() + 1e-12);
        EXPECT_LE(std::abs(e.tau_hat.imag()), 1.0 / inst.alpha() + 1e-12);
    }
    EXPECT_DISCORD_ERROR(dqc1_sample_trace(inst, 0, RngSeed{0}), ErrorCode::BadInput);
}

TEST(Dqc1Sampling, StdErrorFormula) {
    const Dqc1Instance inst(2, 0.5, random_unitary(4, RngSeed{5}));
    const TraceEstimate e = dqc1_sample_trace(inst, 5000, RngSeed{1});
    const double mx = inst.alpha() * e.tau_hat.real();
    const double my = inst.alpha() * e.tau_hat.imag();
    EXPECT_NEAR(e.std_error, std::sqrt((1 - mx * mx) / 5000 + (1 - my * my) / 5000) / inst.alpha(), 1e-15);
}

TEST(Dqc1Sampling, EmpiricalSpreadMatchesStdError) {
    const Dqc1Instance inst(3, 0.5, random_unitary(8, RngSeed{11}));
    constexpr int kSeeds = 50;
    std::vector<Complex> taus;
    double reported = 0.0;
    for (int s = 0; s < kSeeds; ++s) {
        const TraceEstimate e = dqc1_sample_trace(inst, 20000, RngSeed{std::uint64_t(s)});
        taus.push_back(e.tau_hat);
        reported += e.std_error / kSeeds;
    }
    const Complex mean = std::accumulate(taus.begin(), taus.end(), Complex(0.0)) / double(kSeeds);
    double spread = 0.0;
    for (const Complex& t : taus) spread += std::norm(t - mean);
    spread = std::sqrt(spread / (kSeeds - 1));
    EXPECT_GT(spread / reported, 1.0 / 1.5);
    EXPECT_LT(spread / reported, 1.5);
}

TEST(Classicality, PauliStringsWithPhase) {
    const char* labels[] = {"X", "Z", "XY", "ZZ", "IXZ", "YYY", "XIZY", "ZIII"};
    for (std::size_t k = 0; k < std::size(labels); ++k) {
        const double phi = -1.2 + 0.3 * double(k);
        const ComplexMatrix u = std::polar(1.0, phi) * pauli_string(labels[k]);
        const ClassicalityVerdict v = dqc1_classicality_check(u);
        EXPECT_TRUE(v.zero_discord) << labels[k];
        ASSERT_TRUE(v.phase.has_value());
        EXPECT_NEAR(*v.phase, phi, 1e-12);
        EXPECT_LE(v.residual, 1e-12);
    }
    // Identity is classical with phase 0.
    EXPECT_TRUE(dqc1_classicality_check(identity(4)).zero_discord);
}

TEST(Classicality, HaarRandomIsDiscordant) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ClassicalityVerdict v = dqc1_classicality_check(random_unitary(std::size_t{2} << (seed % 4), RngSeed{seed}));
        EXPECT_FALSE(v.zero_discord);
        EXPECT_FALSE(v.phase.has_value());
    }
}

TEST(Classicality, AgreesWithCorrelationTest) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 1 + seed % 4;
        const ComplexMatrix u = seed % 2 ? random_unitary(std::size_t{1} << n, RngSeed{seed})
                                         : std::polar(1.0, 0.1 * double(seed)) * pauli_string(std::string(n, "XYZ"[seed % 3]));
        const bool dqc1 = dqc1_classicality_check(u).zero_discord;
        EXPECT_EQ(dqc1, zero_discord_test(dqc1_output_state(Dqc1Instance(n, 0.5, u))).is_zero_discord) << seed;
        EXPECT_EQ(dqc1, hermitian_parts_dependent(u, 1e-9));
    }
}

TEST(Classicality, RejectsNonUnitary) {
    EXPECT_DISCORD_ERROR(dqc1_classicality_check(2.0 * identity(2)), ErrorCode::NotUnitary);
}

TEST(PauliString, LayoutAndErrors) {
    EXPECT_LE((pauli_string("XZ") - tensor(pauli_x(), pauli_z())).norm(), 0.0);
    EXPECT_EQ(pauli_string("IIII").rows(), 16);
    EXPECT_DISCORD_ERROR(pauli_string(""), ErrorCode::BadInput);
    EXPECT_DISCORD_ERROR(pauli_string("XQ"), ErrorCode::BadInput);
}

TEST(Dqc1Examples, ExactReadouts) {
    EXPECT_LE(std::abs(dqc1_exact_readout(dqc1_output_state(Dqc1Instance(2, 1.0, identity(4))), 1.0) - 1.0), 1e-15);
    EXPECT_LE(std::abs(dqc1_exact_readout(dqc1_output_state(Dqc1Instance(2, 1.0, pauli_string("ZZ"))), 1.0)), 1e-15);
    ComplexMatrix u = identity(2);
    u(1, 1) = Complex(0, 1);
    EXPECT_LE(std::abs(dqc1_exact_readout(dqc1_output_state(Dqc1Instance(1, 0.5, u)), 0.5) - Complex(0.5, 0.5)), 1e-15);
}

TEST(Dqc1Examples, SamplingWithinFourSigma) {
    const TraceEstimate id = dqc1_sample_trace(Dqc1Instance(1, 1.0, identity(2)), 100000, RngSeed{0});
    EXPECT_EQ(id.tau_hat.real(), 1.0);
    EXPECT_LE(std::abs(id.tau_hat.real() - 1.0), 4.0 * id.std_error);

    const Dqc1Instance inst(4, 1.0, random_unitary(16, RngSeed{7}));
    const TraceEstimate e = dqc1_sample_trace(inst, 1000000, RngSeed{0});
    EXPECT_LE(std::abs(e.tau_hat - inst.normalized_trace()), 4.0 * e.std_error);
}

TEST(Dqc1Examples, Classicality) {
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const ClassicalityVerdict hv = dqc1_classicality_check(h);
    EXPECT_TRUE(hv.zero_discord);
    EXPECT_NEAR(*hv.phase, 0.0, 1e-15);

    const ClassicalityVerdict xx = dqc1_classicality_check(std::polar(1.0, M_PI / 5) * pauli_string("XX"));
    EXPECT_TRUE(xx.zero_discord);
    EXPECT_NEAR(*xx.phase, M_PI / 5, 1e-14);

    ComplexMatrix t = identity(2);
    t(1, 1) = std::polar(1.0, M_PI / 4);
    EXPECT_FALSE(dqc1_classicality_check(t).zero_discord);
}
