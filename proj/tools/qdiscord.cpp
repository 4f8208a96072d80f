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

// qdiscord: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input or usage.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiscord/correlation.hpp"
#include "qdiscord/dqc1.hpp"
#include "qdiscord/entropic_discord.hpp"
#include "qdiscord/geometric_discord.hpp"
#include "qdiscord/io.hpp"
#include "qdiscord/state_catalog.hpp"

namespace {

using nlohmann::json;
using namespace qdiscord;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "'");
        }
        if (used != item.size()) throw UsageError("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Eigen::Vector3d parse_vector3(const std::string& text) {
    const auto v = parse_numbers(text);
    if (v.size() != 3) throw UsageError("expected three comma-separated numbers, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

json complex_json(Complex z) { return json{z.real(), z.imag()}; }

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct AnalyzeArgs {
    std::string file;
    double rank_rtol = RankTolerance{}.rtol;
    double rank_atol = RankTolerance{}.atol;
    double comm_tol = kDefaultCommutatorTolerance;
    std::size_t ent_grid = EntropicConfig{}.grid_points;
    std::size_t ent_refine = EntropicConfig{}.refine_iters;
    bool no_entropic = false;
    bool no_timings = false;
};

int run_analyze(const AnalyzeArgs& args) {
    const DensityMatrix rho = load_state(args.file);
    AnalyzeOptions options;
    options.rank_tolerance = {args.rank_atol, args.rank_rtol};
    options.commutator_tolerance = args.comm_tol;
    options.entropic.grid_points = args.ent_grid;
    options.entropic.refine_iters = args.ent_refine;
    options.with_entropic = !args.no_entropic;
    print(report_to_json(analyze(rho, options), !args.no_timings));
    return 0;
}

struct WitnessArgs {
    std::string file;
    double rank_rtol = RankTolerance{}.rtol;
    double rank_atol = RankTolerance{}.atol;
};

int run_witness(const WitnessArgs& args) {
    const CorrelationRowsFile rows = load_correlation_rows(args.file);
    const RowsWitness w = partial_rows_witness(rows.rows, rows.dim_a, {args.rank_atol, args.rank_rtol});
    json doc{{"discord_proven", w.discord_proven},
             {"independent_count", w.independent_count},
             {"required", rows.dim_a + 1},
             {"rows_supplied", rows.rows.size()}};
    if (w.discord_proven) doc["certifying_rows"] = w.certifying_rows;
    print(doc);
    return 0;
}

struct Dqc1Args {
    std::string unitary_file;
    std::size_t random_n = 0;
    std::uint64_t seed = 0;
    std::uint64_t sample_seed = 0;
    double alpha = 1.0;
    std::uint64_t samples = 100000;
    double class_tol = 1e-9;
};

int run_dqc1(const Dqc1Args& args, bool has_unitary, bool has_random) {
    if (has_unitary == has_random) throw UsageError("give exactly one of --unitary or --random-n");
    if (!(args.alpha > 0.0 && args.alpha <= 1.0)) {
        throw UsageError("--alpha must lie in (0, 1]; alpha = 0 leaves the output completely mixed");
    }
    if (args.samples < 1) throw UsageError("--samples must be at least 1");

    ComplexMatrix u;
    std::size_t n = 0;
    if (has_unitary) {
        u = load_matrix(args.unitary_file);
        const auto d = static_cast<std::size_t>(u.rows());
        while ((std::size_t{1} << n) < d) ++n;
        if ((std::size_t{1} << n) != d || n == 0) {
            throw DiscordError(ErrorCode::BadDim, "unitary dimension must be a power of two >= 2");
        }
    } else {
        n = args.random_n;
        if (n < 1 || n > kMaxDqc1Qubits) throw UsageError("--random-n must be in [1, 11]");
        u = random_unitary(std::size_t{1} << n, RngSeed{args.seed});
    }
    const Dqc1Instance inst(n, args.alpha, u);
    const Complex exact = dqc1_exact_readout(dqc1_output_state(inst), inst.alpha());
    const TraceEstimate est = dqc1_sample_trace(inst, args.samples, RngSeed{args.sample_seed});
    const ClassicalityVerdict cls = dqc1_classicality_check(u, args.class_tol);

    json doc{{"n", n},
             {"alpha", inst.alpha()},
             {"exact_tau", complex_json(exact)},
             {"sampled_tau", complex_json(est.tau_hat)},
             {"std_error", est.std_error},
             {"samples", est.samples},
             {"sample_seed", est.seed.value},
             {"deviation_sigmas", est.std_error > 0.0 ? std::abs(est.tau_hat - exact) / est.std_error : 0.0},
             {"classicality", {{"zero_discord", cls.zero_discord}, {"residual", cls.residual}}}};
    doc["classicality"]["phase"] = cls.phase ? json(*cls.phase) : json(nullptr);
    if (has_random) doc["unitary_seed"] = args.seed;
    print(doc);
    return 0;
}

struct CatalogArgs {
    std::string name;
    std::string params;
    std::string dims = "2,2";
    std::uint64_t seed = 0;
};

int run_catalog(const CatalogArgs& args) {
    const std::string& name = args.name;
    auto need_params = [&] {
        if (args.params.empty()) throw UsageError("catalog " + name + " needs a parameter");
    };
    DensityMatrix rho = [&]() -> DensityMatrix {
        if (name == "bell") {
            need_params();
            const auto v = parse_numbers(args.params);
            if (v.size() != 1 || v[0] != std::floor(v[0])) throw UsageError("bell takes one index 0..3");
            return bell_state(static_cast<int>(v[0]));
        }
        if (name == "bell-diagonal") {
            need_params();
            return bell_diagonal_state(parse_vector3(args.params));
        }
        if (name == "facet") {
            need_params();
            const Eigen::Vector3d s = parse_vector3(args.params);
            return facet_state(static_cast<int>(s(0)), static_cast<int>(s(1)), static_cast<int>(s(2)));
        }
        if (name == "four-nonorthogonal") return four_nonorthogonal_state();
        if (name == "classical-pair") return classical_pair_state();
        if (name == "nonmonotonic-demo") {
            ComplexVector psi0(2), psi1(2);
            psi0 << 1.0, 0.0;
            psi1 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
            return measure_prepare_channel_a(classical_pair_state(), psi0, psi1);
        }
        if (name == "random") {
            const auto d = parse_numbers(args.dims);
            if (d.size() != 2 || d[0] < 2 || d[1] < 2) throw UsageError("--dims must be dA,dB with both >= 2");
            return random_density_matrix(static_cast<std::size_t>(d[0]), static_cast<std::size_t>(d[1]),
                                         RngSeed{args.seed});
        }
        throw DiscordError(ErrorCode::UnknownState, "unknown catalog state '" + name + "'");
    }();
    std::cout << format_state(rho);
    return 0;
}

struct GeometricArgs {
    std::string file;
    bool oracle = false;
    std::size_t restarts = OracleOptions{}.restarts;
    std::uint64_t seed = 0;
};

int run_geometric(const GeometricArgs& args) {
    const DensityMatrix rho = load_state(args.file);
    const GeometricResult g = geometric_discord_2q(rho);
    const BlochTriple b = bloch_triple(rho);
    json doc{{"geometric_discord", g.value},
             {"k_max", g.k_max},
             {"e_star", {g.e_star(0), g.e_star(1), g.e_star(2)}},
             {"bloch", {{"x", {b.x(0), b.x(1), b.x(2)}}, {"y", {b.y(0), b.y(1), b.y(2)}}}},
             {"chi_star", state_to_json(g.chi_star)}};
    if (args.oracle) {
        OracleOptions opt;
        opt.restarts = args.restarts;
        opt.seed = args.seed;
        const OracleResult o = geometric_discord_oracle(rho, opt);
        doc["oracle"] = {{"value", o.value}, {"restarts", opt.restarts}, {"seed", opt.seed},
                         {"difference", o.value - g.value}};
    }
    print(doc);
    return 0;
}

struct EntropicArgs {
    std::string file;
    std::string side = "A";
    std::size_t grid = EntropicConfig{}.grid_points;
    std::size_t refine = EntropicConfig{}.refine_iters;
};

int run_entropic(const EntropicArgs& args) {
    DensityMatrix rho = load_state(args.file);
    if (args.side == "B") rho = swap_subsystems(rho);
    EntropicConfig cfg;
    cfg.grid_points = args.grid;
    cfg.refine_iters = args.refine;
    const EntropicDiscordResult r = entropic_discord_report(rho, cfg);
    const Eigen::Vector3d& e = r.classical.best_direction;
    print(json{{"side", args.side},
               {"entropic_discord", r.value},
               {"raw", r.raw},
               {"mutual_information", r.mutual_information},
               {"classical_correlation", r.classical.value},
               {"measurement_direction", {e(0), e(1), e(2)}},
               {"measurement_class", "projective optimum (upper bound on discord)"}});
    return 0;
}

void report_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum discord analysis: zero-discord test, geometric and entropic discord, DQC1"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full discord report for a state file");
    analyze_cmd->add_option("state", analyze_args.file, "State file")->required();
    analyze_cmd->add_option("--rank-tol", analyze_args.rank_rtol, "Relative singular-value cutoff")->capture_default_str();
    analyze_cmd->add_option("--rank-atol", analyze_args.rank_atol, "Absolute singular-value cutoff")->capture_default_str();
    analyze_cmd->add_option("--comm-tol", analyze_args.comm_tol, "Normalized commutator tolerance")->capture_default_str();
    analyze_cmd->add_option("--ent-grid", analyze_args.ent_grid, "Measurement grid points")->capture_default_str();
    analyze_cmd->add_option("--ent-refine", analyze_args.ent_refine, "Simplex refinement iterations")->capture_default_str();
    analyze_cmd->add_flag("--no-entropic", analyze_args.no_entropic, "Skip the entropic discord");
    analyze_cmd->add_flag("--no-timings", analyze_args.no_timings, "Omit timings for byte-stable output");

    WitnessArgs witness_args;
    auto* witness_cmd = app.add_subcommand("witness", "Rank witness from partial correlation-matrix rows");
    witness_cmd->add_option("rows", witness_args.file, "Correlation rows file")->required();
    witness_cmd->add_option("--rank-tol", witness_args.rank_rtol, "Relative singular-value cutoff")->capture_default_str();
    witness_cmd->add_option("--rank-atol", witness_args.rank_atol, "Absolute singular-value cutoff")->capture_default_str();

    Dqc1Args dqc1_args;
    auto* dqc1_cmd = app.add_subcommand("dqc1", "One-clean-qubit trace estimation and classicality");
    auto* unitary_opt = dqc1_cmd->add_option("--unitary", dqc1_args.unitary_file, "Unitary matrix file");
    auto* random_opt = dqc1_cmd->add_option("--random-n", dqc1_args.random_n, "Haar-random unitary on n qubits");
    unitary_opt->excludes(random_opt);
    dqc1_cmd->add_option("--seed", dqc1_args.seed, "Seed for the random unitary")->capture_default_str();
    dqc1_cmd->add_option("--sample-seed", dqc1_args.sample_seed, "Seed for shot sampling")->capture_default_str();
    dqc1_cmd->add_option("--alpha", dqc1_args.alpha, "Control-qubit purity in (0, 1]")->required();
    dqc1_cmd->add_option("--samples", dqc1_args.samples, "Shots per Pauli basis")->capture_default_str();
    dqc1_cmd->add_option("--class-tol", dqc1_args.class_tol, "Relative tolerance of the U^2 test")->capture_default_str();

    CatalogArgs catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named state as a state file");
    catalog_cmd->add_option("name", catalog_args.name,
                            "bell | bell-diagonal | facet | four-nonorthogonal | classical-pair | "
                            "nonmonotonic-demo | random")
        ->required();
    catalog_cmd->add_option("params", catalog_args.params, "Comma-separated parameters");
    catalog_cmd->add_option("--dims", catalog_args.dims, "dA,dB for random states")->capture_default_str();
    catalog_cmd->add_option("--seed", catalog_args.seed, "Seed for random states")->capture_default_str();

    GeometricArgs geometric_args;
    auto* geometric_cmd = app.add_subcommand("geometric", "Two-qubit geometric discord");
    geometric_cmd->add_option("state", geometric_args.file, "State file")->required();
    geometric_cmd->add_flag("--oracle", geometric_args.oracle, "Also run the numerical minimization");
    geometric_cmd->add_option("--restarts", geometric_args.restarts, "Oracle restarts")->capture_default_str();
    geometric_cmd->add_option("--seed", geometric_args.seed, "Oracle seed")->capture_default_str();

    EntropicArgs entropic_args;
    auto* entropic_cmd = app.add_subcommand("entropic", "Entropic discord by measurement optimization");
    entropic_cmd->add_option("state", entropic_args.file, "State file")->required();
    entropic_cmd->add_option("--side", entropic_args.side, "Measured subsystem")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
    entropic_cmd->add_option("--grid", entropic_args.grid, "Measurement grid points")->capture_default_str();
    entropic_cmd->add_option("--refine", entropic_args.refine, "Simplex refinement iterations")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_args);
        if (witness_cmd->parsed()) return run_witness(witness_args);
        if (dqc1_cmd->parsed()) return run_dqc1(dqc1_args, unitary_opt->count() > 0, random_opt->count() > 0);
        if (catalog_cmd->parsed()) return run_catalog(catalog_args);
        if (geometric_cmd->parsed()) return run_geometric(geometric_args);
        if (entropic_cmd->parsed()) return run_entropic(entropic_args);
    } catch (const UsageError& e) {
        report_error("UsageError", e.what());
        return kExitInput;
    } catch (const DiscordError& e) {
        report_error(std::string(error_code_name(e.code())), e.what());
        return e.code() == ErrorCode::Unsupported ? kExitInternal : kExitInput;
    } catch (const std::exception& e) {
        report_error("InternalError", e.what());
        return kExitInternal;
    }
    return kExitInternal;
}
