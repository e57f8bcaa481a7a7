// Copyright 2026 qpv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qpv command-line verifier. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or argument error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpv.h"

namespace {

struct GlobalOptions {
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    int dmax = 8;
    std::string format = "json";
    std::string out = "stdout";
};

int fail_usage(const char* context) {
    std::fprintf(stderr, "qpv: %s: %s\n", context, qpv_last_error_message());
    return 2;
}

int emit_report(qpv_report* report, const GlobalOptions& global) {
    char* text = nullptr;
    if (qpv_report_render(report, global.format.c_str(), &text) != QPV_OK) {
        qpv_report_free(report);
        return fail_usage("render");
    }
    if (global.out == "stdout" || global.out == "-") {
        std::fputs(text, stdout);
    } else {
        std::ofstream file(global.out, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "qpv: cannot open '%s' for writing\n", global.out.c_str());
            qpv_string_free(text);
            qpv_report_free(report);
            return 2;
        }
        file << text;
    }
    const int passed = qpv_report_passed(report);
    qpv_string_free(text);
    qpv_report_free(report);
    return passed ? 0 : 1;
}

bool parse_model(const std::string& name, qpv_model_kind* kind) {
    if (name == "classical")
        *kind = QPV_MODEL_CLASSICAL;
    else if (name == "quantum-real")
        *kind = QPV_MODEL_QUANTUM_REAL;
    else if (name == "quantum-complex")
        *kind = QPV_MODEL_QUANTUM_COMPLEX;
    else
        return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qpv - verification workbench for classical and quantum probability models"};
    app.require_subcommand(1);
    // global flags may follow the subcommand
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "random seed (default 42)");
    app.add_option("--tolerance", global.tolerance, "pass threshold for randomized laws")
        ->check(CLI::PositiveNumber);
    app.add_option("--dmax", global.dmax, "granularity cap for exhaustive checks");
    app.add_option("--format", global.format, "report format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", global.out, "output path, or 'stdout'");

    auto* verify = app.add_subcommand("verify", "randomized invariant suites for one model");
    std::string model_name = "quantum-complex";
    int dim = 4;
    int trials = 1000;
    verify->add_option("--model", model_name, "classical | quantum-real | quantum-complex");
    verify->add_option("--dim", dim, "granularity of the top proposition");
    verify->add_option("--trials", trials, "randomized cases per law");

    auto* classify = app.add_subcommand("classify", "theory-candidate admissibility table");
    int mu_max = 3;
    classify->add_option("--mu-max", mu_max, "largest power-law exponent to enumerate");

    auto* counter =
        app.add_subcommand("counterexamples", "known-theory composition/reductionism rows");
    (void)counter;

    auto* zeno = app.add_subcommand("zeno", "continuity, scaling and measurement-limit numerics");
    std::vector<double> eps_grid = {1e-4, 4e-4, 1e-2};
    std::vector<int> n_list = {1, 2, 4, 9, 16};
    int zeno_dim = 2;
    zeno->add_option("--eps", eps_grid, "continuity thresholds");
    zeno->add_option("--steps", n_list, "replica/step counts for the scaling law");
    zeno->add_option("--dim", zeno_dim, "granularity of the probed model");

    auto* tomo = app.add_subcommand("tomography", "joint-table reconstruction round trip");
    int dim_a = 2;
    int dim_b = 2;
    int tomo_trials = 100;
    tomo->add_option("--dim-a", dim_a, "granularity of factor A");
    tomo->add_option("--dim-b", dim_b, "granularity of factor B");
    tomo->add_option("--trials", tomo_trials, "random composite states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    qpv_report* report = nullptr;
    if (verify->parsed()) {
        qpv_model_kind kind;
        if (!parse_model(model_name, &kind)) {
            std::fprintf(stderr, "qpv: unknown model '%s'\n", model_name.c_str());
            return 2;
        }
        if (qpv_run_verify(kind, dim, global.seed, global.tolerance, trials, global.dmax,
                           &report) != QPV_OK)
            return fail_usage("verify");
    } else if (classify->parsed()) {
        if (qpv_run_classify(mu_max, global.dmax, &report) != QPV_OK)
            return fail_usage("classify");
    } else if (counter->parsed()) {
        if (qpv_run_counterexamples(&report) != QPV_OK)
            return fail_usage("counterexamples");
    } else if (zeno->parsed()) {
        if (qpv_run_zeno(eps_grid.data(), eps_grid.size(), n_list.data(), n_list.size(), zeno_dim,
                         global.seed, &report) != QPV_OK)
            return fail_usage("zeno");
    } else if (tomo->parsed()) {
        if (qpv_run_tomography(dim_a, dim_b, tomo_trials, global.seed, &report) != QPV_OK)
            return fail_usage("tomography");
    } else {
        std::fprintf(stderr, "qpv: no subcommand\n");
        return 2;
    }
    return emit_report(report, global);
}
