// Acceptance runner: one line per criterion, exit 0 only if all pass.
// argv[1] (optional) is the path to the qpv CLI binary, used by the
// determinism criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qpv/classifier.hpp"
#include "qpv/composition.hpp"
#include "qpv/report.hpp"
#include "qpv/state.hpp"
#include "qpv/tomography.hpp"
#include "qpv/zeno.hpp"

using namespace qpv;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.c_str());
    if (!ok)
        ++g_failures;
}

void for_each_composition(int d, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            fn(acc);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            acc.push_back(k);
            self(self, rest - k);
            acc.pop_back();
        }
    };
    rec(rec, d);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// 1. closed-form dimension tables, exact
void criterion_dimension_tables() {
    struct Row {
        ModelKind kind;
        std::function<long long(long long)> s, g;
    };
    const std::vector<Row> rows = {
        {ModelKind::classical, [](long long d) { return d; }, [](long long) { return 0LL; }},
        {ModelKind::quantum_complex, [](long long d) { return d * d; },
         [](long long d) { return d * d; }},
        {ModelKind::quantum_real, [](long long d) { return d * (d + 1) / 2; },
         [](long long d) { return d * (d - 1) / 2; }},
        {ModelKind::quaternionic, [](long long d) { return d * (2 * d - 1); },
         [](long long d) { return d * (2 * d + 1); }},
    };
    bool ok = true;
    for (const auto& row : rows)
        for (int d : {1, 2, 3, 4, 6}) {
            ok = ok && state_parameter_count(row.kind, d) == row.s(d);
            ok = ok && dim_group(row.kind, d) == row.g(d);
        }
    criterion(1, "dimension table reproduction", ok,
              "S(d) and dim G(d) for d in {1,2,3,4,6}, all four kinds, exact");
}

// 2. the composition/reductionism counterexample rows
void criterion_counterexample_rows() {
    const auto real = reductionism_check(ModelKind::quantum_real, 2, 2);
    const auto quat = composition_constraint(ModelKind::quaternionic, 2, 2);
    bool ok = real.composite_parameters == 10 && real.product_parameters == 9 &&
              real.status == ReductionismStatus::violated;
    ok = ok && quat.lhs == 36 && quat.rhs == 100 &&
         quat.status == ConstraintStatus::violated;
    // classical and complex quantum saturate both constraints in their
    // dimension form up to d_max = 8
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex})
        for (int da = 2; da <= 8; ++da)
            for (int db = 2; da * db <= 8; ++db) {
                ok = ok && state_parameter_count(kind, da * db) ==
                               state_parameter_count(kind, da) *
                                   state_parameter_count(kind, db);
                ok = ok && dim_group(kind, da * db) ==
                               dim_group(kind, da) * dim_group(kind, db);
            }
    criterion(2, "counterexample rows", ok,
              "real 10 > 9 violated, quaternionic 36 < 100 violated, classical and "
              "complex saturated to d_max = 8");
}

// 3. parameter rule, exact over every granularity vector of every d <= 8
void criterion_parameter_rule() {
    bool ok = true;
    long long checked = 0;
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex})
        for (int d = 1; d <= 8; ++d)
            for_each_composition(d, [&](const std::vector<int>& k) {
                long long sum = 0;
                for (int ki : k)
                    sum += state_parameter_count(kind, ki);
                ok = ok && state_parameter_count(kind, d) ==
                               dim_decomposition_manifold(kind, k) + sum;
                ++checked;
            });
    criterion(3, "parameter rule", ok,
              std::to_string(checked) + " granularity vectors, classical and complex, exact");
}

// 4. homogeneous-space consistency for the unitary family
void criterion_homogeneous_space() {
    bool ok = true;
    long long checked = 0;
    for (int d = 1; d <= 8; ++d)
        for_each_composition(d, [&](const std::vector<int>& k) {
            long long factors = 0;
            long long pairs = 0;
            long long total = 0;
            for (int ki : k) {
                factors += dim_group(ModelKind::quantum_complex, ki);
                pairs += 2LL * ki * total;
                total += ki;
            }
            ok = ok && dim_group(ModelKind::quantum_complex, d) - factors == pairs;
            ++checked;
        });
    criterion(4, "homogeneous-space consistency", ok,
              std::to_string(checked) + " compositions of d <= 8, exact");
}

// 5. tomography round trip
void criterion_tomography() {
    const Model q(ModelKind::quantum_complex, 2);
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    Rng rng(2024);
    double worst_quantum = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const State rho = random_state(ab.total(), false, rng.next_u64());
        const auto fn =
            reconstruct_joint(ab, joint_probability_table(ab, rho, ic, ic), ic, ic);
        for (int pair = 0; pair < 100; ++pair) {
            const auto x = sample_refinement(Proposition::top(q), rng.uniform_int(1, 2),
                                             rng.next_u64());
            const auto y = sample_refinement(Proposition::top(q), rng.uniform_int(1, 2),
                                             rng.next_u64());
            const double direct = probability(rho, tensor_proposition(x, y));
            worst_quantum = std::max(worst_quantum, std::abs(fn.chain(x, y) - direct));
        }
    }

    const Model c(ModelKind::classical, 3);
    const CompositeModel cab(c, c);
    const ICSet cic = informationally_complete_set(c);
    double worst_classical = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const State rho = random_state(cab.total(), false, rng.next_u64());
        const auto fn =
            reconstruct_joint(cab, joint_probability_table(cab, rho, cic, cic), cic, cic);
        for (int sa = 0; sa < 8; ++sa)
            for (int sb = 0; sb < 8; ++sb) {
                std::vector<int> ia, ib;
                for (int bit = 0; bit < 3; ++bit) {
                    if (sa & (1 << bit))
                        ia.push_back(bit);
                    if (sb & (1 << bit))
                        ib.push_back(bit);
                }
                const auto x = Proposition::classical(c, ia);
                const auto y = Proposition::classical(c, ib);
                const double direct = probability(rho, tensor_proposition(x, y));
                worst_classical = std::max(worst_classical, std::abs(fn.chain(x, y) - direct));
            }
    }
    std::ostringstream detail;
    detail << "quantum max err " << worst_quantum << " < 1e-8; classical max err "
           << worst_classical << " <= 1e-12";
    criterion(5, "tomography round-trip", worst_quantum < 1e-8 && worst_classical <= 1e-12,
              detail.str());
}

// 6. the measurement limit against the closed-form oracle
void criterion_zeno_limit() {
    const Model q(ModelKind::quantum_complex, 2);
    const auto e = Proposition::basis(q, {0});
    const auto w = Proposition::basis(q, {1});
    const GeodesicPath path = GeodesicPath::toward(e, w);
    const double c_delta = 0.5;
    const auto products = zeno_limit(path, c_delta / kMetricRate, {1, 10, 100, 200});
    double worst = 0.0;
    for (std::size_t i = 0; i < products.size(); ++i) {
        const int n = std::vector<int>{1, 10, 100, 200}[i];
        worst = std::max(worst,
                         std::abs(products[i] - std::pow(std::cos(c_delta / n), 2 * n)));
    }
    const double halving = (1.0 - products[2]) / (1.0 - products[3]);
    std::ostringstream detail;
    detail << "closed-form deviation " << worst << " <= 1e-12; deviation ratio "
           << halving << " in [1.9, 2.1]";
    criterion(6, "measurement limit", worst <= 1e-12 && halving >= 1.9 && halving <= 2.1,
              detail.str());
}

// 7. scaling law and base-ray independence
void criterion_scaling() {
    bool ok = true;
    double worst_ratio_err = 0.0;
    for (int d : {2, 3})
        for (int n : {2, 4, 9, 16}) {
            const double ratio = scaling_check(1e-4, n, d, 77);
            worst_ratio_err = std::max(worst_ratio_err, std::abs(ratio - 1.0));
            ok = ok && ratio >= 0.9 && ratio <= 1.1;
        }
    const double reference = saturation_radius_closed_form(1e-4);
    double worst_rel = 0.0;
    Rng rng(91);
    for (int d : {2, 3, 4}) {
        const Model m(ModelKind::quantum_complex, d);
        const auto top = Proposition::top(m);
        for (int i = 0; i < 5; ++i) {
            const auto e0 = sample_refinement(top, 1, rng.next_u64());
            const auto est = continuity_witness(top, e0, e0, 1e-4, 128, rng.next_u64());
            worst_rel = std::max(worst_rel, std::abs(est.delta - reference) / reference);
        }
    }
    ok = ok && worst_rel <= 0.05;
    std::ostringstream detail;
    detail << "ratio error " << worst_ratio_err << " within 0.1; base-ray spread "
           << worst_rel << " within 0.05";
    criterion(7, "scaling law", ok, detail.str());
}

// 8. the randomized probability-calculus suite at 1e-9
void criterion_property_suite() {
    const std::vector<std::string> laws = {
        "sum rule",
        "product rule",
        "group invariance",
        "pure-state supersession",
        "bayes rule",
        "composite distributivity and joint product rule",
    };
    bool ok = true;
    std::string failing;
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex}) {
        VerifyOptions options;
        options.kind = kind;
        options.dim = 4;
        options.trials = 1000;
        options.seed = 4242;
        options.tolerance = 1e-9;
        const Report report = run_verify(options);
        for (const auto& law : laws) {
            bool found = false;
            for (const auto& check : report.checks())
                if (check.name == law) {
                    found = true;
                    const bool applicable =
                        !(law == "bayes rule" && kind != ModelKind::classical);
                    if (applicable && check.status != "pass") {
                        ok = false;
                        failing = law;
                    }
                }
            if (!found) {
                ok = false;
                failing = law + " (missing)";
            }
        }
    }
    criterion(8, "probability-calculus property suite", ok,
              ok ? "six laws, 1000 cases each, classical and complex, tolerance 1e-9"
                 : "failing: " + failing);
}

// 9. the admissibility case list
void criterion_classifier() {
    const auto table = enumerate_admissible(3, 8);
    bool ok = table.size() == 5;
    if (ok) {
        ok = ok && table[0].first.label == CandidateLabel::classical &&
             table[0].first.mu == 1 && table[0].first.dim_g1 == 0 &&
             table[0].second.overall == "admissible-discrete";
        ok = ok && table[1].first.label == CandidateLabel::semi_classical &&
             table[1].first.mu == 1 && table[1].first.dim_g1 == 1 &&
             table[1].second.overall == "admissible-discrete";
        ok = ok && table[2].first.label == CandidateLabel::real_pair_orthogonal &&
             table[2].second.overall == "excluded-convexity" &&
             table[2].second.excluded_by_convexity;
        ok = ok && table[3].first.label == CandidateLabel::quantum &&
             table[3].first.mu == 2 && table[3].second.overall == "admissible-smooth";
        ok = ok && table[4].first.label == CandidateLabel::higher_order &&
             table[4].first.mu == 3 &&
             table[4].second.overall == "flagged-higher-order";
    }
    criterion(9, "classifier case list", ok,
              "classical, semi-classical, quantum (smooth), pair-orthogonal excluded, "
              "mu=3 flagged");
}

// 10. byte-identical CLI output across consecutive runs
void criterion_determinism(const char* cli_path) {
    if (cli_path == nullptr) {
        criterion(10, "CLI determinism", false, "no CLI path supplied");
        return;
    }
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"verify", "verify --trials 200 --seed 42"},
        {"classify", "classify"},
        {"counterexamples", "counterexamples"},
        {"zeno", "zeno --seed 42"},
        {"tomography", "tomography --trials 20 --seed 42"},
    };
    bool ok = true;
    std::string failing;
    for (const auto& [name, args] : commands) {
        const std::string f1 = "acceptance_" + name + "_1.json";
        const std::string f2 = "acceptance_" + name + "_2.json";
        const std::string base = std::string("\"") + cli_path + "\" " + args + " --out ";
        if (std::system((base + f1).c_str()) != 0 ||
            std::system((base + f2).c_str()) != 0) {
            ok = false;
            failing = name + " (nonzero exit)";
            continue;
        }
        const std::string b1 = read_file(f1);
        const std::string b2 = read_file(f2);
        if (b1.empty() || b1 != b2) {
            ok = false;
            failing = name + " (bytes differ)";
        }
        std::remove(f1.c_str());
        std::remove(f2.c_str());
    }
    criterion(10, "CLI determinism", ok,
              ok ? "every command byte-identical across two runs" : failing);
}

} // namespace

int main(int argc, char** argv) {
    criterion_dimension_tables();
    criterion_counterexample_rows();
    criterion_parameter_rule();
    criterion_homogeneous_space();
    criterion_tomography();
    criterion_zeno_limit();
    criterion_scaling();
    criterion_property_suite();
    criterion_classifier();
    criterion_determinism(argc > 1 ? argv[1] : nullptr);

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
