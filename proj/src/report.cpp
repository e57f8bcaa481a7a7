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

#include "qpv/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qpv/classifier.hpp"
#include "qpv/composition.hpp"
#include "qpv/state.hpp"
#include "qpv/tomography.hpp"
#include "qpv/zeno.hpp"

namespace qpv {

using nlohmann::json;

json rounded(double value) {
    require(std::isfinite(value), ErrorCode::internal, "reports carry finite numbers only");
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return json::parse(buffer);
}

Report::Report(std::string command, json config)
    : command_(std::move(command)), config_(std::move(config)) {}

void Report::add(CheckRecord record) {
    checks_.push_back(std::move(record));
}

void Report::add_check(const std::string& name, const std::string& anchor, const json& inputs,
                       const json& expected, const json& observed, bool ok) {
    checks_.push_back({name, anchor, inputs, expected, observed, ok ? "pass" : "fail"});
}

void Report::add_skipped(const std::string& name, const std::string& anchor, const json& inputs,
                         const std::string& why) {
    checks_.push_back({name, anchor, inputs, json(), json(why), "skipped"});
}

bool Report::all_passed() const {
    for (const auto& c : checks_)
        if (c.status == "fail")
            return false;
    return true;
}

json Report::to_json() const {
    std::vector<CheckRecord> ordered = checks_;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    json checks = json::array();
    int pass = 0, failed = 0, skipped = 0;
    for (const auto& c : ordered) {
        json record;
        record["name"] = c.name;
        record["anchor"] = c.anchor;
        record["inputs"] = c.inputs.is_null() ? json::object() : c.inputs;
        record["expected"] = c.expected;
        record["observed"] = c.observed;
        record["status"] = c.status;
        checks.push_back(record);
        if (c.status == "pass")
            ++pass;
        else if (c.status == "fail")
            ++failed;
        else
            ++skipped;
    }
    json out;
    out["command"] = command_;
    out["config"] = config_;
    out["checks"] = checks;
    out["summary"] = {{"pass", pass},
                      {"fail", failed},
                      {"skipped", skipped},
                      {"total", pass + failed + skipped}};
    return out;
}

std::string Report::render_json() const {
    return to_json().dump(2) + "\n";
}

std::string Report::render_markdown() const {
    const json j = to_json();
    std::ostringstream out;
    out << "# qpv " << command_ << " report\n\n";
    out << "config: `" << config_.dump() << "`\n\n";
    out << "| check | status | anchor | observed |\n";
    out << "|---|---|---|---|\n";
    for (const auto& c : j["checks"])
        out << "| " << c["name"].get<std::string>() << " | " << c["status"].get<std::string>()
            << " | " << c["anchor"].get<std::string>() << " | " << c["observed"].dump()
            << " |\n";
    const auto& s = j["summary"];
    out << "\n" << s["pass"] << " pass, " << s["fail"] << " fail, " << s["skipped"]
        << " skipped (" << s["total"] << " total)\n";
    return out.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json")
        return render_json();
    if (format == "md")
        return render_markdown();
    fail(ErrorCode::invalid_argument, "unknown report format '" + format + "'");
}

namespace {

double proposition_deviation(const Proposition& x, const Proposition& y) {
    if (x.model().kind == ModelKind::classical)
        return same_proposition(x, y) ? 0.0 : 1.0;
    return linalg::max_abs(linalg::Matrix(x.projector() - y.projector()));
}

std::vector<int> random_granularity_vector(int total, int max_parts, Rng& rng) {
    std::vector<int> k;
    int rest = total;
    while (rest > 0) {
        if (static_cast<int>(k.size()) + 1 == max_parts) {
            k.push_back(rest);
            break;
        }
        const int ki = rng.uniform_int(1, rest);
        k.push_back(ki);
        rest -= ki;
    }
    return k;
}

Decomposition random_decomposition(const Proposition& a, Rng& rng, int max_parts = 0) {
    if (max_parts <= 0)
        max_parts = a.granularity();
    const auto k = random_granularity_vector(a.granularity(), max_parts, rng);
    return sample_decomposition(a, k, rng.next_u64());
}

} // namespace

Report run_verify(const VerifyOptions& options) {
    require(options.dim >= 2, ErrorCode::invalid_argument,
            "the invariant suites need granularity >= 2");
    require(options.trials >= 1, ErrorCode::invalid_argument, "trials must be positive");
    require(options.kind != ModelKind::quaternionic, ErrorCode::unsupported_model,
            "the quaternionic kind is formula-only; use classify");
    const Model model(options.kind, options.dim);
    const double tol = options.tolerance;
    Rng rng(options.seed);

    Report report("verify", {{"model", model_kind_name(options.kind)},
                             {"dim", options.dim},
                             {"seed", options.seed},
                             {"tolerance", rounded(options.tolerance)},
                             {"trials", options.trials},
                             {"dmax", options.dmax}});
    const json base_inputs = {{"trials", options.trials}};
    const Proposition top = Proposition::top(model);

    // partial-sum laws
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            const auto decomp = random_decomposition(top, rng, 3);
            const Proposition x = decomp.parts[0];
            const Proposition y = decomp.parts.size() > 1 ? decomp.parts[1]
                                                          : Proposition::absurd(model);
            const Proposition z = decomp.parts.size() > 2 ? decomp.parts[2]
                                                          : Proposition::absurd(model);
            worst = std::max(worst, proposition_deviation(partial_sum(x, y), partial_sum(y, x)));
            worst = std::max(worst, proposition_deviation(partial_sum(partial_sum(x, y), z),
                                                          partial_sum(x, partial_sum(y, z))));
        }
        report.add_check("partial sum commutativity and associativity",
                         "partial sum is symmetric and associative", base_inputs,
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // neutral element
    {
        double worst = 0.0;
        int uniqueness_violations = 0;
        const Proposition nothing = Proposition::absurd(model);
        for (int t = 0; t < options.trials; ++t) {
            const int k = rng.uniform_int(1, model.dim - 1);
            const Proposition x = sample_refinement(top, k, rng.next_u64());
            worst = std::max(worst, proposition_deviation(partial_sum(x, nothing), x));
            const Proposition y = relative_complement(top, x);
            if (same_proposition(partial_sum(x, y), y))
                ++uniqueness_violations;
        }
        report.add_check("neutral element", "the absurd hypothesis is the unique neutral element",
                         base_inputs, {{"identity deviation", "<= tolerance"}, {"violations", 0}},
                         {{"identity deviation", rounded(worst)},
                          {"violations", uniqueness_violations}},
                         worst <= tol && uniqueness_violations == 0);
    }

    // relative complement uniqueness
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            const int ka = rng.uniform_int(1, model.dim);
            const Proposition a = sample_refinement(top, ka, rng.next_u64());
            const int kx = rng.uniform_int(0, ka);
            const Proposition x = kx == 0 ? Proposition::absurd(model)
                                          : sample_refinement(a, kx, rng.next_u64());
            const Proposition y = relative_complement(a, x);
            worst = std::max(worst, proposition_deviation(partial_sum(x, y), a));
            if (y.granularity() != a.granularity() - x.granularity())
                worst = std::max(worst, 1.0);
            // a second route to the same complement must agree
            if (model.kind != ModelKind::classical && !x.is_absurd() && kx < ka) {
                Rng inner(rng.next_u64());
                const linalg::Matrix q =
                    linalg::haar_frame(model.kind, ka, ka, inner);
                const Proposition a_again = Proposition::subspace(
                    model, linalg::realify_if(model.kind, linalg::Matrix(a.frame() * q)));
                const Proposition y2 = relative_complement(a_again, x);
                worst = std::max(worst, proposition_deviation(y, y2));
            }
        }
        report.add_check("relative complement uniqueness",
                         "the relative complement is unique", base_inputs,
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // granularity additivity
    {
        int violations = 0;
        for (int t = 0; t < options.trials; ++t) {
            const auto decomp = random_decomposition(top, rng);
            int sum = 0;
            Proposition joined = Proposition::absurd(model);
            for (const auto& part : decomp.parts) {
                sum += part.granularity();
                joined = partial_sum(joined, part);
            }
            if (joined.granularity() != sum || sum != model.dim)
                ++violations;
        }
        report.add_check("granularity additivity", "granularity adds up under partial summation",
                         base_inputs, 0, violations, violations == 0);
    }

    // sum rule
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            const State rho = random_state(model, t % 4 == 0, rng.next_u64());
            const int ka = rng.uniform_int(1, model.dim);
            const Proposition a = sample_refinement(top, ka, rng.next_u64());
            const auto decomp = random_decomposition(a, rng);
            double sum = 0.0;
            for (const auto& part : decomp.parts)
                sum += probability(rho, part);
            worst = std::max(worst, std::abs(probability(rho, a) - sum));
        }
        report.add_check("sum rule", "probabilities obey the sum rule", base_inputs,
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // product rule
    {
        double worst = 0.0;
        int used = 0;
        for (int t = 0; t < options.trials; ++t) {
            const State rho = random_state(model, t % 4 == 0, rng.next_u64());
            const int ka = rng.uniform_int(1, model.dim);
            const Proposition a = sample_refinement(top, ka, rng.next_u64());
            const int kx = rng.uniform_int(1, ka);
            const Proposition x = sample_refinement(a, kx, rng.next_u64());
            const double pa = probability(rho, a);
            if (pa <= 1e-4)
                continue;
            ++used;
            const double lhs = probability(rho, x);
            const double rhs = probability(condition(rho, a), x) * pa;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        report.add_check("product rule", "conditional probabilities compose by the product rule",
                         {{"trials", options.trials}, {"used", used}},
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // group invariance
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            const State rho = random_state(model, t % 4 == 0, rng.next_u64());
            const int k = rng.uniform_int(1, model.dim);
            const Proposition x = sample_refinement(top, k, rng.next_u64());
            const GroupElement g = random_group_element(model, rng.next_u64());
            worst = std::max(worst, std::abs(probability(apply(g, rho), apply(g, x)) -
                                             probability(rho, x)));
        }
        report.add_check("group invariance",
                         "probabilities are invariant under symmetry transformations",
                         base_inputs, "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // pure-state supersession
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            const Proposition e = sample_refinement(top, 1, rng.next_u64());
            std::vector<State> priors;
            for (int i = 0; i < 3; ++i)
                priors.push_back(random_state(model, false, rng.next_u64()));
            std::vector<Proposition> probes;
            for (int i = 0; i < 4; ++i)
                probes.push_back(
                    sample_refinement(top, rng.uniform_int(1, model.dim), rng.next_u64()));
            worst = std::max(worst, check_supersession(e, priors, probes).max_deviation);
        }
        report.add_check("pure-state supersession",
                         "a most accurate condition supersedes any prior", base_inputs,
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // Bayes rule (classical only)
    if (model.kind == ModelKind::classical) {
        double worst = 0.0;
        int used = 0;
        for (int t = 0; t < options.trials; ++t) {
            const State rho = random_state(model, false, rng.next_u64());
            const Proposition a =
                sample_refinement(top, rng.uniform_int(1, model.dim), rng.next_u64());
            const Proposition b =
                sample_refinement(top, rng.uniform_int(1, model.dim), rng.next_u64());
            const double pb = probability(rho, b);
            if (pb <= 1e-4)
                continue;
            ++used;
            const double lhs = probability(rho, meet(a, b));
            const double rhs = probability(condition(rho, b), a) * pb;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        report.add_check("bayes rule", "jointly decidable hypotheses obey the Bayes rule",
                         {{"trials", options.trials}, {"used", used}},
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    } else {
        report.add_skipped("bayes rule", "jointly decidable hypotheses obey the Bayes rule",
                           base_inputs, "general Boolean operations exist classically only");
    }

    // mixing linearity
    {
        double worst = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            std::vector<State> states = {random_state(model, false, rng.next_u64()),
                                         random_state(model, t % 2 == 0, rng.next_u64())};
            const double a1 = 0.3 + 0.4 * rng.uniform();
            const double a2 = (1.0 - a1) * rng.uniform();
            const std::vector<double> weights = {a1, a2};
            const State mixture = mix(states, weights);
            const Proposition x =
                sample_refinement(top, rng.uniform_int(1, model.dim), rng.next_u64());
            const double expect =
                a1 * probability(states[0], x) + a2 * probability(states[1], x);
            worst = std::max(worst, std::abs(probability(mixture, x) - expect));
        }
        report.add_check("mixing linearity", "states form a convex cone", base_inputs,
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // composite distributivity + joint product rule
    {
        const Model factor_b(model.kind, 2);
        const CompositeModel ab(model, factor_b);
        const Proposition top_b = Proposition::top(factor_b);
        double worst = 0.0;
        int used = 0;
        for (int t = 0; t < options.trials; ++t) {
            const auto da = random_decomposition(top, rng, 3);
            const auto db = random_decomposition(top_b, rng, 2);
            const State rho = random_state(ab.total(), false, rng.next_u64());
            const auto verdict = check_distributivity(da, db, rho);
            worst = std::max(worst,
                             std::max(verdict.proposition_deviation,
                                      verdict.probability_deviation));
            const Proposition x =
                sample_refinement(top, rng.uniform_int(1, model.dim), rng.next_u64());
            const Proposition y = sample_refinement(top_b, 1, rng.next_u64());
            const double py = probability(rho, embed_right(ab, y));
            if (py <= 1e-4)
                continue;
            ++used;
            const double joint = probability(rho, tensor_proposition(x, y));
            const double chained = conditional_given_right(ab, rho, x, y) * py;
            worst = std::max(worst, std::abs(joint - chained));
        }
        report.add_check("composite distributivity and joint product rule",
                         "conjunctions over disparate systems distribute and compose",
                         {{"trials", options.trials}, {"used", used}, {"factor_dim", 2}},
                         "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // meet/join against the algebraic oracle
    {
        double worst = 0.0;
        if (model.kind == ModelKind::classical) {
            // exhaustive distributivity over a granularity-5 window
            const int d = std::min(model.dim, 5);
            const int universe = 1 << d;
            for (int sa = 0; sa < universe; ++sa)
                for (int sb = 0; sb < universe; ++sb)
                    for (int sc = 0; sc < universe; ++sc) {
                        auto to_subset = [&](int bits) {
                            std::vector<int> subset;
                            for (int i = 0; i < d; ++i)
                                if (bits & (1 << i))
                                    subset.push_back(i);
                            return Proposition::classical(model, subset);
                        };
                        const Proposition a = to_subset(sa);
                        const Proposition b = to_subset(sb);
                        const Proposition c = to_subset(sc);
                        if (!same_proposition(meet(a, join(b, c)), join(meet(a, b), meet(a, c))))
                            worst = std::max(worst, 1.0);
                        if ((sb & sc) == 0) { // disjoint: join is a partial sum
                            const Proposition viaSum = partial_sum(b, c);
                            if (!same_proposition(meet(a, viaSum),
                                                  join(meet(a, b), meet(a, c))))
                                worst = std::max(worst, 1.0);
                        }
                    }
        } else {
            for (int t = 0; t < options.trials; ++t) {
                const auto decomp = random_decomposition(top, rng);
                Proposition x = Proposition::absurd(model);
                Proposition y = Proposition::absurd(model);
                for (const auto& part : decomp.parts) {
                    const int where = rng.uniform_int(0, 3);
                    if (where == 0 || where == 2)
                        x = partial_sum(x, part);
                    if (where == 1 || where == 2)
                        y = partial_sum(y, part);
                }
                const linalg::Matrix px = x.projector();
                const linalg::Matrix py = y.projector();
                const Proposition both = meet(x, y);
                const Proposition either = join(x, y);
                worst = std::max(worst,
                                 linalg::max_abs(linalg::Matrix(both.projector() - px * py)));
                worst = std::max(worst, linalg::max_abs(linalg::Matrix(
                                            either.projector() - (px + py - px * py))));
            }
        }
        report.add_check("meet and join", "Boolean operations through a joint decomposition",
                         base_inputs, "max deviation <= tolerance", rounded(worst), worst <= tol);
    }

    // preparation channel
    {
        double worst = 0.0;
        int purity_violations = 0;
        int used = 0;
        for (int t = 0; t < options.trials; ++t) {
            const auto m = random_decomposition(top, rng);
            const GroupElement g = random_group_element(model, rng.next_u64());
            const State sigma = random_state(model, true, rng.next_u64());
            const State rotated = apply(g, sigma);

            // all-ones retention: outcome probabilities survive, and the map
            // is idempotent
            const KeepWeights keep_all(std::vector<double>(m.parts.size(), 1.0));
            const State once = apply_preparation(sigma, g, m, keep_all);
            const State twice =
                apply_preparation(once, GroupElement::identity(model), m, keep_all);
            for (const auto& part : m.parts)
                worst = std::max(worst, std::abs(probability(once, part) -
                                                 probability(rotated, part)));
            if (!same_state(once, twice))
                worst = std::max(worst, 1.0);

            // single kept outcome on a pure prior stays pure
            std::vector<double> lambda(m.parts.size(), 0.0);
            lambda[0] = 1.0;
            if (probability(rotated, m.parts[0]) > 1e-6) {
                ++used;
                const State kept = apply_preparation(sigma, g, m, KeepWeights(lambda));
                if (!is_pure(kept))
                    ++purity_violations;
            }
        }
        report.add_check("preparation channel",
                         "measure-and-keep channels preserve outcome statistics and purity",
                         {{"trials", options.trials}, {"pure-branch trials", used}},
                         {{"max deviation", "<= tolerance"}, {"purity violations", 0}},
                         {{"max deviation", rounded(worst)},
                          {"purity violations", purity_violations}},
                         worst <= tol && purity_violations == 0);
    }

    return report;
}

namespace {

json composition_to_json(const CompositionConstraintRecord& r) {
    return {{"branch", r.finite_branch ? "finite" : "continuous"},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"status", constraint_status_name(r.status)}};
}

json reductionism_to_json(const ReductionismRecord& r) {
    return {{"composite", r.composite_parameters},
            {"product", r.product_parameters},
            {"status", reductionism_status_name(r.status)}};
}

void add_known_theory_checks(Report& report) {
    struct Expectation {
        ModelKind kind;
        long long s2, s4, g2, g4;
        const char* composition;
        const char* reductionism;
    };
    const std::vector<Expectation> expectations = {
        {ModelKind::classical, 2, 4, 0, 0, "satisfied", "saturated"},
        {ModelKind::quantum_complex, 4, 16, 4, 16, "saturated", "saturated"},
        {ModelKind::quantum_real, 3, 10, 1, 6, "satisfied", "violated"},
        {ModelKind::quaternionic, 6, 28, 10, 36, "violated", "strict"},
    };
    const auto rows = known_theory_report();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& want = expectations[i];
        const bool ok = row.kind == want.kind && row.s2 == want.s2 && row.s4 == want.s4 &&
                        row.g2 == want.g2 && row.g4 == want.g4 &&
                        std::string(constraint_status_name(row.composition.status)) ==
                            want.composition &&
                        std::string(reductionism_status_name(row.reductionism.status)) ==
                            want.reductionism;
        report.add_check(
            std::string("known theory: ") + model_kind_name(row.kind),
            "dimension data and the composition/reductionism verdicts of the four theories",
            {{"d_a", 2}, {"d_b", 2}},
            {{"S(2)", want.s2},
             {"S(4)", want.s4},
             {"dimG(2)", want.g2},
             {"dimG(4)", want.g4},
             {"composition", want.composition},
             {"reductionism", want.reductionism}},
            {{"S(2)", row.s2},
             {"S(4)", row.s4},
             {"dimG(2)", row.g2},
             {"dimG(4)", row.g4},
             {"composition", composition_to_json(row.composition)},
             {"reductionism", reductionism_to_json(row.reductionism)}},
            ok);
    }
}

} // namespace

Report run_classify(int mu_max, int dmax) {
    require(mu_max >= 1, ErrorCode::invalid_argument, "mu_max must be >= 1");
    require(dmax >= 4, ErrorCode::invalid_argument, "dmax must be >= 4");
    Report report("classify", {{"mu_max", mu_max}, {"dmax", dmax}});

    // dimension tables, exact integers
    {
        const std::vector<int> dims = {1, 2, 3, 4, 6};
        struct Row {
            ModelKind kind;
            std::vector<long long> s, g;
        };
        const std::vector<Row> expected = {
            {ModelKind::classical, {1, 2, 3, 4, 6}, {0, 0, 0, 0, 0}},
            {ModelKind::quantum_complex, {1, 4, 9, 16, 36}, {1, 4, 9, 16, 36}},
            {ModelKind::quantum_real, {1, 3, 6, 10, 21}, {0, 1, 3, 6, 15}},
            {ModelKind::quaternionic, {1, 6, 15, 28, 66}, {3, 10, 21, 36, 78}},
        };
        for (const auto& row : expected) {
            bool ok = true;
            const DimensionTable table{row.kind};
            json observed_s = json::array(), observed_g = json::array();
            for (std::size_t i = 0; i < dims.size(); ++i) {
                const long long s = table.parameters(dims[i]);
                const long long g = table.group(dims[i]);
                observed_s.push_back(s);
                observed_g.push_back(g);
                ok = ok && s == row.s[i] && g == row.g[i];
            }
            report.add_check(std::string("dimension table: ") + model_kind_name(row.kind),
                             "closed forms for S(d) and dim G(d)", {{"dims", dims}},
                             {{"S", row.s}, {"dimG", row.g}},
                             {{"S", observed_s}, {"dimG", observed_g}}, ok);
        }
    }

    // candidate table
    {
        const auto table = enumerate_admissible(mu_max, dmax);
        int smooth_admissible = 0;
        bool smooth_is_quantum = true;
        for (const auto& [cand, verdicts] : table) {
            if (verdicts.overall == "admissible-smooth") {
                ++smooth_admissible;
                smooth_is_quantum =
                    smooth_is_quantum && cand.label == CandidateLabel::quantum;
            }
            std::string want;
            switch (cand.label) {
                case CandidateLabel::classical:
                case CandidateLabel::semi_classical: want = "admissible-discrete"; break;
                case CandidateLabel::quantum: want = "admissible-smooth"; break;
                case CandidateLabel::real_pair_orthogonal: want = "excluded-convexity"; break;
                case CandidateLabel::higher_order: want = "flagged-higher-order"; break;
                case CandidateLabel::other: want = "inadmissible"; break;
            }
            json entries = json::array();
            for (const auto& e : verdicts.entries)
                entries.push_back({{"name", e.name},
                                   {"status", e.status},
                                   {"lhs", e.lhs},
                                   {"rhs", e.rhs},
                                   {"detail", e.detail}});
            report.add_check(
                std::string("candidate ") + candidate_label_name(cand.label) + " (mu=" +
                    std::to_string(cand.mu) + ", g1=" + std::to_string(cand.dim_g1) +
                    ", x2=" + std::to_string(cand.dim_x2) + ")",
                "admissibility of abstract power-law theories",
                {{"mu", cand.mu}, {"dim_g1", cand.dim_g1}, {"dim_x2", cand.dim_x2}}, want,
                {{"overall", verdicts.overall}, {"constraints", entries}},
                verdicts.overall == want);
        }
        if (mu_max >= 2)
            report.add_check("unique smooth admissible candidate",
                             "only the unitary family passes every smooth-theory constraint",
                             {{"mu_max", mu_max}, {"dmax", dmax}}, 1,
                             {{"count", smooth_admissible},
                              {"quantum", smooth_is_quantum}},
                             smooth_admissible == 1 && smooth_is_quantum);
    }

    // parameter rule, exact, over every composition of every d <= dmax
    {
        for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex,
                               ModelKind::quantum_real, ModelKind::quaternionic}) {
            long long checked = 0;
            bool ok = true;
            std::vector<std::vector<int>> comps;
            for (int d = 1; d <= dmax; ++d) {
                comps.clear();
                std::vector<int> acc;
                auto rec = [&](auto&& self, int rest) -> void {
                    if (rest == 0) {
                        comps.push_back(acc);
                        return;
                    }
                    for (int k = 1; k <= rest; ++k) {
                        acc.push_back(k);
                        self(self, rest - k);
                        acc.pop_back();
                    }
                };
                rec(rec, d);
                for (const auto& k : comps) {
                    long long sum = 0;
                    for (int ki : k)
                        sum += state_parameter_count(kind, ki);
                    ok = ok && state_parameter_count(kind, d) ==
                                   dim_decomposition_manifold(kind, k) + sum;
                    ++checked;
                }
            }
            report.add_check(std::string("parameter rule: ") + model_kind_name(kind),
                             "S(sum k_i) = dim M({k_i}) + sum S(k_i)",
                             {{"dmax", dmax}, {"granularity vectors", checked}},
                             "exact for every granularity vector", ok ? "exact" : "mismatch",
                             ok);
        }
    }

    // homogeneous-space consistency for the unitary family
    {
        long long checked = 0;
        bool ok = true;
        for (int d = 1; d <= dmax; ++d) {
            std::vector<std::vector<int>> comps;
            std::vector<int> acc;
            auto rec = [&](auto&& self, int rest) -> void {
                if (rest == 0) {
                    comps.push_back(acc);
                    return;
                }
                for (int k = 1; k <= rest; ++k) {
                    acc.push_back(k);
                    self(self, rest - k);
                    acc.pop_back();
                }
            };
            rec(rec, d);
            for (const auto& k : comps) {
                long long factor_dims = 0;
                for (int ki : k)
                    factor_dims += dim_group(ModelKind::quantum_complex, ki);
                ok = ok && dim_group(ModelKind::quantum_complex, d) - factor_dims ==
                               dim_decomposition_manifold(ModelKind::quantum_complex, k);
                ++checked;
            }
        }
        report.add_check("homogeneous-space consistency",
                         "decomposition manifolds are group quotients",
                         {{"dmax", dmax}, {"granularity vectors", checked}},
                         "dim U(d) - sum dim U(k_i) = 2 sum_{i<j} k_i k_j",
                         ok ? "exact" : "mismatch", ok);
    }

    // entanglement dimension gap
    {
        bool ok = true;
        long long min_gap_quantum = -1;
        for (int da = 2; da <= dmax; ++da)
            for (int db = 2; da * db <= dmax; ++db) {
                const long long gap =
                    entanglement_dim_gap(ModelKind::quantum_complex, da, db);
                if (min_gap_quantum < 0 || gap < min_gap_quantum)
                    min_gap_quantum = gap;
                ok = ok && gap > 0;
                ok = ok && entanglement_dim_gap(ModelKind::classical, da, db) == 0;
            }
        report.add_check("entanglement dimension gap",
                         "composite pure-state manifolds exceed products of factors",
                         {{"dmax", dmax}},
                         "dim X(dA dB) > dim X(dA) + dim X(dB) (quantum); = (classical)",
                         {{"min quantum gap", min_gap_quantum}}, ok && min_gap_quantum >= 2);
    }

    // finite-branch composition bound for the symmetric family
    {
        bool ok = true;
        for (int da = 2; da <= dmax; ++da)
            for (int db = 2; da * db <= dmax; ++db)
                ok = ok && mu_prime_symmetric(da * db) >=
                               mu_prime_symmetric(da) * mu_prime_symmetric(db);
        report.add_check("independent-set composition bound",
                         "the largest independent subset of S_d composes multiplicatively",
                         {{"dmax", dmax}}, "mu'(S_dAdB) >= mu'(S_dA) mu'(S_dB)",
                         ok ? "satisfied" : "violated", ok);
    }

    add_known_theory_checks(report);

    report.add_skipped("alternative finite groups",
                       "constrained classical theories from finite groups other than S_d",
                       {{"mu", 1}, {"dim_g1", 0}},
                       "only the symmetric family's independent-set invariant is implemented; "
                       "other finite groups are recorded as unexplored");
    return report;
}

Report run_counterexamples() {
    Report report("counterexamples", json::object());
    add_known_theory_checks(report);

    const auto real = reductionism_check(ModelKind::quantum_real, 2, 2);
    report.add_check("real reductionism violation",
                     "two real qubits carry more parameters than their product description",
                     {{"d_a", 2}, {"d_b", 2}}, {{"composite", 10}, {"product", 9}},
                     reductionism_to_json(real),
                     real.composite_parameters == 10 && real.product_parameters == 9 &&
                         real.status == ReductionismStatus::violated);

    const auto quat = composition_constraint(ModelKind::quaternionic, 2, 2);
    report.add_check("quaternionic composition violation",
                     "symplectic generators do not compose: dim G(4) < dim G(2)^2",
                     {{"d_a", 2}, {"d_b", 2}}, {{"lhs", 36}, {"rhs", 100}},
                     composition_to_json(quat),
                     quat.lhs == 36 && quat.rhs == 100 &&
                         quat.status == ConstraintStatus::violated);
    return report;
}

Report run_zeno(const ZenoOptions& options) {
    require(!options.eps_grid.empty(), ErrorCode::invalid_argument, "eps grid must be nonempty");
    require(!options.n_list.empty(), ErrorCode::invalid_argument, "N list must be nonempty");
    for (double eps : options.eps_grid)
        require(eps > 0.0 && eps < 1.0, ErrorCode::invalid_argument, "eps must lie in (0, 1)");
    require(options.dim >= 2, ErrorCode::invalid_argument, "granularity must be >= 2");

    Report report("zeno", {{"eps_grid", options.eps_grid},
                           {"n_list", options.n_list},
                           {"dim", options.dim},
                           {"seed", options.seed}});
    const Model model(ModelKind::quantum_complex, options.dim);
    const Proposition top = Proposition::top(model);
    Rng rng(options.seed);

    // transition-probability symmetry
    {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Proposition e = sample_refinement(top, 1, rng.next_u64());
            const GroupElement g = random_group_element(model, rng.next_u64());
            const Proposition f = apply(g, e);
            worst = std::max(worst, std::abs(probability(State::pure(f), e) -
                                             probability(State::pure(e), f)));
        }
        report.add_check("transition symmetry", "prob(e|g(e)) = prob(g(e)|e) for pure rays",
                         {{"trials", 100}}, "max deviation <= 1e-12", rounded(worst),
                         worst <= 1e-12);
    }

    // continuity witness against the closed-form saturation radius
    {
        double worst_rel = 0.0;
        json observed = json::array();
        for (double eps : options.eps_grid) {
            const auto est =
                continuity_witness(top, Proposition::basis(model, {0}),
                                   Proposition::basis(model, {0}), eps, 200, rng.next_u64());
            const double reference = saturation_radius_closed_form(eps);
            const double rel = std::abs(est.delta - reference) / reference;
            worst_rel = std::max(worst_rel, rel);
            observed.push_back({{"eps", rounded(eps)},
                                {"delta", rounded(est.delta)},
                                {"closed_form", rounded(reference)}});
        }
        report.add_check("continuity saturation radius",
                         "the largest radius keeping prob(x|e) > 1 - eps",
                         {{"samples", 200}}, "within 5% of the closed form",
                         {{"grid", observed}, {"worst relative error", rounded(worst_rel)}},
                         worst_rel <= 0.05);
    }

    // base-ray and granularity independence of delta(eps)
    {
        const double eps = options.eps_grid.front();
        const double reference = saturation_radius_closed_form(eps);
        double worst_rel = 0.0;
        for (int d : {2, 3, 4}) {
            const Model m(ModelKind::quantum_complex, d);
            const Proposition t = Proposition::top(m);
            for (int i = 0; i < 5; ++i) {
                const Proposition e0 = sample_refinement(t, 1, rng.next_u64());
                const auto est = continuity_witness(t, e0, e0, eps, 200, rng.next_u64());
                worst_rel = std::max(worst_rel, std::abs(est.delta - reference) / reference);
            }
        }
        report.add_check("saturation radius independence",
                         "delta(eps) depends on eps only, not on the ray or granularity",
                         {{"eps", rounded(eps)}, {"rays per dim", 5}, {"dims", {2, 3, 4}}},
                         "within 5% of the closed form", rounded(worst_rel), worst_rel <= 0.05);
    }

    // scaling law
    {
        const double eps = options.eps_grid.front();
        json observed = json::array();
        bool ok = true;
        for (int n : options.n_list) {
            if (n < 2)
                continue;
            if (n * eps >= 0.1) {
                observed.push_back({{"N", n}, {"status", "outside the small-eps regime"}});
                continue;
            }
            const double ratio = scaling_check(eps, n, options.dim, options.seed);
            observed.push_back({{"N", n}, {"ratio", rounded(ratio)}});
            ok = ok && ratio >= 0.9 && ratio <= 1.1;
        }
        report.add_check("scaling law", "delta(N eps) is close to sqrt(N) delta(eps)",
                         {{"eps", rounded(eps)}, {"dim", options.dim}},
                         "ratio within [0.9, 1.1]", observed, ok);
    }

    // measurement limit against the closed form
    {
        const Model qubit(ModelKind::quantum_complex, 2);
        const Proposition e = Proposition::basis(qubit, {0});
        const Proposition w = Proposition::basis(qubit, {1});
        const GeodesicPath path = GeodesicPath::toward(e, w);
        const double c_delta = 0.5; // metric rate times path length
        const double delta = c_delta / kMetricRate;
        const std::vector<int> steps = {1, 10, 100, 200};
        const auto products = zeno_limit(path, delta, steps);
        double worst = 0.0;
        json observed = json::array();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const double closed =
                std::pow(std::cos(c_delta / steps[i]), 2.0 * steps[i]);
            worst = std::max(worst, std::abs(products[i] - closed));
            observed.push_back({{"N", steps[i]},
                                {"product", rounded(products[i])},
                                {"closed_form", rounded(closed)}});
        }
        const double halving =
            (1.0 - products[2]) / (1.0 - products[3]); // N = 100 vs N = 200
        const bool monotone = products[0] <= products[1] && products[1] <= products[2] &&
                              products[2] <= products[3];
        report.add_check("measurement limit products",
                         "stepwise-measured transport stays put as N grows",
                         {{"c_delta", rounded(c_delta)}, {"steps", steps}},
                         {{"max closed-form deviation", "<= 1e-12"},
                          {"deviation halving", "within [1.9, 2.1]"},
                          {"monotone", true}},
                         {{"grid", observed},
                          {"max closed-form deviation", rounded(worst)},
                          {"deviation halving", rounded(halving)},
                          {"monotone", monotone}},
                         worst <= 1e-12 && halving >= 1.9 && halving <= 2.1 && monotone);
    }

    // preparation tolerance
    {
        const Model m(ModelKind::quantum_complex, options.dim);
        const Proposition e = Proposition::basis(m, {0});
        const double eps = 1e-3;
        const int n = 4;
        double min_product = 1.0;
        double worst_factorization = 0.0;
        double threshold = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto verdict = preparation_tolerance_check(e, eps, n, rng.next_u64());
            min_product = std::min(min_product, verdict.product);
            threshold = verdict.threshold;
            worst_factorization = std::max(worst_factorization, verdict.composite_deviation);
        }
        report.add_check("preparation tolerance",
                         "N near-copies survive jointly when prepared to accuracy "
                         "delta(eps)/sqrt(N)",
                         {{"eps", rounded(eps)}, {"N", n}, {"trials", 100}},
                         {{"min product", ">= 1 - 1.1 eps"},
                          {"composite factorization", "<= 1e-12"}},
                         {{"min product", rounded(min_product)},
                          {"threshold", rounded(threshold)},
                          {"composite factorization", rounded(worst_factorization)}},
                         min_product >= threshold && worst_factorization <= 1e-12);
    }

    // aggregated survey: the saturation radius grows with the threshold
    {
        const auto survey = zeno_survey(options.dim, options.eps_grid, options.n_list,
                                        options.seed);
        json deltas = json::array();
        for (std::size_t i = 0; i < survey.eps_grid.size(); ++i)
            deltas.push_back({{"eps", rounded(survey.eps_grid[i])},
                              {"delta", rounded(survey.delta_estimates[i])}});
        report.add_check("saturation radius monotonicity",
                         "delta(eps) is nondecreasing in the threshold",
                         {{"samples", 128}}, true,
                         {{"monotone", survey.delta_monotone}, {"grid", deltas}},
                         survey.delta_monotone);
    }

    report.add_skipped("classical continuity", "continuity over classical models",
                       json::object(),
                       "discrete: vacuously continuous, X(d) has no nontrivial balls");
    return report;
}

Report run_tomography(int dim_a, int dim_b, int trials, std::uint64_t seed) {
    require(dim_a >= 2 && dim_b >= 2, ErrorCode::invalid_argument,
            "factor granularities must be >= 2");
    require(trials >= 1, ErrorCode::invalid_argument, "trials must be positive");
    Report report("tomography", {{"dim_a", dim_a},
                                 {"dim_b", dim_b},
                                 {"trials", trials},
                                 {"seed", seed}});
    Rng rng(seed);

    const Model model_a(ModelKind::quantum_complex, dim_a);
    const Model model_b(ModelKind::quantum_complex, dim_b);
    const CompositeModel ab(model_a, model_b);
    const ICSet ic_a = informationally_complete_set(model_a);
    const ICSet ic_b = informationally_complete_set(model_b);

    // family sizes and conditioning
    {
        const ICSet real_pair = informationally_complete_set(Model(ModelKind::quantum_real, 2));
        const bool ok =
            static_cast<long long>(ic_a.props.size()) ==
                state_parameter_count(ModelKind::quantum_complex, dim_a) &&
            static_cast<long long>(ic_b.props.size()) ==
                state_parameter_count(ModelKind::quantum_complex, dim_b) &&
            real_pair.props.size() == 3 && ic_a.smallest_singular_value > kRankTol &&
            ic_b.smallest_singular_value > kRankTol;
        report.add_check("informationally complete families",
                         "S(d) fixed projectors with full-rank state-to-probability map",
                         {{"dim_a", dim_a}, {"dim_b", dim_b}},
                         {{"sizes", "S(d)"}, {"smallest singular value", "> 1e-8"}},
                         {{"size_a", ic_a.props.size()},
                          {"size_b", ic_b.props.size()},
                          {"size_real_d2", real_pair.props.size()},
                          {"sv_a", rounded(ic_a.smallest_singular_value)},
                          {"sv_b", rounded(ic_b.smallest_singular_value)}},
                         ok);
    }

    // quantum round trip + chain/linear agreement + linearity in the state
    {
        double worst_direct = 0.0;
        double worst_paths = 0.0;
        double worst_linearity = 0.0;
        const Proposition top_a = Proposition::top(model_a);
        const Proposition top_b = Proposition::top(model_b);
        for (int t = 0; t < trials; ++t) {
            const State rho = random_state(ab.total(), false, rng.next_u64());
            const auto table = joint_probability_table(ab, rho, ic_a, ic_b);
            const auto q = reconstruct_joint(ab, table, ic_a, ic_b);
            for (int pair = 0; pair < 100; ++pair) {
                const Proposition x =
                    sample_refinement(top_a, rng.uniform_int(1, dim_a), rng.next_u64());
                const Proposition y =
                    sample_refinement(top_b, rng.uniform_int(1, dim_b), rng.next_u64());
                const double direct = probability(rho, tensor_proposition(x, y));
                const double via_chain = q.chain(x, y);
                const double via_linear = q.linear(x, y);
                worst_direct = std::max(worst_direct, std::abs(via_chain - direct));
                worst_paths = std::max(worst_paths, std::abs(via_chain - via_linear));
            }
            if (t % 10 == 0) {
                const State rho2 = random_state(ab.total(), false, rng.next_u64());
                const State blend = mix({rho, rho2}, {0.4, 0.6});
                const auto q2 = reconstruct_joint(
                    ab, joint_probability_table(ab, rho2, ic_a, ic_b), ic_a, ic_b);
                const auto qb = reconstruct_joint(
                    ab, joint_probability_table(ab, blend, ic_a, ic_b), ic_a, ic_b);
                const Proposition x = sample_refinement(top_a, 1, rng.next_u64());
                const Proposition y = sample_refinement(top_b, 1, rng.next_u64());
                worst_linearity = std::max(
                    worst_linearity,
                    std::abs(qb.linear(x, y) - 0.4 * q.linear(x, y) - 0.6 * q2.linear(x, y)));
            }
        }
        report.add_check("quantum round trip",
                         "joint IC probabilities determine every composite probability",
                         {{"trials", trials}, {"pairs per trial", 100}},
                         "max |reconstructed - direct| < 1e-8", rounded(worst_direct),
                         worst_direct < 1e-8);
        report.add_check("conditional chain equals linear extension",
                         "the conditional derivation and the global inversion agree",
                         {{"trials", trials}}, "max difference < 1e-8", rounded(worst_paths),
                         worst_paths < 1e-8);
        report.add_check("reconstruction linearity",
                         "the reconstruction functional is linear in the state",
                         {{"mixtures", (trials + 9) / 10}}, "max deviation < 1e-8",
                         rounded(worst_linearity), worst_linearity < 1e-8);
    }

    // classical exactness
    {
        const Model ca(ModelKind::classical, 3);
        const Model cb(ModelKind::classical, 3);
        const CompositeModel cab(ca, cb);
        const ICSet ic_ca = informationally_complete_set(ca);
        const ICSet ic_cb = informationally_complete_set(cb);
        double worst = 0.0;
        for (int t = 0; t < std::min(trials, 25); ++t) {
            const State rho = random_state(cab.total(), false, rng.next_u64());
            const auto q = reconstruct_joint(
                cab, joint_probability_table(cab, rho, ic_ca, ic_cb), ic_ca, ic_cb);
            // every pair event over both factors
            for (int sa = 0; sa < (1 << 3); ++sa)
                for (int sb = 0; sb < (1 << 3); ++sb) {
                    std::vector<int> xa, yb;
                    for (int i = 0; i < 3; ++i) {
                        if (sa & (1 << i))
                            xa.push_back(i);
                        if (sb & (1 << i))
                            yb.push_back(i);
                    }
                    const Proposition x = Proposition::classical(ca, xa);
                    const Proposition y = Proposition::classical(cb, yb);
                    const double direct = probability(rho, tensor_proposition(x, y));
                    worst = std::max(worst, std::abs(q.chain(x, y) - direct));
                }
        }
        report.add_check("classical round trip", "classical reconstruction is exact",
                         {{"dims", {3, 3}}, {"pair events", "all"}},
                         "max deviation <= 1e-12", rounded(worst), worst <= 1e-12);
    }

    // dropping any effect breaks completeness
    {
        const Eigen::MatrixXd& m = ic_a.effect_matrix;
        Eigen::MatrixXd reduced(m.rows() - 1, m.cols());
        reduced = m.topRows(m.rows() - 1);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(reduced, Eigen::ComputeFullV);
        const Eigen::VectorXd kernel = svd.matrixV().col(m.cols() - 1);
        const double reduced_sv = svd.singularValues()(svd.singularValues().size() - 1);
        // two distinct states that agree on every remaining effect
        const linalg::Matrix direction =
            hermitian_from_coords(ModelKind::quantum_complex, dim_a, kernel);
        const double scale = 0.4 / static_cast<double>(dim_a) /
                             std::max(1e-12, linalg::max_abs(direction));
        const State base = State::maximally_mixed(model_a);
        const State shifted = State::density(
            model_a, linalg::Matrix(base.rho() + scale * direction));
        double agree = 0.0;
        for (std::size_t i = 0; i + 1 < ic_a.props.size(); ++i)
            agree = std::max(agree, std::abs(probability(base, ic_a.props[i]) -
                                             probability(shifted, ic_a.props[i])));
        const double split = std::abs(probability(base, ic_a.props.back()) -
                                      probability(shifted, ic_a.props.back()));
        report.add_check("informational completeness is tight",
                         "removing one effect leaves two distinguishable states unresolved",
                         {{"dropped", "last effect"}, {"dim", dim_a}},
                         {{"agreement on the rest", "<= 1e-9"},
                          {"split on the dropped effect", "> 1e-6"}},
                         {{"agreement", rounded(agree)},
                          {"split", rounded(split)},
                          {"reduced smallest singular value", rounded(reduced_sv)}},
                         agree <= 1e-9 && split > 1e-6);
    }

    // reductionism counts for the active kinds
    {
        const auto complex_record = reductionism_check(ModelKind::quantum_complex, dim_a, dim_b);
        const auto classical_record = reductionism_check(ModelKind::classical, dim_a, dim_b);
        report.add_check("reductionism saturation",
                         "table sizes S(dA) S(dB) match S(dA dB) for both concrete kinds",
                         {{"dim_a", dim_a}, {"dim_b", dim_b}},
                         {{"quantum", "saturated"}, {"classical", "saturated"}},
                         {{"quantum", reductionism_to_json(complex_record)},
                          {"classical", reductionism_to_json(classical_record)}},
                         complex_record.status == ReductionismStatus::saturated &&
                             classical_record.status == ReductionismStatus::saturated);
    }

    return report;
}

} // namespace qpv
