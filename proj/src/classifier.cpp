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

#include "qpv/classifier.hpp"

namespace qpv {

const char* candidate_label_name(CandidateLabel label) {
    switch (label) {
        case CandidateLabel::classical: return "classical";
        case CandidateLabel::semi_classical: return "semi-classical";
        case CandidateLabel::quantum: return "quantum";
        case CandidateLabel::real_pair_orthogonal: return "real-pair-orthogonal";
        case CandidateLabel::higher_order: return "higher-order";
        case CandidateLabel::other: return "other";
    }
    return "unknown";
}

long long TheoryCandidate::parameters_power(int d) const {
    long long out = 1;
    for (int i = 0; i < mu; ++i)
        out *= d;
    return out;
}

long long TheoryCandidate::parameters_quadratic(int d) const {
    const long long n = d;
    return dim_x2 / 2 * n * (n - 1) + n;
}

long long TheoryCandidate::group_dim(int d) const {
    const long long n = d;
    return dim_x2 / 2 * n * (n - 1) + static_cast<long long>(dim_g1) * n;
}

long long TheoryCandidate::most_accurate_dim(int d) const {
    return d <= 1 ? 0 : static_cast<long long>(dim_x2) * (d - 1);
}

long long TheoryCandidate::decomposition_dim(const std::vector<int>& k) const {
    int total = 0;
    long long factor_dims = 0;
    for (int ki : k) {
        total += ki;
        factor_dims += group_dim(ki);
    }
    return group_dim(total) - factor_dims;
}

TheoryCandidate candidate(int mu, int dim_g1, int dim_x2) {
    require(mu >= 1, ErrorCode::invalid_argument, "mu must be a positive integer");
    require(dim_g1 == 0 || dim_g1 == 1, ErrorCode::invalid_argument, "dim G(1) must be 0 or 1");
    require(dim_x2 >= 0 && dim_x2 % 2 == 0, ErrorCode::invalid_argument,
            "dim X(2) must be a nonnegative even integer");
    TheoryCandidate c;
    c.mu = mu;
    c.dim_g1 = dim_g1;
    c.dim_x2 = dim_x2;
    if (mu == 1 && dim_g1 == 0 && dim_x2 == 0)
        c.label = CandidateLabel::classical;
    else if (mu == 1 && dim_g1 == 1 && dim_x2 == 0)
        c.label = CandidateLabel::semi_classical;
    else if (mu == 2 && dim_g1 == 1 && dim_x2 == 2)
        c.label = CandidateLabel::quantum;
    else if (mu == 2 && dim_g1 == 0 && dim_x2 == 2)
        c.label = CandidateLabel::real_pair_orthogonal;
    else if (mu >= 3)
        c.label = CandidateLabel::higher_order;
    else
        c.label = CandidateLabel::other;
    return c;
}

namespace {

void compositions_of(int d, std::vector<std::vector<int>>& out) {
    std::vector<int> acc;
    // ordered compositions of d into positive parts
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(acc);
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

ConstraintEntry worst_equality(const std::string& name, long long lhs, long long rhs,
                               const std::string& detail) {
    ConstraintEntry e;
    e.name = name;
    e.lhs = lhs;
    e.rhs = rhs;
    e.detail = detail;
    e.ok = lhs == rhs;
    e.status = e.ok ? "satisfied" : "violated";
    return e;
}

} // namespace

ConstraintVerdicts evaluate_constraints(const TheoryCandidate& c, int d_max) {
    require(d_max >= 4, ErrorCode::invalid_argument, "d_max must be at least 4");
    ConstraintVerdicts v;
    v.smooth = c.dim_x2 > 0;

    // power law vs quadratic closed form for S(d)
    {
        long long lhs = 0, rhs = 0;
        int bad_d = 0;
        for (int d = 0; d <= d_max && bad_d == 0; ++d) {
            lhs = d == 0 ? 0 : c.parameters_power(d);
            rhs = d == 0 ? 0 : c.parameters_quadratic(d);
            if (lhs != rhs)
                bad_d = d;
        }
        v.power_law_consistent = bad_d == 0;
        ConstraintEntry e = worst_equality(
            "parameter count closed forms", lhs, rhs,
            bad_d == 0 ? "d^mu agrees with the quadratic form for every d <= d_max"
                       : "d^mu differs from the quadratic form at d = " + std::to_string(bad_d));
        v.entries.push_back(e);
    }

    // dim X recursion: dim X(d) = dim X(d-l+1) + dim X(l)
    {
        ConstraintEntry e;
        e.name = "most-accurate-set dimension recursion";
        e.ok = true;
        for (int d = 2; d <= d_max; ++d)
            for (int l = 1; l <= d; ++l) {
                const long long lhs = c.most_accurate_dim(d);
                const long long rhs = c.most_accurate_dim(d - l + 1) + c.most_accurate_dim(l);
                e.lhs = lhs;
                e.rhs = rhs;
                if (lhs != rhs)
                    e.ok = false;
            }
        e.status = e.ok ? "satisfied" : "violated";
        e.detail = "linear recursion over every split up to d_max";
        v.entries.push_back(e);
    }

    // homogeneous-space consistency: dim X(d) matches dim M(1, d-1)
    {
        ConstraintEntry e;
        e.name = "homogeneous-space consistency";
        e.ok = true;
        for (int d = 2; d <= d_max; ++d) {
            const long long lhs = c.most_accurate_dim(d);
            const long long rhs = c.decomposition_dim({1, d - 1});
            e.lhs = lhs;
            e.rhs = rhs;
            if (lhs != rhs)
                e.ok = false;
        }
        e.status = e.ok ? "satisfied" : "violated";
        e.detail = "dim X(d) equals the quotient dimension dim G(d) - dim G(d-1) - dim G(1)";
        v.entries.push_back(e);
    }

    // parameter rule: S(sum k_i) = dim M({k_i}) + sum S(k_i), power-law S
    {
        ConstraintEntry e;
        e.name = "parameter rule";
        e.ok = true;
        for (int d = 2; d <= d_max && e.ok; ++d) {
            std::vector<std::vector<int>> comps;
            compositions_of(d, comps);
            for (const auto& k : comps) {
                long long sum_s = 0;
                for (int ki : k)
                    sum_s += c.parameters_power(ki);
                const long long lhs = c.parameters_power(d);
                const long long rhs = c.decomposition_dim(k) + sum_s;
                e.lhs = lhs;
                e.rhs = rhs;
                if (lhs != rhs) {
                    e.ok = false;
                    e.detail = "fails at d = " + std::to_string(d);
                    break;
                }
            }
        }
        if (e.ok)
            e.detail = "holds for every granularity vector of every d <= d_max";
        e.status = e.ok ? "satisfied" : "violated";
        v.entries.push_back(e);
    }

    // group composition, continuous branch
    {
        ConstraintEntry e;
        e.name = "group composition (continuous)";
        e.ok = true;
        bool all_equal = true;
        for (int da = 2; da <= d_max; ++da)
            for (int db = 2; da * db <= d_max; ++db) {
                const long long lhs = c.group_dim(da * db);
                const long long rhs = c.group_dim(da) * c.group_dim(db);
                e.lhs = lhs;
                e.rhs = rhs;
                if (lhs < rhs)
                    e.ok = false;
                if (lhs != rhs)
                    all_equal = false;
            }
        e.status = !e.ok ? "violated" : all_equal ? "saturated" : "satisfied";
        e.detail = "dim G(dA dB) >= dim G(dA) dim G(dB) for all composite d <= d_max";
        v.entries.push_back(e);
    }

    // reductionism
    {
        ConstraintEntry e;
        e.name = "reductionism";
        e.ok = true;
        bool all_equal = true;
        for (int da = 2; da <= d_max; ++da)
            for (int db = 2; da * db <= d_max; ++db) {
                const long long lhs = c.parameters_power(da * db);
                const long long rhs = c.parameters_power(da) * c.parameters_power(db);
                e.lhs = lhs;
                e.rhs = rhs;
                if (lhs > rhs)
                    e.ok = false;
                if (lhs != rhs)
                    all_equal = false;
            }
        e.status = !e.ok ? "violated" : all_equal ? "saturated" : "satisfied";
        e.detail = "S(dA dB) <= S(dA) S(dB) for all composite d <= d_max";
        v.entries.push_back(e);
    }

    // convexity filter: documented lookup, not a topological computation
    {
        ConstraintEntry e;
        e.name = "convexity filter";
        e.lhs = c.dim_g1;
        e.rhs = c.dim_x2;
        if (c.dim_g1 == 0 && c.dim_x2 == 2) {
            v.excluded_by_convexity = true;
            e.ok = false;
            e.status = "excluded";
            e.detail = "with dim G(1) = 0 and dim X(2) = 2 the set of most accurate "
                       "hypotheses at d = 2 is a torus (product of two circles); a torus is "
                       "not simply connected, so it cannot bound a convex state space. "
                       "Recorded as a documented exclusion, not machine-verified.";
        } else {
            e.ok = true;
            e.status = "satisfied";
            e.detail = "no documented topological obstruction for these parameters";
        }
        v.entries.push_back(e);
    }

    bool arithmetic_ok = true;
    for (const auto& e : v.entries)
        if (e.name != "convexity filter" && !e.ok)
            arithmetic_ok = false;

    if (c.label == CandidateLabel::higher_order)
        v.overall = "flagged-higher-order";
    else if (!arithmetic_ok || !v.power_law_consistent)
        v.overall = "inadmissible";
    else if (v.excluded_by_convexity)
        v.overall = "excluded-convexity";
    else
        v.overall = v.smooth ? "admissible-smooth" : "admissible-discrete";
    return v;
}

std::vector<std::pair<TheoryCandidate, ConstraintVerdicts>> enumerate_admissible(int mu_max,
                                                                                 int d_max) {
    require(mu_max >= 1, ErrorCode::invalid_argument, "mu_max must be positive");
    std::vector<std::pair<TheoryCandidate, ConstraintVerdicts>> out;
    for (int mu = 1; mu <= mu_max; ++mu) {
        if (mu == 1) {
            out.emplace_back(candidate(1, 0, 0), ConstraintVerdicts{});
            out.emplace_back(candidate(1, 1, 0), ConstraintVerdicts{});
        } else if (mu == 2) {
            out.emplace_back(candidate(2, 0, 2), ConstraintVerdicts{});
            out.emplace_back(candidate(2, 1, 2), ConstraintVerdicts{});
        } else {
            // No even dim X(2) makes the quadratic form match d^mu, so there
            // is one flagged row per higher order.
            out.emplace_back(candidate(mu, 1, 0), ConstraintVerdicts{});
        }
    }
    for (auto& [cand, verdicts] : out) {
        verdicts = evaluate_constraints(cand, d_max);
        if (cand.label == CandidateLabel::higher_order) {
            ConstraintEntry e;
            e.name = "group realization";
            e.status = "flagged";
            e.ok = false;
            e.lhs = cand.parameters_power(2);
            e.rhs = 0;
            e.detail = "no known compact Lie group supplies dim G(d) = d^mu + (dim G(1) - 1) d "
                       "for mu >= 3; any such theory would also break the smoothness-derived "
                       "quadratic form, hence exhibit some discontinuity";
            verdicts.entries.push_back(e);
        }
    }
    return out;
}

std::vector<KnownTheoryRow> known_theory_report() {
    std::vector<KnownTheoryRow> rows;
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex,
                           ModelKind::quantum_real, ModelKind::quaternionic}) {
        KnownTheoryRow row;
        row.kind = kind;
        row.s2 = state_parameter_count(kind, 2);
        row.s4 = state_parameter_count(kind, 4);
        row.g2 = dim_group(kind, 2);
        row.g4 = dim_group(kind, 4);
        row.composition = composition_constraint(kind, 2, 2);
        row.reductionism = reductionism_check(kind, 2, 2);
        rows.push_back(row);
    }
    return rows;
}

} // namespace qpv
