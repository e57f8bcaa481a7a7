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

#pragma once

#include <string>
#include <vector>

#include "qpv/composition.hpp"
#include "qpv/tomography.hpp"

namespace qpv {

enum class CandidateLabel {
    classical,
    semi_classical,
    quantum,
    real_pair_orthogonal,
    higher_order,
    other,
};

const char* candidate_label_name(CandidateLabel label);

/// An abstract theory with power-law parameter count S(d) = d^mu and the
/// quadratic group-dimension form fixed by smoothness:
/// dim G(d) = (dim X(2)/2) d(d-1) + dim G(1) d.
struct TheoryCandidate {
    int mu = 1;
    int dim_g1 = 0;
    int dim_x2 = 0;
    CandidateLabel label = CandidateLabel::other;

    long long parameters_power(int d) const;     // d^mu
    long long parameters_quadratic(int d) const; // (x2/2) d(d-1) + d
    long long group_dim(int d) const;            // (x2/2) d(d-1) + g1 d
    long long most_accurate_dim(int d) const;    // x2 (d-1)
    /// dim M({k_i}) derived from the homogeneous-space isomorphism:
    /// dim G(sum k) - sum dim G(k_i).
    long long decomposition_dim(const std::vector<int>& k) const;
};

TheoryCandidate candidate(int mu, int dim_g1, int dim_x2);

struct ConstraintEntry {
    std::string name;
    std::string status; // satisfied / saturated / violated / excluded / noted
    long long lhs = 0;  // evaluated inequality sides (worst instance)
    long long rhs = 0;
    std::string detail;
    bool ok = true;
};

struct ConstraintVerdicts {
    std::vector<ConstraintEntry> entries;
    bool power_law_consistent = true;
    bool excluded_by_convexity = false;
    bool smooth = false; // dim X(2) > 0
    std::string overall; // admissible-smooth / admissible-discrete / excluded-convexity /
                         // flagged-higher-order / inadmissible
};

/// Evaluates every arithmetic constraint up to d_max, plus the documented
/// convexity filter. Exhaustive over compositions rather than symbolic.
ConstraintVerdicts evaluate_constraints(const TheoryCandidate& c, int d_max);

/// All candidates with mu <= mu_max whose two closed forms for S(d) are
/// mutually consistent, plus one flagged higher-order row per mu >= 3.
std::vector<std::pair<TheoryCandidate, ConstraintVerdicts>> enumerate_admissible(int mu_max,
                                                                                 int d_max);

struct KnownTheoryRow {
    ModelKind kind;
    long long s2 = 0;
    long long s4 = 0;
    long long g2 = 0;
    long long g4 = 0;
    CompositionConstraintRecord composition;
    ReductionismRecord reductionism;
};

/// The four concrete theories with their dimension data and the (2,2)
/// composition / reductionism verdicts.
std::vector<KnownTheoryRow> known_theory_report();

} // namespace qpv
