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

#include "qpv/state.hpp"

namespace qpv {

/// A bipartite system A x B of one kind. Composite indices are row-major:
/// the pair (i, j) maps to i * d_B + j, a convention shared by every module.
struct CompositeModel {
    CompositeModel(Model a, Model b);

    Model total() const { return Model(factor_a.kind, factor_a.dim * factor_b.dim); }

    Model factor_a;
    Model factor_b;
};

/// The conjunction x and y of hypotheses about different systems.
Proposition tensor_proposition(const Proposition& x, const Proposition& y);

State tensor_state(const State& rho_a, const State& rho_b);

GroupElement tensor_group_element(const GroupElement& ga, const GroupElement& gb);

/// x lifted to the composite as (x and top_B); same for the other factor.
Proposition embed_left(const CompositeModel& ab, const Proposition& x);
Proposition embed_right(const CompositeModel& ab, const Proposition& y);

/// Marginal of a composite state (which = 0 keeps A, 1 keeps B).
State marginal(const CompositeModel& ab, const State& rho, int which);

/// prob(x_A | y_B, rho): condition on (top_A and y), then evaluate
/// (x and top_B).
double conditional_given_right(const CompositeModel& ab, const State& rho, const Proposition& x,
                               const Proposition& y);

struct DistributivityVerdict {
    bool passed = false;
    double proposition_deviation = 0.0;
    double probability_deviation = 0.0;
};

/// (sum_i x_i) and (sum_j y_j) = sum_ij (x_i and y_j), both as propositions
/// and as probabilities under rho.
DistributivityVerdict check_distributivity(const Decomposition& decomp_a,
                                           const Decomposition& decomp_b, const State& rho);

enum class ConstraintStatus { satisfied, saturated, violated };

const char* constraint_status_name(ConstraintStatus status);

struct CompositionConstraintRecord {
    ModelKind kind;
    int d_a = 0;
    int d_b = 0;
    bool finite_branch = false; // independent-set bound instead of Lie dimensions
    long long lhs = 0;          // composite-side value
    long long rhs = 0;          // product of factor values
    ConstraintStatus status = ConstraintStatus::satisfied;
};

/// Group-composition constraint: mu'(S_dAdB) >= mu'(S_dA) * mu'(S_dB) for
/// the finite (classical) branch, dim G(dAdB) >= dim G(dA) * dim G(dB) for
/// the continuous branches.
CompositionConstraintRecord composition_constraint(ModelKind kind, int d_a, int d_b);

/// dim X(dA dB) - dim X(dA) - dim X(dB); positive exactly when there are
/// non-separable most accurate propositions.
long long entanglement_dim_gap(ModelKind kind, int d_a, int d_b);

/// Maximally correlated pure state sum_i |ii> / sqrt(min(dA, dB)); its
/// marginals are mixed, so it is not a product of pure factors.
State entangled_witness_state(const CompositeModel& ab);

} // namespace qpv
