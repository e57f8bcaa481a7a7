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

#include "qpv/composition.hpp"

#include <algorithm>
#include <cmath>

namespace qpv {

using linalg::Matrix;
using linalg::Vector;

CompositeModel::CompositeModel(Model a, Model b) : factor_a(a), factor_b(b) {
    require(a.kind == b.kind, ErrorCode::kind_mismatch,
            "composites are defined for factors of one kind");
}

Proposition tensor_proposition(const Proposition& x, const Proposition& y) {
    require(x.model().kind == y.model().kind, ErrorCode::kind_mismatch,
            "tensor factors must share a kind");
    const CompositeModel ab(x.model(), y.model());
    const Model total = ab.total();
    if (total.kind == ModelKind::classical) {
        std::vector<int> subset;
        subset.reserve(x.subset().size() * y.subset().size());
        for (int i : x.subset())
            for (int j : y.subset())
                subset.push_back(i * y.model().dim + j);
        return Proposition::classical(total, std::move(subset));
    }
    return Proposition::subspace(total, linalg::kron(x.frame(), y.frame()));
}

State tensor_state(const State& rho_a, const State& rho_b) {
    require(rho_a.model().kind == rho_b.model().kind, ErrorCode::kind_mismatch,
            "tensor factors must share a kind");
    const CompositeModel ab(rho_a.model(), rho_b.model());
    const Model total = ab.total();
    if (total.kind == ModelKind::classical) {
        Eigen::VectorXd w(total.dim);
        for (int i = 0; i < rho_a.model().dim; ++i)
            for (int j = 0; j < rho_b.model().dim; ++j)
                w(i * rho_b.model().dim + j) = rho_a.weights()(i) * rho_b.weights()(j);
        return State::classical(total, std::move(w));
    }
    return State::density(total, linalg::kron(rho_a.rho(), rho_b.rho()));
}

GroupElement tensor_group_element(const GroupElement& ga, const GroupElement& gb) {
    require(ga.model().kind == gb.model().kind, ErrorCode::kind_mismatch,
            "tensor factors must share a kind");
    const CompositeModel ab(ga.model(), gb.model());
    const Model total = ab.total();
    if (total.kind == ModelKind::classical) {
        const int db = gb.model().dim;
        std::vector<int> perm(static_cast<std::size_t>(total.dim));
        for (int i = 0; i < ga.model().dim; ++i)
            for (int j = 0; j < db; ++j)
                perm[static_cast<std::size_t>(i * db + j)] =
                    ga.perm()[static_cast<std::size_t>(i)] * db +
                    gb.perm()[static_cast<std::size_t>(j)];
        return GroupElement::permutation(total, std::move(perm));
    }
    return GroupElement::matrix(total, linalg::kron(ga.unitary(), gb.unitary()));
}

Proposition embed_left(const CompositeModel& ab, const Proposition& x) {
    require_same_model(x.model(), ab.factor_a);
    return tensor_proposition(x, Proposition::top(ab.factor_b));
}

Proposition embed_right(const CompositeModel& ab, const Proposition& y) {
    require_same_model(y.model(), ab.factor_b);
    return tensor_proposition(Proposition::top(ab.factor_a), y);
}

State marginal(const CompositeModel& ab, const State& rho, int which) {
    require_same_model(rho.model(), ab.total());
    require(which == 0 || which == 1, ErrorCode::invalid_argument, "which must be 0 or 1");
    const int da = ab.factor_a.dim;
    const int db = ab.factor_b.dim;
    if (rho.model().kind == ModelKind::classical) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(which == 0 ? da : db);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
                w(which == 0 ? i : j) += rho.weights()(i * db + j);
        return State::classical(which == 0 ? ab.factor_a : ab.factor_b, std::move(w));
    }
    const int keep = which == 0 ? da : db;
    Matrix out = Matrix::Zero(keep, keep);
    for (int i = 0; i < keep; ++i)
        for (int j = 0; j < keep; ++j) {
            linalg::Complex sum = 0.0;
            if (which == 0) {
                for (int k = 0; k < db; ++k)
                    sum += rho.rho()(i * db + k, j * db + k);
            } else {
                for (int k = 0; k < da; ++k)
                    sum += rho.rho()(k * db + i, k * db + j);
            }
            out(i, j) = sum;
        }
    return State::density(which == 0 ? ab.factor_a : ab.factor_b, std::move(out));
}

double conditional_given_right(const CompositeModel& ab, const State& rho, const Proposition& x,
                               const Proposition& y) {
    const State posterior = condition(rho, embed_right(ab, y));
    return probability(posterior, embed_left(ab, x));
}

DistributivityVerdict check_distributivity(const Decomposition& decomp_a,
                                           const Decomposition& decomp_b, const State& rho) {
    const CompositeModel ab(decomp_a.parent.model(), decomp_b.parent.model());
    require_same_model(rho.model(), ab.total());

    const Proposition lhs = tensor_proposition(decomp_a.parent, decomp_b.parent);
    Proposition rhs = Proposition::absurd(ab.total());
    double probability_sum = 0.0;
    for (const auto& x : decomp_a.parts)
        for (const auto& y : decomp_b.parts) {
            const Proposition cell = tensor_proposition(x, y);
            rhs = partial_sum(rhs, cell);
            probability_sum += probability(rho, cell);
        }

    DistributivityVerdict verdict;
    if (ab.total().kind == ModelKind::classical)
        verdict.proposition_deviation = same_proposition(lhs, rhs) ? 0.0 : 1.0;
    else
        verdict.proposition_deviation = linalg::max_abs(Matrix(lhs.projector() - rhs.projector()));
    verdict.probability_deviation = std::abs(probability(rho, lhs) - probability_sum);
    verdict.passed =
        verdict.proposition_deviation <= kTol && verdict.probability_deviation <= kTol;
    return verdict;
}

const char* constraint_status_name(ConstraintStatus status) {
    switch (status) {
        case ConstraintStatus::satisfied: return "satisfied";
        case ConstraintStatus::saturated: return "saturated";
        case ConstraintStatus::violated: return "violated";
    }
    return "unknown";
}

CompositionConstraintRecord composition_constraint(ModelKind kind, int d_a, int d_b) {
    require(d_a >= 1 && d_b >= 1, ErrorCode::invalid_argument, "factor granularities must be >= 1");
    CompositionConstraintRecord record;
    record.kind = kind;
    record.d_a = d_a;
    record.d_b = d_b;
    record.finite_branch = kind == ModelKind::classical;
    if (record.finite_branch) {
        record.lhs = mu_prime_symmetric(d_a * d_b);
        record.rhs = mu_prime_symmetric(d_a) * mu_prime_symmetric(d_b);
    } else {
        record.lhs = dim_group(kind, d_a * d_b);
        record.rhs = dim_group(kind, d_a) * dim_group(kind, d_b);
    }
    record.status = record.lhs == record.rhs ? ConstraintStatus::saturated
                    : record.lhs > record.rhs ? ConstraintStatus::satisfied
                                              : ConstraintStatus::violated;
    return record;
}

long long entanglement_dim_gap(ModelKind kind, int d_a, int d_b) {
    require(d_a >= 1 && d_b >= 1, ErrorCode::invalid_argument, "factor granularities must be >= 1");
    return dim_most_accurate(kind, d_a * d_b) - dim_most_accurate(kind, d_a) -
           dim_most_accurate(kind, d_b);
}

State entangled_witness_state(const CompositeModel& ab) {
    require(is_quantum(ab.total().kind), ErrorCode::unsupported_model,
            "entanglement witnesses are quantum-only");
    require(ab.factor_a.dim >= 2 && ab.factor_b.dim >= 2, ErrorCode::invalid_argument,
            "both factors need granularity >= 2");
    const int da = ab.factor_a.dim;
    const int db = ab.factor_b.dim;
    const int r = std::min(da, db);
    Vector v = Vector::Zero(da * db);
    for (int i = 0; i < r; ++i)
        v(i * db + i) = 1.0 / std::sqrt(static_cast<double>(r));
    return State::density(ab.total(), Matrix(v * v.adjoint()));
}

} // namespace qpv
