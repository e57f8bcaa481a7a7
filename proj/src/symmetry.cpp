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

#include "qpv/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace qpv {

using linalg::Complex;
using linalg::Matrix;

GroupElement GroupElement::permutation(const Model& model, std::vector<int> perm) {
    require(model.kind == ModelKind::classical, ErrorCode::kind_mismatch,
            "permutations act on classical models only");
    require(static_cast<int>(perm.size()) == model.dim, ErrorCode::invalid_argument,
            "permutation length does not match the model dimension");
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
        require(p >= 0 && p < model.dim && !hit[static_cast<std::size_t>(p)],
                ErrorCode::invalid_argument, "not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
    return GroupElement(model, std::move(perm), Matrix(0, 0));
}

GroupElement GroupElement::matrix(const Model& model, Matrix u) {
    require(is_quantum(model.kind), ErrorCode::kind_mismatch,
            "matrix elements act on quantum models only");
    require(u.rows() == model.dim && u.cols() == model.dim, ErrorCode::invalid_argument,
            "group element has wrong shape");
    require(linalg::max_abs(Matrix(u.adjoint() * u - Matrix::Identity(model.dim, model.dim))) <= kTol,
            ErrorCode::invalid_argument, "group element is not unitary");
    u = linalg::realify_if(model.kind, u);
    return GroupElement(model, {}, std::move(u));
}

GroupElement GroupElement::identity(const Model& model) {
    if (model.kind == ModelKind::classical) {
        std::vector<int> perm(static_cast<std::size_t>(model.dim));
        for (int i = 0; i < model.dim; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        return permutation(model, std::move(perm));
    }
    return matrix(model, Matrix::Identity(model.dim, model.dim));
}

GroupElement GroupElement::inverse() const {
    if (model_.kind == ModelKind::classical) {
        std::vector<int> inv(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i)
            inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
        return permutation(model_, std::move(inv));
    }
    return matrix(model_, matrix_.adjoint());
}

const std::vector<int>& GroupElement::perm() const {
    require(model_.kind == ModelKind::classical, ErrorCode::internal,
            "permutation payload requested from a matrix element");
    return perm_;
}

const Matrix& GroupElement::unitary() const {
    require(is_quantum(model_.kind), ErrorCode::internal,
            "matrix payload requested from a permutation element");
    return matrix_;
}

Proposition apply(const GroupElement& g, const Proposition& x) {
    require_same_model(g.model(), x.model());
    if (g.model().kind == ModelKind::classical) {
        std::vector<int> image;
        image.reserve(x.subset().size());
        for (int i : x.subset())
            image.push_back(g.perm()[static_cast<std::size_t>(i)]);
        return Proposition::classical(g.model(), std::move(image));
    }
    Matrix frame = g.unitary() * x.frame();
    frame = linalg::realify_if(g.model().kind, frame);
    return Proposition::subspace(g.model(), std::move(frame));
}

GroupElement random_group_element(const Model& model, std::uint64_t seed) {
    require(model.kind != ModelKind::quaternionic, ErrorCode::unsupported_model,
            "quaternionic models are formula-only");
    Rng rng(seed);
    if (model.kind == ModelKind::classical)
        return GroupElement::permutation(model, rng.permutation(model.dim));
    return GroupElement::matrix(model, linalg::haar_unitary(model.kind, model.dim, rng));
}

namespace {

Matrix random_generator(ModelKind kind, int dim, Rng& rng) {
    const Matrix g = linalg::gaussian_matrix(kind, dim, dim, rng);
    return Matrix((g - g.adjoint()) / 2.0);
}

int generator_space_dim(ModelKind kind, int d) {
    return kind == ModelKind::quantum_real ? d * (d - 1) / 2 : d * d;
}

} // namespace

GroupElement element_near_identity(const Model& model, double radius, std::uint64_t seed) {
    require(is_quantum(model.kind), ErrorCode::unsupported_model,
            "near-identity sampling needs a Lie group");
    require(radius >= 0.0, ErrorCode::invalid_argument, "radius must be nonnegative");
    Rng rng(seed);
    Matrix a = random_generator(model.kind, model.dim, rng);
    const double norm = a.norm();
    const int dof = generator_space_dim(model.kind, model.dim);
    if (norm <= 0.0 || radius == 0.0 || dof == 0)
        return GroupElement::identity(model);
    const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(dof));
    a *= r / norm;
    Matrix u = linalg::exp_antihermitian(a);
    u = linalg::realify_if(model.kind, u);
    return GroupElement::matrix(model, std::move(u));
}

GroupElement find_transporter(const Decomposition& m1, const Decomposition& m2) {
    require_same_model(m1.parent.model(), m2.parent.model());
    require(m1.granularity_vector() == m2.granularity_vector(), ErrorCode::bad_granularity,
            "transporter needs matching granularity vectors");
    const Model& model = m1.parent.model();
    if (model.kind == ModelKind::classical) {
        std::vector<int> perm(static_cast<std::size_t>(model.dim), -1);
        for (std::size_t p = 0; p < m1.parts.size(); ++p) {
            const auto& from = m1.parts[p].subset();
            const auto& to = m2.parts[p].subset();
            for (std::size_t i = 0; i < from.size(); ++i)
                perm[static_cast<std::size_t>(from[i])] = to[i];
        }
        // outside the parents: map the leftovers in increasing order
        std::vector<int> src, dst;
        std::vector<bool> used(static_cast<std::size_t>(model.dim), false);
        for (int v : perm)
            if (v >= 0)
                used[static_cast<std::size_t>(v)] = true;
        for (int i = 0; i < model.dim; ++i) {
            if (perm[static_cast<std::size_t>(i)] < 0)
                src.push_back(i);
            if (!used[static_cast<std::size_t>(i)])
                dst.push_back(i);
        }
        for (std::size_t i = 0; i < src.size(); ++i)
            perm[static_cast<std::size_t>(src[i])] = dst[i];
        return GroupElement::permutation(model, std::move(perm));
    }
    const Matrix full = Matrix::Identity(model.dim, model.dim);
    Matrix u = Matrix::Zero(model.dim, model.dim);
    for (std::size_t p = 0; p < m1.parts.size(); ++p)
        u += m2.parts[p].frame() * m1.parts[p].frame().adjoint();
    const Matrix rest1 = linalg::complement_within(full, m1.parent.frame());
    const Matrix rest2 = linalg::complement_within(full, m2.parent.frame());
    u += rest2 * rest1.adjoint();
    u = linalg::realify_if(model.kind, linalg::orthonormalize(u));
    return GroupElement::matrix(model, std::move(u));
}

bool stabilizer_check(const GroupElement& g, const Proposition& a,
                      const std::vector<Proposition>& probes) {
    require_same_model(g.model(), a.model());
    if (!same_proposition(apply(g, a), a))
        return false;
    for (const auto& x : probes) {
        if (!are_orthogonal(x, a))
            continue;
        const Proposition joined = partial_sum(a, x);
        if (!same_proposition(apply(g, joined), joined))
            return false;
    }
    return true;
}

GroupFamily group_family(ModelKind kind) {
    switch (kind) {
        case ModelKind::classical: return GroupFamily::symmetric;
        case ModelKind::quantum_real: return GroupFamily::orthogonal;
        case ModelKind::quantum_complex: return GroupFamily::unitary;
        case ModelKind::quaternionic: return GroupFamily::symplectic;
    }
    fail(ErrorCode::internal, "unreachable model kind");
}

long long dim_group(GroupFamily family, int d) {
    require(d >= 0, ErrorCode::invalid_argument, "dimension must be nonnegative");
    const long long n = d;
    switch (family) {
        case GroupFamily::symmetric: return 0;
        case GroupFamily::unitary: return n * n;
        case GroupFamily::orthogonal: return n * (n - 1) / 2;
        case GroupFamily::symplectic: return n * (2 * n + 1);
        case GroupFamily::orthogonal_pair: return n * (n - 1);
        case GroupFamily::phase_torus: return n;
    }
    fail(ErrorCode::internal, "unreachable group family");
}

long long dim_group(ModelKind kind, int d) {
    return dim_group(group_family(kind), d);
}

long long mu_prime_symmetric(int d) {
    require(d >= 1, ErrorCode::invalid_argument, "the symmetric group needs d >= 1");
    return d - 1;
}

long long dim_most_accurate(ModelKind kind, int d) {
    require(d >= 0, ErrorCode::invalid_argument, "dimension must be nonnegative");
    if (d <= 1)
        return 0;
    const long long n = d;
    switch (kind) {
        case ModelKind::classical: return 0;
        case ModelKind::quantum_real: return n - 1;
        case ModelKind::quantum_complex: return 2 * (n - 1);
        case ModelKind::quaternionic: return 4 * (n - 1);
    }
    fail(ErrorCode::internal, "unreachable model kind");
}

long long dim_decomposition_manifold(ModelKind kind, const std::vector<int>& granularities) {
    long long pair_sum = 0;
    long long total = 0;
    for (std::size_t i = 0; i < granularities.size(); ++i) {
        require(granularities[i] >= 1, ErrorCode::bad_granularity,
                "granularity vector entries must be >= 1");
        pair_sum += static_cast<long long>(granularities[i]) * total;
        total += granularities[i];
    }
    switch (kind) {
        case ModelKind::classical: return 0;
        case ModelKind::quantum_real: return pair_sum;
        case ModelKind::quantum_complex: return 2 * pair_sum;
        case ModelKind::quaternionic: return 4 * pair_sum;
    }
    fail(ErrorCode::internal, "unreachable model kind");
}

long long state_parameter_count(ModelKind kind, int d) {
    require(d >= 0, ErrorCode::invalid_argument, "dimension must be nonnegative");
    const long long n = d;
    switch (kind) {
        case ModelKind::classical: return n;
        case ModelKind::quantum_real: return n * (n + 1) / 2;
        case ModelKind::quantum_complex: return n * n;
        case ModelKind::quaternionic: return n * (2 * n - 1);
    }
    fail(ErrorCode::internal, "unreachable model kind");
}

} // namespace qpv
