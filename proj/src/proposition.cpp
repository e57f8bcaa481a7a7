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

#include "qpv/proposition.hpp"

#include <algorithm>
#include <cmath>

namespace qpv {

using linalg::Matrix;
using linalg::Vector;

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    require(std::adjacent_find(v.begin(), v.end()) == v.end(), ErrorCode::invalid_argument,
            "classical subset has repeated indices");
    return v;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const std::vector<int>& x, const std::vector<int>& a) {
    return std::includes(a.begin(), a.end(), x.begin(), x.end());
}

} // namespace

Proposition Proposition::classical(const Model& model, std::vector<int> subset) {
    require(model.kind == ModelKind::classical, ErrorCode::kind_mismatch,
            "classical payload on a non-classical model");
    subset = sorted_unique(std::move(subset));
    for (int i : subset)
        require(i >= 0 && i < model.dim, ErrorCode::invalid_argument,
                "subset index out of range");
    return Proposition(model, std::move(subset), Matrix(0, 0));
}

Proposition Proposition::subspace(const Model& model, Matrix frame) {
    require(is_quantum(model.kind), ErrorCode::kind_mismatch,
            "subspace payload on a non-quantum model");
    require(frame.rows() == model.dim, ErrorCode::invalid_argument,
            "frame row count does not match the model dimension");
    require(frame.cols() <= model.dim, ErrorCode::bad_granularity,
            "frame has more columns than the space has dimensions");
    if (frame.cols() > 0) {
        const Matrix gram = frame.adjoint() * frame;
        require(linalg::max_abs(Matrix(gram - Matrix::Identity(frame.cols(), frame.cols()))) <= kTol,
                ErrorCode::invalid_argument, "frame columns are not orthonormal");
    }
    frame = linalg::realify_if(model.kind, frame);
    return Proposition(model, {}, std::move(frame));
}

Proposition Proposition::absurd(const Model& model) {
    if (model.kind == ModelKind::classical)
        return classical(model, {});
    return subspace(model, Matrix(model.dim, 0));
}

Proposition Proposition::top(const Model& model) {
    std::vector<int> all(model.dim);
    for (int i = 0; i < model.dim; ++i)
        all[i] = i;
    return basis(model, all);
}

Proposition Proposition::basis(const Model& model, const std::vector<int>& indices) {
    if (model.kind == ModelKind::classical)
        return classical(model, indices);
    const auto idx = sorted_unique(indices);
    Matrix frame = Matrix::Zero(model.dim, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        require(idx[j] >= 0 && idx[j] < model.dim, ErrorCode::invalid_argument,
                "basis index out of range");
        frame(idx[j], static_cast<Eigen::Index>(j)) = 1.0;
    }
    return subspace(model, std::move(frame));
}

Proposition Proposition::ray(const Model& model, const Vector& v) {
    require(is_quantum(model.kind), ErrorCode::kind_mismatch, "rays exist in quantum models only");
    require(v.size() == model.dim, ErrorCode::invalid_argument, "ray vector has wrong dimension");
    const double n = v.norm();
    require(n > kTol, ErrorCode::invalid_argument, "cannot normalize a null vector");
    Matrix frame(model.dim, 1);
    frame.col(0) = v / n;
    return subspace(model, std::move(frame));
}

int Proposition::granularity() const {
    if (model_.kind == ModelKind::classical)
        return static_cast<int>(subset_.size());
    return static_cast<int>(frame_.cols());
}

const std::vector<int>& Proposition::subset() const {
    require(model_.kind == ModelKind::classical, ErrorCode::internal,
            "subset payload requested from a quantum proposition");
    return subset_;
}

const Matrix& Proposition::frame() const {
    require(is_quantum(model_.kind), ErrorCode::internal,
            "frame payload requested from a classical proposition");
    return frame_;
}

Matrix Proposition::projector() const {
    if (model_.kind == ModelKind::classical) {
        Matrix p = Matrix::Zero(model_.dim, model_.dim);
        for (int i : subset_)
            p(i, i) = 1.0;
        return p;
    }
    return frame_ * frame_.adjoint();
}

bool same_proposition(const Proposition& x, const Proposition& y) {
    if (!(x.model() == y.model()))
        return false;
    if (x.model().kind == ModelKind::classical)
        return x.subset() == y.subset();
    if (x.granularity() != y.granularity())
        return false;
    return linalg::max_abs(Matrix(x.projector() - y.projector())) <= kTol;
}

bool are_orthogonal(const Proposition& x, const Proposition& y) {
    require_same_model(x.model(), y.model());
    if (x.model().kind == ModelKind::classical)
        return set_intersection(x.subset(), y.subset()).empty();
    if (x.is_absurd() || y.is_absurd())
        return true;
    return linalg::max_abs(Matrix(x.projector() * y.projector())) <= kTol;
}

bool implies(const Proposition& x, const Proposition& a) {
    require_same_model(x.model(), a.model());
    if (x.model().kind == ModelKind::classical)
        return is_subset(x.subset(), a.subset());
    if (x.is_absurd())
        return true;
    return linalg::max_abs(Matrix(a.projector() * x.projector() - x.projector())) <= kTol;
}

Proposition partial_sum(const Proposition& x, const Proposition& y) {
    require_same_model(x.model(), y.model());
    require(are_orthogonal(x, y), ErrorCode::not_orthogonal,
            "partial sum requires mutually contradictory summands");
    if (x.model().kind == ModelKind::classical)
        return Proposition::classical(x.model(), set_union(x.subset(), y.subset()));
    if (x.is_absurd())
        return y;
    if (y.is_absurd())
        return x;
    Matrix joined(x.model().dim, x.granularity() + y.granularity());
    joined << x.frame(), y.frame();
    // Summands are orthogonal to tolerance only; re-orthonormalize so the
    // result satisfies the frame invariant exactly.
    joined = linalg::realify_if(x.model().kind, linalg::orthonormalize(joined));
    return Proposition::subspace(x.model(), std::move(joined));
}

Proposition relative_complement(const Proposition& a, const Proposition& x) {
    require_same_model(a.model(), x.model());
    require(implies(x, a), ErrorCode::not_contained,
            "relative complement requires the part to imply the whole");
    if (a.model().kind == ModelKind::classical)
        return Proposition::classical(a.model(), set_difference(a.subset(), x.subset()));
    Matrix rest = linalg::complement_within(a.frame(), x.frame());
    rest = linalg::realify_if(a.model().kind, rest);
    return Proposition::subspace(a.model(), std::move(rest));
}

bool jointly_decidable(const Proposition& x, const Proposition& y) {
    require_same_model(x.model(), y.model());
    if (x.model().kind == ModelKind::classical)
        return true;
    const Matrix px = x.projector();
    const Matrix py = y.projector();
    return linalg::max_abs(Matrix(px * py - py * px)) <= kTol;
}

namespace {

// Common refining decomposition of a commuting pair: eigenvectors of
// P_x + 2 P_y, whose spectrum clusters on {0, 1, 2, 3}. Cluster 3 lies in
// both subspaces, 1 in x only, 2 in y only.
std::pair<Matrix, std::vector<int>> joint_eigenbasis(const Proposition& x, const Proposition& y) {
    const Matrix h = x.projector() + 2.0 * y.projector();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Matrix basis = linalg::realify_if(x.model().kind, es.eigenvectors());
    std::vector<int> cluster(static_cast<std::size_t>(basis.cols()));
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        const double lambda = es.eigenvalues()(j);
        const int nearest = static_cast<int>(std::lround(lambda));
        require(nearest >= 0 && nearest <= 3 && std::abs(lambda - nearest) <= kEigenGap,
                ErrorCode::internal, "joint spectrum did not cluster on {0,1,2,3}");
        cluster[static_cast<std::size_t>(j)] = nearest;
    }
    return {std::move(basis), std::move(cluster)};
}

Proposition collect_eigenvectors(const Proposition& x, const Proposition& y, bool want_meet) {
    const auto [basis, cluster] = joint_eigenbasis(x, y);
    std::vector<Eigen::Index> take;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        const int c = cluster[static_cast<std::size_t>(j)];
        if (want_meet ? (c == 3) : (c >= 1))
            take.push_back(j);
    }
    Matrix frame(basis.rows(), static_cast<Eigen::Index>(take.size()));
    for (std::size_t j = 0; j < take.size(); ++j)
        frame.col(static_cast<Eigen::Index>(j)) = basis.col(take[j]);
    return Proposition::subspace(x.model(), std::move(frame));
}

} // namespace

Proposition meet(const Proposition& x, const Proposition& y) {
    require(jointly_decidable(x, y), ErrorCode::not_jointly_decidable,
            "meet needs a joint decomposition");
    if (x.model().kind == ModelKind::classical)
        return Proposition::classical(x.model(), set_intersection(x.subset(), y.subset()));
    return collect_eigenvectors(x, y, /*want_meet=*/true);
}

Proposition join(const Proposition& x, const Proposition& y) {
    require(jointly_decidable(x, y), ErrorCode::not_jointly_decidable,
            "join needs a joint decomposition");
    if (x.model().kind == ModelKind::classical)
        return Proposition::classical(x.model(), set_union(x.subset(), y.subset()));
    return collect_eigenvectors(x, y, /*want_meet=*/false);
}

Proposition sample_refinement(const Proposition& a, int k, std::uint64_t seed) {
    require(k >= 1 && k <= a.granularity(), ErrorCode::bad_granularity,
            "refinement granularity must lie in [1, d(a)]");
    Rng rng(seed);
    if (a.model().kind == ModelKind::classical) {
        const auto order = rng.permutation(a.granularity());
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            subset[static_cast<std::size_t>(i)] = a.subset()[static_cast<std::size_t>(order[i])];
        return Proposition::classical(a.model(), std::move(subset));
    }
    const Matrix q = linalg::haar_frame(a.model().kind, a.granularity(), k, rng);
    Matrix frame = linalg::realify_if(a.model().kind, Matrix(a.frame() * q));
    return Proposition::subspace(a.model(), std::move(frame));
}

Decomposition::Decomposition(Proposition parent_, std::vector<Proposition> parts_)
    : parent(std::move(parent_)), parts(std::move(parts_)) {
    int total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require_same_model(parts[i].model(), parent.model());
        require(parts[i].granularity() >= 1, ErrorCode::bad_decomposition,
                "decomposition parts must be non-absurd");
        total += parts[i].granularity();
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            require(are_orthogonal(parts[i], parts[j]), ErrorCode::bad_decomposition,
                    "decomposition parts must be mutually exclusive");
    }
    require(total == parent.granularity(), ErrorCode::bad_decomposition,
            "decomposition parts must be collectively exhaustive");
    Proposition sum = Proposition::absurd(parent.model());
    for (const auto& p : parts)
        sum = partial_sum(sum, p);
    require(same_proposition(sum, parent), ErrorCode::bad_decomposition,
            "partial sum of the parts does not reproduce the parent");
}

std::vector<int> Decomposition::granularity_vector() const {
    std::vector<int> k(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        k[i] = parts[i].granularity();
    return k;
}

namespace {

void check_granularity_vector(const Proposition& a, const std::vector<int>& k) {
    int total = 0;
    for (int ki : k) {
        require(ki >= 1, ErrorCode::bad_granularity, "granularity vector entries must be >= 1");
        total += ki;
    }
    require(total == a.granularity(), ErrorCode::bad_granularity,
            "granularity vector must sum to d(a)");
}

} // namespace

Decomposition sample_decomposition(const Proposition& a, const std::vector<int>& granularity_vector,
                                   std::uint64_t seed) {
    check_granularity_vector(a, granularity_vector);
    Rng rng(seed);
    std::vector<Proposition> parts;
    parts.reserve(granularity_vector.size());
    if (a.model().kind == ModelKind::classical) {
        const auto order = rng.permutation(a.granularity());
        std::size_t cursor = 0;
        for (int ki : granularity_vector) {
            std::vector<int> subset(static_cast<std::size_t>(ki));
            for (int i = 0; i < ki; ++i)
                subset[static_cast<std::size_t>(i)] = a.subset()[static_cast<std::size_t>(order[cursor++])];
            parts.push_back(Proposition::classical(a.model(), std::move(subset)));
        }
    } else {
        // One Haar-random flag: a full rotation of the subspace split by the
        // granularity vector.
        const Matrix q = linalg::haar_frame(a.model().kind, a.granularity(), a.granularity(), rng);
        const Matrix rotated = linalg::realify_if(a.model().kind, Matrix(a.frame() * q));
        Eigen::Index cursor = 0;
        for (int ki : granularity_vector) {
            parts.push_back(Proposition::subspace(a.model(), rotated.middleCols(cursor, ki)));
            cursor += ki;
        }
    }
    return Decomposition(a, std::move(parts));
}

namespace {

void enumerate_rec(const Proposition& a, const std::vector<int>& remaining_indices,
                   const std::vector<int>& k, std::size_t part, std::vector<Proposition>& acc,
                   std::vector<Decomposition>& out) {
    if (part == k.size()) {
        out.emplace_back(a, acc);
        return;
    }
    const int ki = k[part];
    const int n = static_cast<int>(remaining_indices.size());
    std::vector<int> pick(static_cast<std::size_t>(ki));
    // lexicographic combinations of `remaining_indices` of size ki
    std::vector<int> c(static_cast<std::size_t>(ki));
    for (int i = 0; i < ki; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> rest;
        for (int i = 0, j = 0; i < n; ++i) {
            if (j < ki && c[static_cast<std::size_t>(j)] == i) {
                pick[static_cast<std::size_t>(j)] = remaining_indices[static_cast<std::size_t>(i)];
                ++j;
            } else {
                rest.push_back(remaining_indices[static_cast<std::size_t>(i)]);
            }
        }
        acc.push_back(Proposition::classical(a.model(), pick));
        enumerate_rec(a, rest, k, part + 1, acc, out);
        acc.pop_back();

        int i = ki - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - ki + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ki; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::vector<Decomposition> enumerate_decompositions(const Proposition& a,
                                                    const std::vector<int>& granularity_vector) {
    require(a.model().kind == ModelKind::classical, ErrorCode::unsupported_model,
            "exhaustive decomposition enumeration is classical-only");
    require(a.granularity() <= 8, ErrorCode::invalid_argument,
            "exhaustive enumeration is capped at granularity 8");
    check_granularity_vector(a, granularity_vector);
    std::vector<Decomposition> out;
    std::vector<Proposition> acc;
    enumerate_rec(a, a.subset(), granularity_vector, 0, acc, out);
    return out;
}

} // namespace qpv
