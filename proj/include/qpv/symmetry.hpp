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

#include <cstdint>
#include <vector>

#include "qpv/proposition.hpp"

namespace qpv {

/// A structure automorphism: a permutation of {0, ..., d-1} (classical) or
/// an orthogonal/unitary d x d matrix (quantum). Preserves partial sums,
/// orthogonality and granularity by construction.
class GroupElement {
  public:
    static GroupElement permutation(const Model& model, std::vector<int> perm);
    static GroupElement matrix(const Model& model, linalg::Matrix u);
    static GroupElement identity(const Model& model);

    GroupElement inverse() const;

    const Model& model() const { return model_; }
    const std::vector<int>& perm() const;
    const linalg::Matrix& unitary() const;

  private:
    GroupElement(Model model, std::vector<int> perm, linalg::Matrix u)
        : model_(model), perm_(std::move(perm)), matrix_(std::move(u)) {}

    Model model_;
    std::vector<int> perm_;
    linalg::Matrix matrix_;
};

Proposition apply(const GroupElement& g, const Proposition& x);

/// Uniform permutation or Haar unitary/orthogonal.
GroupElement random_group_element(const Model& model, std::uint64_t seed);

/// exp of a random anti-self-adjoint generator with Frobenius (metric) norm
/// at most `radius`, uniformly distributed in the ball. Quantum models only.
GroupElement element_near_identity(const Model& model, double radius, std::uint64_t seed);

/// A group element carrying each part of m1 onto the matching part of m2
/// (a transitivity witness). Decompositions must share the granularity
/// vector; on everything outside the parents the element acts canonically.
GroupElement find_transporter(const Decomposition& m1, const Decomposition& m2);

/// True iff g fixes a and every a+x for the supplied probes orthogonal to a
/// (non-orthogonal probes are ignored).
bool stabilizer_check(const GroupElement& g, const Proposition& a,
                      const std::vector<Proposition>& probes);

/// Named symmetry-group families used by the dimension tables and the
/// theory classifier.
enum class GroupFamily {
    symmetric,       // S_d
    unitary,         // U(d)
    orthogonal,      // O(d)
    symplectic,      // Sp(d)
    orthogonal_pair, // O(d) x O(d)
    phase_torus,     // U(1)^d
};

GroupFamily group_family(ModelKind kind);

long long dim_group(GroupFamily family, int d);
long long dim_group(ModelKind kind, int d);

/// Size of the largest independent subset of S_d.
long long mu_prime_symmetric(int d);

/// Manifold dimension of the set of most accurate refinements X(d).
long long dim_most_accurate(ModelKind kind, int d);

/// Manifold dimension of the decomposition collection M({k_i}).
long long dim_decomposition_manifold(ModelKind kind, const std::vector<int>& granularities);

/// Number of real parameters S(d) specifying a (possibly subnormalized)
/// probability distribution at granularity d.
long long state_parameter_count(ModelKind kind, int d);

/// Closed forms for one theory kind, bundled for reports.
struct DimensionTable {
    ModelKind kind;

    long long group(int d) const { return dim_group(kind, d); }
    long long most_accurate(int d) const { return dim_most_accurate(kind, d); }
    long long parameters(int d) const { return state_parameter_count(kind, d); }
    long long decomposition(const std::vector<int>& k) const {
        return dim_decomposition_manifold(kind, k);
    }
};

} // namespace qpv
