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

#include "qpv/linalg.hpp"
#include "qpv/model.hpp"

namespace qpv {

/// A verifiable hypothesis about a system: classically an index subset of
/// {0, ..., d-1}, quantumly a subspace held as an orthonormal frame of
/// column vectors (empty frame = the absurd hypothesis).
///
/// Values are immutable; every operation returns fresh objects. Equality
/// and orthogonality are decided on the derived projectors (frames are
/// basis-dependent, projectors are canonical) with absolute tolerance kTol.
class Proposition {
  public:
    static Proposition classical(const Model& model, std::vector<int> subset);
    static Proposition subspace(const Model& model, linalg::Matrix frame);
    static Proposition absurd(const Model& model);
    static Proposition top(const Model& model);
    /// Span of the given computational basis vectors (classical: the subset).
    static Proposition basis(const Model& model, const std::vector<int>& indices);
    /// Rank-1 subspace along v (normalized here). Quantum models only.
    static Proposition ray(const Model& model, const linalg::Vector& v);

    const Model& model() const { return model_; }
    int granularity() const;
    bool is_absurd() const { return granularity() == 0; }
    bool is_most_accurate() const { return granularity() == 1; }

    const std::vector<int>& subset() const;
    const linalg::Matrix& frame() const;
    linalg::Matrix projector() const;

  private:
    Proposition(Model model, std::vector<int> subset, linalg::Matrix frame)
        : model_(model), subset_(std::move(subset)), frame_(std::move(frame)) {}

    Model model_;
    std::vector<int> subset_; // classical payload, kept sorted
    linalg::Matrix frame_;    // quantum payload
};

/// Ordered list of pairwise-orthogonal refinements whose partial sum is the
/// parent. Construction validates mutual exclusivity and exhaustiveness.
struct Decomposition {
    Decomposition(Proposition parent, std::vector<Proposition> parts);

    std::vector<int> granularity_vector() const;

    Proposition parent;
    std::vector<Proposition> parts;
};

bool same_proposition(const Proposition& x, const Proposition& y);
bool are_orthogonal(const Proposition& x, const Proposition& y);
bool implies(const Proposition& x, const Proposition& a);

/// x + y for mutually contradictory summands: disjoint union of subsets or
/// span-sum of orthogonal subspaces.
Proposition partial_sum(const Proposition& x, const Proposition& y);

/// The unique y with x + y = a.
Proposition relative_complement(const Proposition& a, const Proposition& x);

/// Existence of a joint refining decomposition. Classical pairs always
/// qualify; quantum pairs exactly when the projectors commute (the
/// equivalence is exercised by the property suite).
bool jointly_decidable(const Proposition& x, const Proposition& y);

/// Boolean operations through a common refining decomposition; defined only
/// for jointly decidable pairs.
Proposition meet(const Proposition& x, const Proposition& y);
Proposition join(const Proposition& x, const Proposition& y);

/// Uniform granularity-k refinement of a: uniform k-subset, or Haar-random
/// k-frame inside the subspace.
Proposition sample_refinement(const Proposition& a, int k, std::uint64_t seed);

/// Uniformly sampled ordered decomposition with the given granularity
/// vector (Haar-random flag in the quantum case).
Decomposition sample_decomposition(const Proposition& a,
                                   const std::vector<int>& granularity_vector,
                                   std::uint64_t seed);

/// All ordered decompositions of a classical proposition with the given
/// granularity vector. Exhaustive, so capped at granularity 8.
std::vector<Decomposition> enumerate_decompositions(const Proposition& a,
                                                    const std::vector<int>& granularity_vector);

} // namespace qpv
