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

#include "qpv/composition.hpp"

namespace qpv {

/// Isometric real coordinates of a self-adjoint matrix: diagonal entries,
/// then sqrt(2) * Re / Im of the upper off-diagonal (Im for the complex
/// kind only). tr(AB) equals the dot product of coordinates. Classical
/// "matrices" are the diagonal case.
Eigen::VectorXd hermitian_coords(ModelKind kind, const linalg::Matrix& m);
linalg::Matrix hermitian_from_coords(ModelKind kind, int dim, const Eigen::VectorXd& coords);

/// Number of real coordinates used by hermitian_coords.
long long hermitian_coord_count(ModelKind kind, int dim);

/// An informationally complete family of S(d) propositions whose
/// probabilities pin down any state, with a MECE subset decomposing the top
/// proposition. The fixed construction: the d basis projectors, plus rank-1
/// projectors onto (|j> + |k>)/sqrt(2) and, for the complex kind,
/// (|j> + i|k>)/sqrt(2) for j < k. Classical models use the d singletons.
struct ICSet {
    Model model;
    std::vector<Proposition> props;
    std::vector<int> mece_indices;
    /// Row i holds hermitian_coords of props[i]'s projector (S x S).
    Eigen::MatrixXd effect_matrix;
    /// Smallest singular value of the row-normalized effect matrix.
    double smallest_singular_value = 0.0;
};

ICSet informationally_complete_set(const Model& model);

/// prob(b_i^A and b_j^B | rho) for all IC pairs.
struct JointTable {
    Eigen::MatrixXd values; // S(d_A) x S(d_B)
};

JointTable joint_probability_table(const CompositeModel& ab, const State& rho_ab,
                                   const ICSet& ic_a, const ICSet& ic_b);

/// Reconstruction of arbitrary composite probabilities from the joint IC
/// table. `chain` walks the conditional derivation (marginalize, condition,
/// extend linearly, re-multiply, marginalize, extend, compose) and falls
/// back to `linear` when a conditional's denominator degenerates; `linear`
/// inverts the IC Gram system globally and needs no division.
class JointReconstruction {
  public:
    JointReconstruction(CompositeModel ab, ICSet ic_a, ICSet ic_b, Eigen::MatrixXd table);

    double linear(const Proposition& x, const Proposition& y) const;
    double chain(const Proposition& x, const Proposition& y) const;
    double operator()(const Proposition& x, const Proposition& y) const { return chain(x, y); }

    const CompositeModel& composite() const { return ab_; }

  private:
    Eigen::VectorXd effect_overlaps(const ICSet& ic, const Proposition& x) const;

    CompositeModel ab_;
    ICSet ic_a_;
    ICSet ic_b_;
    Eigen::MatrixXd table_;
    Eigen::LDLT<Eigen::MatrixXd> gram_a_;
    Eigen::LDLT<Eigen::MatrixXd> gram_b_;
    Eigen::MatrixXd coeff_; // G_A^-1 * table * G_B^-1
};

JointReconstruction reconstruct_joint(const CompositeModel& ab, const JointTable& table,
                                      const ICSet& ic_a, const ICSet& ic_b);

enum class ReductionismStatus { saturated, strict, violated };

const char* reductionism_status_name(ReductionismStatus status);

struct ReductionismRecord {
    ModelKind kind;
    int d_a = 0;
    int d_b = 0;
    long long composite_parameters = 0; // S(dA * dB)
    long long product_parameters = 0;   // S(dA) * S(dB)
    ReductionismStatus status = ReductionismStatus::saturated;
};

/// S(dA dB) <= S(dA) S(dB): saturated on equality, strict when below,
/// violated when above.
ReductionismRecord reductionism_check(ModelKind kind, int d_a, int d_b);

} // namespace qpv
