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

#include "qpv/symmetry.hpp"

namespace qpv {

/// A probability assignment: a weight list (classical) or a self-adjoint
/// positive matrix (quantum). States may be subnormalized; normalization
/// happens only inside `condition` and `is_pure`.
class State {
  public:
    static State classical(const Model& model, Eigen::VectorXd weights);
    static State density(const Model& model, linalg::Matrix rho);
    /// The pure state fixed by a most accurate proposition.
    static State pure(const Proposition& e);
    static State maximally_mixed(const Model& model);

    const Model& model() const { return model_; }
    /// Total weight / trace; at most 1 (plus slack).
    double total() const;

    const Eigen::VectorXd& weights() const;
    const linalg::Matrix& rho() const;

  private:
    State(Model model, Eigen::VectorXd w, linalg::Matrix rho)
        : model_(model), weights_(std::move(w)), rho_(std::move(rho)) {}

    Model model_;
    Eigen::VectorXd weights_;
    linalg::Matrix rho_;
};

/// Per-outcome retention probabilities for a preparation step.
struct KeepWeights {
    explicit KeepWeights(std::vector<double> values);
    std::vector<double> lambda;
};

/// Two states are the same iff they assign the same probabilities to every
/// proposition; on the stored payloads that is entrywise agreement to kTol.
bool same_state(const State& a, const State& b);

double probability(const State& rho, const Proposition& x);

/// Bayesian restrict-and-renormalize (classical) or the projective update
/// P x P / tr(x P) (quantum). The result is normalized.
State condition(const State& rho, const Proposition& x);

/// The unique most accurate f inside x that is certain after a pure prior e
/// is conditioned on x.
Proposition project_pure(const Proposition& e, const Proposition& x);

State mix(const std::vector<State>& states, const std::vector<double>& weights);

bool is_pure(const State& rho);

State random_state(const Model& model, bool pure, std::uint64_t seed);

State apply(const GroupElement& g, const State& rho);

/// One preparation step: reversible operation g, measurement of the MECE
/// parts of m, then keeping each outcome i with probability lambda_i. The
/// result is subnormalized whenever some lambda_i < 1.
State apply_preparation(const State& sigma, const GroupElement& g, const Decomposition& m,
                        const KeepWeights& lambda);

struct SupersessionVerdict {
    bool passed = false;
    double max_deviation = 0.0;
    int priors_used = 0;
};

/// Checks that conditioning on a most accurate e wipes out the prior: all
/// usable priors must give identical probe probabilities afterwards.
SupersessionVerdict check_supersession(const Proposition& e, const std::vector<State>& priors,
                                       const std::vector<Proposition>& probes);

} // namespace qpv
