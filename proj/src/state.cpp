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

#include "qpv/state.hpp"

#include <cmath>

namespace qpv {

using linalg::Matrix;
using linalg::Vector;

State State::classical(const Model& model, Eigen::VectorXd weights) {
    require(model.kind == ModelKind::classical, ErrorCode::kind_mismatch,
            "weight lists describe classical states");
    require(weights.size() == model.dim, ErrorCode::invalid_argument,
            "weight list length does not match the model dimension");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        require(weights(i) >= -kWeightSlack, ErrorCode::invalid_argument,
                "classical weights must be nonnegative");
        sum += weights(i);
    }
    require(sum <= 1.0 + kWeightSlack, ErrorCode::invalid_argument,
            "classical weights must sum to at most 1");
    return State(model, std::move(weights), Matrix(0, 0));
}

State State::density(const Model& model, Matrix rho) {
    require(is_quantum(model.kind), ErrorCode::kind_mismatch,
            "density matrices describe quantum states");
    require(rho.rows() == model.dim && rho.cols() == model.dim, ErrorCode::invalid_argument,
            "density matrix has wrong shape");
    require(linalg::max_abs(Matrix(rho - rho.adjoint())) <= kTol, ErrorCode::invalid_argument,
            "density matrix is not self-adjoint");
    rho = (rho + rho.adjoint()) / 2.0; // exact Hermitian representative
    rho = linalg::realify_if(model.kind, rho);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -kTol, ErrorCode::invalid_argument,
            "density matrix has a negative eigenvalue beyond tolerance");
    require(rho.trace().real() <= 1.0 + kTol, ErrorCode::invalid_argument,
            "density matrix trace exceeds 1");
    return State(model, Eigen::VectorXd(), std::move(rho));
}

State State::pure(const Proposition& e) {
    require(e.is_most_accurate(), ErrorCode::invalid_argument,
            "pure states correspond to most accurate propositions");
    const Model& model = e.model();
    if (model.kind == ModelKind::classical) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(model.dim);
        w(e.subset()[0]) = 1.0;
        return classical(model, std::move(w));
    }
    return density(model, e.projector());
}

State State::maximally_mixed(const Model& model) {
    if (model.kind == ModelKind::classical)
        return classical(model, Eigen::VectorXd::Constant(model.dim, 1.0 / model.dim));
    return density(model, Matrix::Identity(model.dim, model.dim) / static_cast<double>(model.dim));
}

double State::total() const {
    if (model_.kind == ModelKind::classical)
        return weights_.sum();
    return rho_.trace().real();
}

const Eigen::VectorXd& State::weights() const {
    require(model_.kind == ModelKind::classical, ErrorCode::internal,
            "weights requested from a quantum state");
    return weights_;
}

const Matrix& State::rho() const {
    require(is_quantum(model_.kind), ErrorCode::internal,
            "density matrix requested from a classical state");
    return rho_;
}

KeepWeights::KeepWeights(std::vector<double> values) : lambda(std::move(values)) {
    for (double v : lambda)
        require(v >= 0.0 && v <= 1.0, ErrorCode::weight_out_of_range,
                "retention probabilities must lie in [0, 1]");
}

bool same_state(const State& a, const State& b) {
    if (!(a.model() == b.model()))
        return false;
    if (a.model().kind == ModelKind::classical)
        return (a.weights() - b.weights()).cwiseAbs().maxCoeff() <= kTol;
    return linalg::max_abs(Matrix(a.rho() - b.rho())) <= kTol;
}

double probability(const State& rho, const Proposition& x) {
    require_same_model(rho.model(), x.model());
    double p;
    if (rho.model().kind == ModelKind::classical) {
        p = 0.0;
        for (int i : x.subset())
            p += rho.weights()(i);
    } else {
        p = (rho.rho() * x.projector()).trace().real();
    }
    require(p >= -kTol && p <= 1.0 + kTol, ErrorCode::internal,
            "probability escaped [0,1] beyond tolerance");
    return std::min(1.0, std::max(0.0, p));
}

State condition(const State& rho, const Proposition& x) {
    require_same_model(rho.model(), x.model());
    if (rho.model().kind == ModelKind::classical) {
        double p = 0.0;
        for (int i : x.subset())
            p += rho.weights()(i);
        require(p > 1e-12, ErrorCode::zero_probability_condition,
                "cannot condition on a proposition of zero probability");
        Eigen::VectorXd w = Eigen::VectorXd::Zero(rho.model().dim);
        for (int i : x.subset())
            w(i) = rho.weights()(i) / p;
        return State::classical(rho.model(), std::move(w));
    }
    const Matrix p_x = x.projector();
    const double p = (rho.rho() * p_x).trace().real();
    require(p > 1e-12, ErrorCode::zero_probability_condition,
            "cannot condition on a proposition of zero probability");
    Matrix updated = p_x * rho.rho() * p_x / p;
    updated = (updated + updated.adjoint()) / 2.0;
    return State::density(rho.model(), std::move(updated));
}

Proposition project_pure(const Proposition& e, const Proposition& x) {
    require_same_model(e.model(), x.model());
    require(e.is_most_accurate(), ErrorCode::invalid_argument,
            "the prior must be a most accurate proposition");
    require(!are_orthogonal(e, x), ErrorCode::orthogonal_prior,
            "the prior contradicts the condition");
    if (e.model().kind == ModelKind::classical)
        return e; // non-orthogonality forces the point to lie inside x
    const Vector image = x.projector() * e.frame().col(0);
    return Proposition::ray(e.model(), image);
}

State mix(const std::vector<State>& states, const std::vector<double>& weights) {
    require(!states.empty() && states.size() == weights.size(), ErrorCode::invalid_argument,
            "mix needs matching nonempty state and weight lists");
    double sum = 0.0;
    for (double a : weights) {
        require(a >= 0.0, ErrorCode::weight_out_of_range, "mixing weights must be nonnegative");
        sum += a;
    }
    require(sum <= 1.0 + kWeightSlack, ErrorCode::weight_out_of_range,
            "mixing weights must sum to at most 1");
    const Model& model = states[0].model();
    for (const auto& s : states)
        require_same_model(s.model(), model);
    if (model.kind == ModelKind::classical) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(model.dim);
        for (std::size_t i = 0; i < states.size(); ++i)
            w += weights[i] * states[i].weights();
        return State::classical(model, std::move(w));
    }
    Matrix rho = Matrix::Zero(model.dim, model.dim);
    for (std::size_t i = 0; i < states.size(); ++i)
        rho += weights[i] * states[i].rho();
    return State::density(model, std::move(rho));
}

bool is_pure(const State& rho) {
    const double t = rho.total();
    require(t > 1e-12, ErrorCode::zero_state, "purity of the null state is undefined");
    if (rho.model().kind == ModelKind::classical) {
        int nonzero = 0;
        for (Eigen::Index i = 0; i < rho.weights().size(); ++i)
            if (rho.weights()(i) / t > kTol)
                ++nonzero;
        return nonzero == 1;
    }
    const Matrix normalized = rho.rho() / t;
    return (normalized * normalized).trace().real() >= 1.0 - kTol;
}

State random_state(const Model& model, bool pure, std::uint64_t seed) {
    Rng rng(seed);
    if (model.kind == ModelKind::classical) {
        if (pure) {
            Eigen::VectorXd w = Eigen::VectorXd::Zero(model.dim);
            w(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(model.dim)))) = 1.0;
            return State::classical(model, std::move(w));
        }
        // flat Dirichlet via normalized exponentials
        Eigen::VectorXd w(model.dim);
        double sum = 0.0;
        for (int i = 0; i < model.dim; ++i) {
            w(i) = -std::log(1.0 - rng.uniform());
            sum += w(i);
        }
        return State::classical(model, Eigen::VectorXd(w / sum));
    }
    if (pure) {
        const Matrix v = linalg::haar_frame(model.kind, model.dim, 1, rng);
        return State::density(model, linalg::projector(v));
    }
    const Matrix g = linalg::gaussian_matrix(model.kind, model.dim, model.dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = linalg::realify_if(model.kind, rho);
    return State::density(model, std::move(rho));
}

State apply(const GroupElement& g, const State& rho) {
    require_same_model(g.model(), rho.model());
    if (g.model().kind == ModelKind::classical) {
        Eigen::VectorXd w(rho.weights().size());
        for (Eigen::Index i = 0; i < w.size(); ++i)
            w(g.perm()[static_cast<std::size_t>(i)]) = rho.weights()(i);
        return State::classical(g.model(), std::move(w));
    }
    Matrix moved = g.unitary() * rho.rho() * g.unitary().adjoint();
    moved = linalg::realify_if(g.model().kind, Matrix((moved + moved.adjoint()) / 2.0));
    return State::density(g.model(), std::move(moved));
}

State apply_preparation(const State& sigma, const GroupElement& g, const Decomposition& m,
                        const KeepWeights& lambda) {
    require_same_model(sigma.model(), g.model());
    require_same_model(sigma.model(), m.parent.model());
    require(lambda.lambda.size() == m.parts.size(), ErrorCode::bad_decomposition,
            "one retention probability per measured outcome");
    const State rotated = apply(g, sigma);
    const Model& model = sigma.model();
    if (model.kind == ModelKind::classical) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(model.dim);
        for (std::size_t i = 0; i < m.parts.size(); ++i)
            for (int j : m.parts[i].subset())
                w(j) = lambda.lambda[i] * rotated.weights()(j);
        return State::classical(model, std::move(w));
    }
    Matrix rho = Matrix::Zero(model.dim, model.dim);
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        const Matrix p = m.parts[i].projector();
        rho += lambda.lambda[i] * (p * rotated.rho() * p);
    }
    rho = linalg::realify_if(model.kind, Matrix((rho + rho.adjoint()) / 2.0));
    return State::density(model, std::move(rho));
}

SupersessionVerdict check_supersession(const Proposition& e, const std::vector<State>& priors,
                                       const std::vector<Proposition>& probes) {
    require(e.is_most_accurate(), ErrorCode::invalid_argument,
            "supersession concerns most accurate propositions");
    SupersessionVerdict verdict;
    std::vector<State> posteriors;
    for (const auto& prior : priors) {
        if (probability(prior, e) <= 1e-12)
            continue; // excluded by the conditioning precondition
        posteriors.push_back(condition(prior, e));
    }
    verdict.priors_used = static_cast<int>(posteriors.size());
    if (posteriors.size() < 2) {
        verdict.passed = true;
        return verdict;
    }
    for (const auto& probe : probes) {
        const double reference = probability(posteriors[0], probe);
        for (std::size_t i = 1; i < posteriors.size(); ++i)
            verdict.max_deviation = std::max(
                verdict.max_deviation, std::abs(probability(posteriors[i], probe) - reference));
    }
    verdict.passed = verdict.max_deviation <= kTol;
    return verdict;
}

} // namespace qpv
