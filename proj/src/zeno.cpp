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

#include "qpv/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpv/composition.hpp"

namespace qpv {

using linalg::Complex;
using linalg::Matrix;
using linalg::Vector;

GeodesicPath::GeodesicPath(Proposition base_ray, Matrix gen)
    : base(std::move(base_ray)), generator(std::move(gen)) {
    require(is_quantum(base.model().kind), ErrorCode::unsupported_model,
            "geodesics live in Lie groups");
    require(base.is_most_accurate(), ErrorCode::invalid_argument, "the anchor must be a ray");
    require(generator.rows() == base.model().dim && generator.cols() == base.model().dim,
            ErrorCode::invalid_argument, "generator has wrong shape");
    require(linalg::max_abs(Matrix(generator + generator.adjoint())) <= kTol,
            ErrorCode::invalid_argument, "generator must be anti-self-adjoint");
    const double norm = generator.norm();
    require(std::abs(norm - 1.0) <= 1e-6, ErrorCode::invalid_argument,
            "generator must have unit Frobenius norm");
    generator /= norm;
}

GeodesicPath GeodesicPath::toward(const Proposition& e, const Proposition& w) {
    require_same_model(e.model(), w.model());
    require(w.is_most_accurate(), ErrorCode::invalid_argument, "target must be a ray");
    require(are_orthogonal(e, w), ErrorCode::not_orthogonal,
            "plane rotations need an orthogonal target");
    const Vector ve = e.frame().col(0);
    const Vector vw = w.frame().col(0);
    Matrix gen = (vw * ve.adjoint() - ve * vw.adjoint()) / std::sqrt(2.0);
    gen = linalg::realify_if(e.model().kind, gen);
    return GeodesicPath(e, std::move(gen));
}

GeodesicPath GeodesicPath::random(const Proposition& e, std::uint64_t seed) {
    Rng rng(seed);
    const Matrix g = linalg::gaussian_matrix(e.model().kind, e.model().dim, e.model().dim, rng);
    Matrix gen = (g - g.adjoint()) / 2.0;
    const double norm = gen.norm();
    require(norm > 0.0, ErrorCode::internal, "degenerate generator sample");
    gen /= norm;
    return GeodesicPath(e, std::move(gen));
}

GroupElement GeodesicPath::point(double t) const {
    Matrix u = linalg::exp_antihermitian(Matrix(t * generator));
    u = linalg::realify_if(base.model().kind, u);
    return GroupElement::matrix(base.model(), std::move(u));
}

double survival_probability(const Proposition& e, const GroupElement& g) {
    require_same_model(e.model(), g.model());
    require(e.is_most_accurate(), ErrorCode::invalid_argument,
            "survival concerns most accurate propositions");
    return probability(State::pure(apply(g, e)), e);
}

double saturation_radius_closed_form(double eps) {
    require(eps > 0.0 && eps < 1.0, ErrorCode::invalid_argument, "eps must lie in (0, 1)");
    return std::sqrt(2.0) * std::asin(std::sqrt(eps));
}

double metric_diameter(const Model& model) {
    return std::numbers::pi * std::sqrt(static_cast<double>(model.dim));
}

namespace {

// Directions are generators over the subspace of `a`, expressed in its
// coordinates. Alternating entries are isotropic Gaussian samples and
// targeted plane rotations from e0 toward a ray orthogonal to x, the
// extremal decay directions; the latter exist only when x is a proper part
// of a.
std::vector<Matrix> sample_directions(ModelKind kind, const Matrix& e0_coords,
                                      const Matrix& x_coords, int n_samples, Rng& rng) {
    const int r = static_cast<int>(e0_coords.rows());
    const Eigen::Index rank_x = x_coords.cols();
    std::vector<Matrix> directions;
    directions.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const bool targeted = (i % 2 == 1) && rank_x < r;
        if (!targeted) {
            const Matrix g = linalg::gaussian_matrix(kind, r, r, rng);
            Matrix gen = (g - g.adjoint()) / 2.0;
            const double norm = gen.norm();
            if (norm <= 0.0)
                continue;
            directions.push_back(Matrix(gen / norm));
            continue;
        }
        // random unit vector orthogonal to x inside a
        Vector w = linalg::gaussian_matrix(kind, r, 1, rng).col(0);
        w -= x_coords * (x_coords.adjoint() * w);
        const double norm = w.norm();
        if (norm <= kTol) {
            --i;
            continue;
        }
        w /= norm;
        const Vector ve = e0_coords.col(0);
        directions.push_back(Matrix((w * ve.adjoint() - ve * w.adjoint()) / std::sqrt(2.0)));
    }
    return directions;
}

struct DirectionFlow {
    Matrix eigvecs;
    Eigen::VectorXd eigvals;
    Vector anchor; // eigvecs^H e0
};

DirectionFlow prepare_flow(const Matrix& generator, const Vector& e0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, 1) * generator));
    DirectionFlow flow;
    flow.eigvecs = es.eigenvectors();
    flow.eigvals = es.eigenvalues();
    flow.anchor = flow.eigvecs.adjoint() * e0;
    return flow;
}

double flow_survival(const DirectionFlow& flow, const Matrix& x_coords, double t) {
    Vector moved = flow.anchor;
    for (Eigen::Index i = 0; i < moved.size(); ++i)
        moved(i) *= std::exp(Complex(0, -flow.eigvals(i) * t));
    const Vector e_t = flow.eigvecs * moved;
    return (x_coords.adjoint() * e_t).squaredNorm();
}

} // namespace

ContinuityEstimate continuity_witness(const Proposition& a, const Proposition& x,
                                      const Proposition& e0, double eps, int n_samples,
                                      std::uint64_t seed) {
    require(eps > 0.0 && eps < 1.0, ErrorCode::invalid_argument, "eps must lie in (0, 1)");
    require(n_samples >= 1, ErrorCode::invalid_argument, "need at least one sample");
    require(implies(e0, x) && implies(x, a), ErrorCode::not_contained,
            "continuity needs e0 inside x inside a");
    require(e0.is_most_accurate(), ErrorCode::invalid_argument, "e0 must be a ray");

    ContinuityEstimate est;
    if (a.model().kind == ModelKind::classical) {
        // Discrete topology: no nontrivial balls, vacuously continuous.
        est.discrete = true;
        return est;
    }

    const int r = a.granularity();
    est.cap = std::numbers::pi * std::sqrt(static_cast<double>(r));
    est.samples = n_samples;
    if (x.granularity() == r) {
        // x = a, so prob(x|e) = 1 throughout X_a: the radius is unbounded.
        est.delta = est.cap;
        return est;
    }

    // work in the coordinates of a
    const Matrix e0_coords = a.frame().adjoint() * e0.frame();
    const Matrix x_coords = a.frame().adjoint() * x.frame();

    Rng rng(seed);
    const auto directions =
        sample_directions(a.model().kind, e0_coords, x_coords, n_samples, rng);
    std::vector<DirectionFlow> flows;
    flows.reserve(directions.size());
    for (const auto& gen : directions)
        flows.push_back(prepare_flow(gen, e0_coords.col(0)));

    // Survival along a geodesic is periodic, so the ball predicate probes a
    // geometric ladder of depths, not just the boundary.
    auto all_survive = [&](double radius) {
        for (const auto& flow : flows)
            for (double t = radius; t > radius * 0x1p-7; t /= 2.0)
                if (flow_survival(flow, x_coords, t) <= 1.0 - eps)
                    return false;
        return true;
    };

    double lo = 0.0;
    double hi = est.cap;
    if (all_survive(hi)) {
        est.delta = est.cap;
        return est;
    }
    for (int iter = 0; iter < 20; ++iter) {
        const double mid = (lo + hi) / 2.0;
        (all_survive(mid) ? lo : hi) = mid;
    }
    est.delta = lo;
    return est;
}

double scaling_check(double eps, int n, int d, std::uint64_t seed) {
    require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    require(n * eps < 0.1, ErrorCode::regime_violation,
            "scaling law holds in the small-eps regime only (n * eps < 0.1)");
    const Model model(ModelKind::quantum_complex, d);
    const Proposition a = Proposition::top(model);
    const Proposition e0 = Proposition::basis(model, {0});
    constexpr int n_samples = 64;
    // One direction set for both estimates, so the binding direction cancels
    // in the ratio.
    const double delta_1 = continuity_witness(a, e0, e0, eps, n_samples, seed).delta;
    const double delta_n = continuity_witness(a, e0, e0, n * eps, n_samples, seed).delta;
    return delta_n / (std::sqrt(static_cast<double>(n)) * delta_1);
}

std::vector<double> zeno_limit(const GeodesicPath& path, double delta,
                               const std::vector<int>& n_list) {
    require(delta > 0.0 && std::isfinite(delta), ErrorCode::invalid_argument,
            "delta must be positive and finite");
    std::vector<double> products;
    products.reserve(n_list.size());
    for (int n : n_list) {
        require(n >= 1, ErrorCode::invalid_argument, "step counts must be positive");
        // each step re-starts from the base ray: the measurement resets the
        // state, so the product is the per-step survival to the N-th power
        const double step = survival_probability(path.base, path.point(delta / n));
        products.push_back(std::pow(step, n));
    }
    return products;
}

ZenoReport zeno_survey(int dim, const std::vector<double>& eps_grid,
                       const std::vector<int>& n_list, std::uint64_t seed) {
    require(dim >= 2, ErrorCode::invalid_argument, "granularity must be >= 2");
    require(!eps_grid.empty() && !n_list.empty(), ErrorCode::invalid_argument,
            "empty survey grids");
    ZenoReport survey;
    survey.eps_grid = eps_grid;
    std::sort(survey.eps_grid.begin(), survey.eps_grid.end());
    survey.n_list = n_list;

    const Model model(ModelKind::quantum_complex, dim);
    const Proposition a = Proposition::top(model);
    const Proposition e0 = Proposition::basis(model, {0});
    constexpr int n_samples = 128;
    survey.delta_monotone = true;
    for (double eps : survey.eps_grid) {
        const double delta = continuity_witness(a, e0, e0, eps, n_samples, seed).delta;
        if (!survey.delta_estimates.empty() && delta < survey.delta_estimates.back())
            survey.delta_monotone = false;
        survey.delta_estimates.push_back(delta);
    }

    const double base_eps = survey.eps_grid.front();
    for (int n : survey.n_list) {
        if (n < 2 || n * base_eps >= 0.1) {
            survey.scaling_ratios.push_back(-1.0);
            continue;
        }
        survey.scaling_ratios.push_back(scaling_check(base_eps, n, dim, seed));
    }

    survey.metric_rate_times_delta = 0.5;
    const GeodesicPath path =
        GeodesicPath::toward(e0, Proposition::basis(model, {1}));
    survey.survival_products =
        zeno_limit(path, survey.metric_rate_times_delta / kMetricRate, survey.n_list);
    return survey;
}

PreparationToleranceVerdict preparation_tolerance_check(const Proposition& e, double eps, int n,
                                                        std::uint64_t seed) {
    require(is_quantum(e.model().kind), ErrorCode::unsupported_model,
            "preparation tolerance is a Lie-group statement");
    require(e.is_most_accurate(), ErrorCode::invalid_argument, "e must be a ray");
    require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    require(eps > 0.0 && eps < 1.0, ErrorCode::invalid_argument, "eps must lie in (0, 1)");

    const double radius = saturation_radius_closed_form(eps) / std::sqrt(static_cast<double>(n));
    Rng master(seed);
    std::vector<GroupElement> elements;
    elements.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        elements.push_back(element_near_identity(e.model(), radius, master.next_u64()));

    PreparationToleranceVerdict verdict;
    verdict.product = 1.0;
    for (const auto& g : elements)
        verdict.product *= survival_probability(e, g);
    verdict.threshold = 1.0 - eps - 0.1 * eps;
    verdict.passed = verdict.product >= verdict.threshold;

    if (n <= 4) {
        // explicit tensor construction: composite survival factorizes
        Proposition replicas = e;
        GroupElement joint = elements[0];
        for (int i = 1; i < n; ++i) {
            replicas = tensor_proposition(replicas, e);
            joint = tensor_group_element(joint, elements[static_cast<std::size_t>(i)]);
        }
        const double composite = survival_probability(replicas, joint);
        verdict.composite_deviation = std::abs(composite - verdict.product);
    }
    return verdict;
}

} // namespace qpv
