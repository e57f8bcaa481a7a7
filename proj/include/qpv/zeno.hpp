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

/// One-parameter subgroup through the identity, anchored at a base ray.
/// The generator is anti-self-adjoint with unit Frobenius norm, so the
/// parameter t is the metric length travelled.
struct GeodesicPath {
    GeodesicPath(Proposition base_ray, linalg::Matrix generator);

    /// Plane rotation carrying e toward an orthogonal ray w; the extremal
    /// direction for survival decay (rate 1/sqrt(2) per unit metric length).
    static GeodesicPath toward(const Proposition& e, const Proposition& w);
    static GeodesicPath random(const Proposition& e, std::uint64_t seed);

    GroupElement point(double t) const;

    Proposition base;
    linalg::Matrix generator;
};

/// prob(e | g(e)): the survival probability of a pure state under g
/// followed by a measurement of e.
double survival_probability(const Proposition& e, const GroupElement& g);

/// Frobenius-metric convention: survival along the worst unit-speed
/// geodesic is cos^2(c t) with c = 1/sqrt(2).
inline constexpr double kMetricRate = 0.70710678118654752440;

/// Exact saturation radius of the continuity condition under the unit-
/// Frobenius metric convention: sqrt(2) * asin(sqrt(eps)). Independent of
/// the base ray and of the granularity.
double saturation_radius_closed_form(double eps);

/// Cap used when the witness radius is unbounded (x = a): pi * sqrt(d).
double metric_diameter(const Model& model);

struct ContinuityEstimate {
    bool discrete = false; // classical: vacuously continuous, no nontrivial balls
    double delta = 0.0;
    double cap = 0.0;
    int samples = 0;
};

/// Estimates the largest radius delta such that every sampled ray e in the
/// ball around e0 keeps prob(x|e) > 1 - eps. Bisection over the radius (20
/// iterations) against a fixed direction set; half the directions are
/// isotropic, half target the fastest-decaying plane rotations so the
/// binding direction is always represented.
ContinuityEstimate continuity_witness(const Proposition& a, const Proposition& x,
                                      const Proposition& e0, double eps, int n_samples,
                                      std::uint64_t seed);

/// delta(N eps) / (sqrt(N) delta(eps)) from witness estimates sharing one
/// direction set. Requires the small-eps regime N * eps < 0.1.
double scaling_check(double eps, int n, int d, std::uint64_t seed);

/// For each N: the product of N survival probabilities for steps of metric
/// length delta/N along the path, each step re-based at e by the
/// intervening measurement.
std::vector<double> zeno_limit(const GeodesicPath& path, double delta,
                               const std::vector<int>& n_list);

struct PreparationToleranceVerdict {
    double product = 0.0;
    double threshold = 0.0;
    bool passed = false;
    /// |composite survival - product of single-copy survivals| from an
    /// explicit tensor construction; filled for N <= 4, else -1.
    double composite_deviation = -1.0;
};

/// Aggregated smoothness numerics for one model: saturation radii over an
/// eps grid (monotone nondecreasing in eps), scaling ratios per replica
/// count, and measurement-limit survival products along the extremal
/// geodesic.
struct ZenoReport {
    std::vector<double> eps_grid;
    std::vector<double> delta_estimates;
    bool delta_monotone = false;

    std::vector<int> n_list;
    std::vector<double> scaling_ratios; // -1 where N = 1 or outside the regime

    double metric_rate_times_delta = 0.0;
    std::vector<double> survival_products; // one per n_list entry
};

ZenoReport zeno_survey(int dim, const std::vector<double>& eps_grid,
                       const std::vector<int>& n_list, std::uint64_t seed);

/// Samples N group elements at radius delta(eps)/sqrt(N) and checks that
/// the N-fold survival product stays above 1 - eps (slack 0.1 eps).
PreparationToleranceVerdict preparation_tolerance_check(const Proposition& e, double eps, int n,
                                                        std::uint64_t seed);

} // namespace qpv
