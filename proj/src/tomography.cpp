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

#include "qpv/tomography.hpp"

#include <cmath>

namespace qpv {

using linalg::Complex;
using linalg::Matrix;
using linalg::Vector;

long long hermitian_coord_count(ModelKind kind, int dim) {
    switch (kind) {
        case ModelKind::classical: return dim;
        case ModelKind::quantum_real: return static_cast<long long>(dim) * (dim + 1) / 2;
        case ModelKind::quantum_complex: return static_cast<long long>(dim) * dim;
        case ModelKind::quaternionic: break;
    }
    fail(ErrorCode::unsupported_model, "no matrix representation for this kind");
}

Eigen::VectorXd hermitian_coords(ModelKind kind, const Matrix& m) {
    const int d = static_cast<int>(m.rows());
    Eigen::VectorXd coords(hermitian_coord_count(kind, d));
    Eigen::Index at = 0;
    for (int i = 0; i < d; ++i)
        coords(at++) = m(i, i).real();
    if (kind == ModelKind::classical)
        return coords;
    const double s = std::sqrt(2.0);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            coords(at++) = s * m(j, k).real();
            if (kind == ModelKind::quantum_complex)
                coords(at++) = s * m(j, k).imag();
        }
    return coords;
}

Matrix hermitian_from_coords(ModelKind kind, int dim, const Eigen::VectorXd& coords) {
    require(coords.size() == hermitian_coord_count(kind, dim), ErrorCode::invalid_argument,
            "coordinate vector has wrong length");
    Matrix m = Matrix::Zero(dim, dim);
    Eigen::Index at = 0;
    for (int i = 0; i < dim; ++i)
        m(i, i) = coords(at++);
    if (kind == ModelKind::classical)
        return m;
    const double s = std::sqrt(2.0);
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            double re = coords(at++) / s;
            double im = 0.0;
            if (kind == ModelKind::quantum_complex)
                im = coords(at++) / s;
            m(j, k) = Complex(re, im);
            m(k, j) = Complex(re, -im);
        }
    return m;
}

namespace {

Vector two_level_vector(int dim, int j, int k, Complex second_amplitude) {
    Vector v = Vector::Zero(dim);
    v(j) = 1.0 / std::sqrt(2.0);
    v(k) = second_amplitude / std::sqrt(2.0);
    return v;
}

} // namespace

ICSet informationally_complete_set(const Model& model) {
    ICSet ic;
    ic.model = model;
    const int d = model.dim;
    if (model.kind == ModelKind::classical) {
        for (int i = 0; i < d; ++i) {
            ic.props.push_back(Proposition::classical(model, {i}));
            ic.mece_indices.push_back(i);
        }
    } else {
        for (int i = 0; i < d; ++i) {
            ic.props.push_back(Proposition::basis(model, {i}));
            ic.mece_indices.push_back(i);
        }
        for (int j = 0; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                ic.props.push_back(Proposition::ray(model, two_level_vector(d, j, k, 1.0)));
                if (model.kind == ModelKind::quantum_complex)
                    ic.props.push_back(
                        Proposition::ray(model, two_level_vector(d, j, k, Complex(0.0, 1.0))));
            }
    }
    const long long expected = state_parameter_count(model.kind, d);
    require(static_cast<long long>(ic.props.size()) == expected, ErrorCode::internal,
            "informationally complete family has the wrong size");

    ic.effect_matrix.resize(static_cast<Eigen::Index>(ic.props.size()),
                            static_cast<Eigen::Index>(expected));
    for (std::size_t i = 0; i < ic.props.size(); ++i)
        ic.effect_matrix.row(static_cast<Eigen::Index>(i)) =
            hermitian_coords(model.kind, ic.props[i].projector()).transpose();

    Eigen::MatrixXd normalized = ic.effect_matrix;
    for (Eigen::Index r = 0; r < normalized.rows(); ++r) {
        const double n = normalized.row(r).norm();
        require(n > 0.0, ErrorCode::rank_deficient, "an effect vanished");
        normalized.row(r) /= n;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(normalized);
    ic.smallest_singular_value = svd.singularValues()(svd.singularValues().size() - 1);
    require(ic.smallest_singular_value > kRankTol, ErrorCode::rank_deficient,
            "family is not informationally complete");
    return ic;
}

JointTable joint_probability_table(const CompositeModel& ab, const State& rho_ab,
                                   const ICSet& ic_a, const ICSet& ic_b) {
    require_same_model(ic_a.model, ab.factor_a);
    require_same_model(ic_b.model, ab.factor_b);
    require_same_model(rho_ab.model(), ab.total());
    JointTable table;
    table.values.resize(static_cast<Eigen::Index>(ic_a.props.size()),
                        static_cast<Eigen::Index>(ic_b.props.size()));
    for (std::size_t i = 0; i < ic_a.props.size(); ++i)
        for (std::size_t j = 0; j < ic_b.props.size(); ++j)
            table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                probability(rho_ab, tensor_proposition(ic_a.props[i], ic_b.props[j]));
    return table;
}

JointReconstruction::JointReconstruction(CompositeModel ab, ICSet ic_a, ICSet ic_b,
                                         Eigen::MatrixXd table)
    : ab_(ab), ic_a_(std::move(ic_a)), ic_b_(std::move(ic_b)), table_(std::move(table)) {
    require(ic_a_.smallest_singular_value > kRankTol && ic_b_.smallest_singular_value > kRankTol,
            ErrorCode::rank_deficient, "reconstruction needs informationally complete families");
    require(table_.rows() == ic_a_.effect_matrix.rows() &&
                table_.cols() == ic_b_.effect_matrix.rows(),
            ErrorCode::invalid_argument, "table shape does not match the IC families");
    // The effect coordinates are isometric, so the Gram matrices are
    // M M^T and the state coefficients solve G c = p.
    const Eigen::MatrixXd gram_a = ic_a_.effect_matrix * ic_a_.effect_matrix.transpose();
    const Eigen::MatrixXd gram_b = ic_b_.effect_matrix * ic_b_.effect_matrix.transpose();
    gram_a_.compute(gram_a);
    gram_b_.compute(gram_b);
    coeff_ = gram_a_.solve(table_);
    coeff_ = gram_b_.solve(coeff_.transpose()).transpose();
}

Eigen::VectorXd JointReconstruction::effect_overlaps(const ICSet& ic, const Proposition& x) const {
    return ic.effect_matrix * hermitian_coords(ic.model.kind, x.projector());
}

double JointReconstruction::linear(const Proposition& x, const Proposition& y) const {
    require_same_model(x.model(), ab_.factor_a);
    require_same_model(y.model(), ab_.factor_b);
    const Eigen::VectorXd ux = effect_overlaps(ic_a_, x);
    const Eigen::VectorXd uy = effect_overlaps(ic_b_, y);
    return ux.dot(coeff_ * uy);
}

double JointReconstruction::chain(const Proposition& x, const Proposition& y) const {
    require_same_model(x.model(), ab_.factor_a);
    require_same_model(y.model(), ab_.factor_b);
    const Eigen::Index sb = table_.cols();

    // prob(a_A and b_j) by distributivity + sum rule over the MECE subset
    Eigen::VectorXd marg(sb);
    for (Eigen::Index j = 0; j < sb; ++j) {
        double m = 0.0;
        for (int i : ic_a_.mece_indices)
            m += table_(i, j);
        marg(j) = m;
    }
    if (marg.minCoeff() < kDenomTol)
        return linear(x, y); // conditional chain degenerates; division-free route

    const Eigen::VectorXd ux = effect_overlaps(ic_a_, x);
    const Eigen::VectorXd uy = effect_overlaps(ic_b_, y);

    // per-condition posterior of A, extended linearly to x, then re-multiplied
    Eigen::VectorXd lifted(sb);
    for (Eigen::Index j = 0; j < sb; ++j) {
        const Eigen::VectorXd conditional = table_.col(j) / marg(j);
        const double prob_x_given = ux.dot(gram_a_.solve(conditional));
        lifted(j) = prob_x_given * marg(j); // prob(x and b_j)
    }

    // marginalize over the B-side MECE subset: prob(x and a_B)
    double m_x = 0.0;
    for (int j : ic_b_.mece_indices)
        m_x += lifted(j);
    if (m_x < kDenomTol)
        return linear(x, y);

    // condition on (x and a_B), extend over y, compose
    const Eigen::VectorXd ratios = lifted / m_x;
    const double prob_y_given = uy.dot(gram_b_.solve(ratios));
    return prob_y_given * m_x;
}

JointReconstruction reconstruct_joint(const CompositeModel& ab, const JointTable& table,
                                      const ICSet& ic_a, const ICSet& ic_b) {
    return JointReconstruction(ab, ic_a, ic_b, table.values);
}

const char* reductionism_status_name(ReductionismStatus status) {
    switch (status) {
        case ReductionismStatus::saturated: return "saturated";
        case ReductionismStatus::strict: return "strict";
        case ReductionismStatus::violated: return "violated";
    }
    return "unknown";
}

ReductionismRecord reductionism_check(ModelKind kind, int d_a, int d_b) {
    require(d_a >= 1 && d_b >= 1, ErrorCode::invalid_argument, "factor granularities must be >= 1");
    ReductionismRecord record;
    record.kind = kind;
    record.d_a = d_a;
    record.d_b = d_b;
    record.composite_parameters = state_parameter_count(kind, d_a * d_b);
    record.product_parameters =
        state_parameter_count(kind, d_a) * state_parameter_count(kind, d_b);
    record.status = record.composite_parameters == record.product_parameters
                        ? ReductionismStatus::saturated
                    : record.composite_parameters < record.product_parameters
                        ? ReductionismStatus::strict
                        : ReductionismStatus::violated;
    return record;
}

} // namespace qpv
