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

#include "qpv/linalg.hpp"

namespace qpv::linalg {

Matrix enforce_real(const Matrix& m, double tol) {
    const double worst = m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
    require(worst <= tol, ErrorCode::internal,
            "real-model data acquired an imaginary part of magnitude " + std::to_string(worst));
    Matrix out = m;
    out.imag().setZero();
    return out;
}

Matrix orthonormalize(const Matrix& m) {
    if (m.cols() == 0)
        return m;
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
    // Align each column's phase with the triangular factor so the result is
    // a deterministic function of the input.
    const Matrix r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0)
            q.col(j) *= d / std::abs(d);
    }
    return q;
}

Matrix gaussian_matrix(ModelKind kind, int rows, int cols, Rng& rng) {
    Matrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            if (kind == ModelKind::quantum_real)
                g(i, j) = Complex(rng.gaussian(), 0.0);
            else
                g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    return g;
}

Matrix haar_unitary(ModelKind kind, int dim, Rng& rng) {
    require(is_quantum(kind), ErrorCode::unsupported_model,
            "Haar sampling needs a matrix group");
    const Matrix g = gaussian_matrix(kind, dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return realify_if(kind, q);
}

Matrix haar_frame(ModelKind kind, int dim, int k, Rng& rng) {
    require(k >= 0 && k <= dim, ErrorCode::bad_granularity, "frame rank out of range");
    if (k == 0)
        return Matrix(dim, 0);
    const Matrix g = gaussian_matrix(kind, dim, k, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, k);
    const Matrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    for (int j = 0; j < k; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return realify_if(kind, q);
}

Matrix exp_antihermitian(const Matrix& generator) {
    const double herm = max_abs(Matrix(generator + generator.adjoint()));
    require(herm <= 1e-9, ErrorCode::invalid_argument, "generator is not anti-self-adjoint");
    // iA is Hermitian: exp(A) = V exp(-i diag) V^H.
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, 1) * generator));
    const auto& v = es.eigenvectors();
    Vector phases(v.cols());
    for (Eigen::Index j = 0; j < v.cols(); ++j)
        phases(j) = std::exp(Complex(0, -es.eigenvalues()(j)));
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix complement_within(const Matrix& ambient, const Matrix& frame) {
    const Eigen::Index want = ambient.cols() - frame.cols();
    require(want >= 0, ErrorCode::invalid_argument, "frame larger than its ambient space");
    if (want == 0)
        return Matrix(ambient.rows(), 0);
    // Project the ambient basis off the frame; the nonzero singular
    // directions span the complement.
    Matrix residual = ambient - frame * (frame.adjoint() * ambient);
    Eigen::JacobiSVD<Matrix> svd(residual, Eigen::ComputeThinU);
    require(svd.singularValues()(want - 1) > 1e-9, ErrorCode::internal,
            "complement rank collapsed; frame is not contained in the ambient space");
    return svd.matrixU().leftCols(want);
}

} // namespace qpv::linalg
