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

#include <complex>

#include <Eigen/Dense>

#include "qpv/error.hpp"
#include "qpv/model.hpp"
#include "qpv/rng.hpp"

namespace qpv::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Matrix projector(const Matrix& frame) {
    return frame * frame.adjoint();
}

/// Strips numerically-zero imaginary parts for real-kind data. Anything
/// above `tol` means a real-model invariant was broken upstream.
Matrix enforce_real(const Matrix& m, double tol = 1e-12);

inline Matrix realify_if(ModelKind kind, const Matrix& m) {
    return kind == ModelKind::quantum_real ? enforce_real(m) : m;
}

/// Thin-QR orthonormalization. Columns of the result span the same space;
/// the input is expected to have full column rank.
Matrix orthonormalize(const Matrix& m);

/// Haar-distributed unitary (complex kind) or orthogonal (real kind)
/// matrix: Gaussian ensemble + QR, with the triangular factor's diagonal
/// normalized to positive reals so the distribution is exactly uniform.
Matrix haar_unitary(ModelKind kind, int dim, Rng& rng);

/// Haar-random d x k frame (orthonormal columns) in the ambient space.
Matrix haar_frame(ModelKind kind, int dim, int k, Rng& rng);

/// Gaussian matrix with iid real (real kind) or complex (complex kind)
/// standard normal entries.
Matrix gaussian_matrix(ModelKind kind, int rows, int cols, Rng& rng);

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// exp(A) for anti-self-adjoint A via the eigendecomposition of iA.
Matrix exp_antihermitian(const Matrix& generator);

/// Orthonormal basis of the orthogonal complement of `frame` inside the
/// subspace spanned by `ambient` (both frames over the same space).
/// The result has ambient.cols() - frame.cols() columns.
Matrix complement_within(const Matrix& ambient, const Matrix& frame);

} // namespace qpv::linalg
