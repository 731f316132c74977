// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_LINALG_HPP
#define CLUSTERX_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "clusterx/errors.hpp"

namespace clusterx {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest singular value.
double spectral_norm(const Matrix& m);

bool is_unitary(const Matrix& m, double tol = 1e-12);
bool is_self_adjoint(const Matrix& m, double tol = 1e-12);
bool is_positive_semidefinite(const Matrix& m, double tol = 1e-12);

struct HermitianEig {
    Eigen::VectorXd values;
    Matrix vectors;
};

/// Eigendecomposition of a Hermitian matrix (residual-checked).
HermitianEig eigh(const Matrix& h);

/// e^{-beta H} for Hermitian H and complex beta, via eigendecomposition:
/// exact per-eigenvalue phases, stable for imaginary beta.
Matrix expm_hermitian(const Matrix& h, std::complex<double> beta);

/// Kronecker product, left factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);

} // namespace clusterx

#endif
