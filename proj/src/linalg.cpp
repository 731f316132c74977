// SPDX-License-Identifier: Apache-2.0
#include "clusterx/linalg.hpp"

namespace clusterx {

double spectral_norm(const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("spectral_norm requires a square matrix");
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_self_adjoint(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Matrix d = m - m.adjoint();
    return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const Matrix& m, double tol) {
    if (!is_self_adjoint(m, tol)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

HermitianEig eigh(const Matrix& h) {
    if (h.rows() != h.cols()) throw ValidationError("eigh requires a square matrix");
    if (!is_self_adjoint(h, 1e-10))
        throw ValidationError("eigh requires a self-adjoint matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return HermitianEig{es.eigenvalues(), es.eigenvectors()};
}

Matrix expm_hermitian(const Matrix& h, std::complex<double> beta) {
    if (beta == std::complex<double>{0.0, 0.0}) {
        if (h.rows() != h.cols()) throw ValidationError("expm requires a square matrix");
        return Matrix::Identity(h.rows(), h.cols());
    }
    HermitianEig eig = eigh(h);
    const auto n = h.rows();
    Vector phases(n);
    for (Eigen::Index i = 0; i < n; ++i)
        phases(i) = std::exp(-beta * eig.values(i));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace clusterx
