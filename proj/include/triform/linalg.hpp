#pragma once

#include <Eigen/Dense>

#include "triform/errors.hpp"

namespace triform {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix backing the quadratic form x^T M x.
///
/// Construction validates that every entry is finite and that
/// |m_ij - m_ji| <= 1e-12 * (1 + max|entry|), then stores (M + M^T)/2 so
/// downstream arithmetic never sees asymmetric drift.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix m);

  static SymmetricMatrix identity(Eigen::Index n);
  static SymmetricMatrix zero(Eigen::Index n);
  static SymmetricMatrix diagonal(const Vector& d);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  /// Frobenius norm.
  double norm() const { return m_.norm(); }
  double trace() const { return m_.trace(); }

 private:
  Matrix m_;
};

/// Eigenvalues sorted ascending; eigenvectors.col(k) is the unit eigenvector
/// paired with eigenvalues[k], columns orthonormal. Each column is sign-fixed
/// so its first largest-magnitude component is positive, which makes the
/// decomposition bit-deterministic for identical input bits.
struct SpectralDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;
};

SpectralDecomposition eigh(const SymmetricMatrix& m);

/// Smallest eigenvalue plus an orthonormal basis (as columns) of the span of
/// all eigenvectors with eigenvalue <= lambda_min + cluster_tol * (1 + rho),
/// rho the spectral radius.
struct MinEigenspace {
  double lambda_min;
  Matrix basis;
};

MinEigenspace min_eigenspace(const SymmetricMatrix& m, double cluster_tol);

/// True iff lambda_min(M) >= -tol * (1 + ||M||_F).
bool psd_check(const SymmetricMatrix& m, double tol);

}  // namespace triform
