#include "triform/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace triform {

namespace {

constexpr double kAsymmetryTol = 1e-12;
constexpr double kOffDiagTol = 1e-14;
constexpr int kMaxSweeps = 100;

}  // namespace

SymmetricMatrix::SymmetricMatrix(Matrix m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimensionMismatchError("SymmetricMatrix: matrix must be square with dim >= 1");
  }
  if (!m.allFinite()) {
    throw NonFiniteError("SymmetricMatrix: NaN or Inf entry");
  }
  const double max_abs = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kAsymmetryTol * (1.0 + max_abs)) {
    throw NonSymmetricError("SymmetricMatrix: asymmetry " + std::to_string(asym) +
                            " beyond tolerance");
  }
  m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(Eigen::Index n) {
  return SymmetricMatrix(Matrix::Identity(n, n));
}

SymmetricMatrix SymmetricMatrix::zero(Eigen::Index n) {
  return SymmetricMatrix(Matrix::Zero(n, n));
}

SymmetricMatrix SymmetricMatrix::diagonal(const Vector& d) {
  return SymmetricMatrix(Matrix(d.asDiagonal()));
}

/* Cyclic Jacobi eigensolver.
 *
 * Sweeps the strict upper triangle in row order, annihilating each pivot
 * a(p,q) with a Givens rotation; the accumulated rotations form the
 * eigenvector matrix, so orthonormality holds by construction. Convergence
 * criterion: off(A) <= 1e-14 * ||A||_F where off(A) is the Frobenius norm of
 * the off-diagonal part, capped at 100 sweeps (dense symmetric matrices of
 * the sizes used here converge in well under 15). The sweep order is fixed,
 * so the output is bit-deterministic for identical input bits.
 */
SpectralDecomposition eigh(const SymmetricMatrix& m) {
  const Eigen::Index n = m.dim();
  Matrix a = m.mat();
  Matrix v = Matrix::Identity(n, n);
  const double norm = a.norm();

  if (n > 1 && norm > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      double off_sq = 0.0;
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          off_sq += 2.0 * a(p, q) * a(p, q);
        }
      }
      if (std::sqrt(off_sq) <= kOffDiagTol * norm) {
        break;
      }
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) {
            continue;
          }
          const double app = a(p, p);
          const double aqq = a(q, q);
          const double theta = (aqq - app) / (2.0 * apq);
          const double t =
              std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          for (Eigen::Index k = 0; k < n; ++k) {
            if (k == p || k == q) {
              continue;
            }
            const double akp = a(k, p);
            const double akq = a(k, q);
            a(k, p) = a(p, k) = c * akp - s * akq;
            a(k, q) = a(q, k) = s * akp + c * akq;
          }
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = a(q, p) = 0.0;

          for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
    if (a(i, i) != a(j, j)) {
      return a(i, i) < a(j, j);
    }
    return i < j;
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }

  // Sign convention: first largest-magnitude component positive.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = 0;
    double mag = std::abs(out.eigenvectors(0, k));
    for (Eigen::Index i = 1; i < n; ++i) {
      if (std::abs(out.eigenvectors(i, k)) > mag) {
        mag = std::abs(out.eigenvectors(i, k));
        best = i;
      }
    }
    if (out.eigenvectors(best, k) < 0.0) {
      out.eigenvectors.col(k) = -out.eigenvectors.col(k);
    }
  }
  return out;
}

MinEigenspace min_eigenspace(const SymmetricMatrix& m, double cluster_tol) {
  if (!(cluster_tol >= 0.0)) {
    throw InvalidConfigError("min_eigenspace: cluster_tol must be >= 0");
  }
  const SpectralDecomposition d = eigh(m);
  const Eigen::Index n = m.dim();
  const double lambda_min = d.eigenvalues(0);
  const double rho = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(n - 1)));
  const double cut = lambda_min + cluster_tol * (1.0 + rho);
  Eigen::Index count = 1;
  while (count < n && d.eigenvalues(count) <= cut) {
    ++count;
  }
  return MinEigenspace{lambda_min, d.eigenvectors.leftCols(count)};
}

bool psd_check(const SymmetricMatrix& m, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidConfigError("psd_check: tol must be >= 0");
  }
  const SpectralDecomposition d = eigh(m);
  return d.eigenvalues(0) >= -tol * (1.0 + m.norm());
}

}  // namespace triform
