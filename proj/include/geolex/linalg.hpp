#ifndef GEOLEX_LINALG_HPP
#define GEOLEX_LINALG_HPP

#include <Eigen/Core>

namespace geolex {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thin SVD X = U diag(sigma) V^T with r = min(rows, cols) columns.
/// sigma is nonincreasing and nonnegative; U and V have orthonormal columns.
/// Signs are fixed deterministically: each U column has its
/// largest-magnitude entry positive (first such entry on ties), with the
/// matching V column flipped alongside.
struct SvdResult {
  Matrix U;
  Vector sigma;
  Matrix V;
};

/// Computes the thin SVD. Throws std::invalid_argument on empty or
/// non-finite input.
SvdResult svd(const Matrix& x);

// Entrywise and spectral norms used by the pursuit objective. l1 and linf
// are entrywise (sum / max of absolute values), not the induced norms.

template <typename Derived>
double frobenius_norm(const Eigen::MatrixBase<Derived>& x) {
  return x.norm();
}

template <typename Derived>
double l1_norm(const Eigen::MatrixBase<Derived>& x) {
  return x.cwiseAbs().sum();
}

template <typename Derived>
double linf_norm(const Eigen::MatrixBase<Derived>& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

/// Largest singular value.
double spectral_norm(const Matrix& x);

/// Sum of singular values.
double nuclear_norm(const Matrix& x);

}  // namespace geolex

#endif  // GEOLEX_LINALG_HPP
