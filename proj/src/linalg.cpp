#include "geolex/linalg.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace geolex {

SvdResult svd(const Matrix& x) {
  if (x.size() == 0) {
    throw std::invalid_argument("svd: empty matrix");
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("svd: non-finite input");
  }
  Eigen::BDCSVD<Matrix> dec(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdResult r{dec.matrixU(), dec.singularValues(), dec.matrixV()};

  // Deterministic sign convention: per column, the largest-magnitude entry
  // of U is made positive (ties resolved by the first such entry).
  for (Eigen::Index k = 0; k < r.U.cols(); ++k) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < r.U.rows(); ++i) {
      const double a = std::abs(r.U(i, k));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (r.U(imax, k) < 0.0) {
      r.U.col(k) = -r.U.col(k);
      r.V.col(k) = -r.V.col(k);
    }
  }
  return r;
}

double spectral_norm(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return Eigen::BDCSVD<Matrix>(x).singularValues()(0);
}

double nuclear_norm(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return Eigen::BDCSVD<Matrix>(x).singularValues().sum();
}

}  // namespace geolex
