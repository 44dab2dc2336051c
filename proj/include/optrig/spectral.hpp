#pragma once

#include <Eigen/Dense>

#include "optrig/errors.hpp"
#include "optrig/spd.hpp"

namespace optrig {

/// Full eigendecomposition of an SPD matrix: ascending positive eigenvalues
/// and matching orthonormal eigenvectors (as columns).
template <typename Scalar = double>
struct SpectralData {
  DenseVector<Scalar> eigenvalues;   // ascending, all > 0
  DenseMatrix<Scalar> eigenvectors;  // column i pairs with eigenvalues(i)

  Eigen::Index dim() const { return eigenvalues.size(); }
  Scalar lambda_min() const { return eigenvalues(0); }
  Scalar lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
};

namespace detail {

/// Sign convention: the largest-magnitude component of each eigenvector is
/// made positive; ties broken by the lowest index. Keeps decompositions
/// deterministic across runs and platforms.
template <typename Scalar>
void fix_eigenvector_signs(DenseMatrix<Scalar>& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index lead = 0;
    Scalar best = std::abs(vectors(0, j));
    for (Eigen::Index i = 1; i < vectors.rows(); ++i) {
      const Scalar mag = std::abs(vectors(i, j));
      if (mag > best) {
        best = mag;
        lead = i;
      }
    }
    if (vectors(lead, j) < Scalar(0)) vectors.col(j) = -vectors.col(j);
  }
}

}  // namespace detail

template <typename Scalar>
SpectralData<Scalar> spectral_decompose(const SpdMatrix<Scalar>& a) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> es(a.matrix());
  if (es.info() != Eigen::Success)
    throw Error(Errc::convergence_failure, "eigenvalue iteration hit its cap");
  SpectralData<Scalar> out;
  out.eigenvalues = es.eigenvalues();  // Eigen returns ascending order
  out.eigenvectors = es.eigenvectors();
  detail::fix_eigenvector_signs(out.eigenvectors);
  return out;
}

}  // namespace optrig
