#pragma once

#include <Eigen/Dense>
#include <type_traits>
#include <utility>

#include "optrig/errors.hpp"

namespace optrig {

template <typename Scalar = double>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct SpdOptions {
  /// Maximum relative asymmetry, max|A_ij - A_ji| <= sym_tol * max|A_ij|.
  double sym_tol = 1e-10;
  /// Positive definiteness: lambda_min > pd_tol * lambda_max.
  double pd_tol = 1e-12;
};

/// Dense real symmetric positive definite matrix. Construction validates
/// squareness, finiteness, symmetry within tolerance, and positive
/// definiteness of the symmetrized matrix (A + A^T)/2, which is what gets
/// stored.
template <typename Scalar = double>
class SpdMatrix {
  static_assert(std::is_floating_point_v<Scalar>);

 public:
  template <typename Derived>
  explicit SpdMatrix(const Eigen::MatrixBase<Derived>& raw, const SpdOptions& opts = {}) {
    if (raw.rows() == 0 || raw.cols() == 0)
      throw Error(Errc::not_square, "matrix is empty");
    if (raw.rows() != raw.cols())
      throw Error(Errc::not_square, "matrix is " + std::to_string(raw.rows()) + "x" +
                                        std::to_string(raw.cols()));
    DenseMatrix<Scalar> a = raw.template cast<Scalar>();
    if (!a.allFinite()) throw Error(Errc::non_finite_entry, "matrix has a NaN or Inf entry");

    const Scalar scale = a.cwiseAbs().maxCoeff();
    const Scalar asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > static_cast<Scalar>(opts.sym_tol) * scale)
      throw Error(Errc::not_symmetric,
                  "max asymmetry " + std::to_string(static_cast<double>(asym)) +
                      " exceeds tolerance");
    m_ = ((a + a.transpose()) / Scalar(2)).eval();

    Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> es(m_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw Error(Errc::convergence_failure, "eigenvalue computation did not converge");
    const Scalar lo = es.eigenvalues()(0);
    const Scalar hi = es.eigenvalues()(m_.rows() - 1);
    if (hi <= Scalar(0) || lo <= static_cast<Scalar>(opts.pd_tol) * hi)
      throw Error(Errc::not_positive_definite,
                  "smallest eigenvalue " + std::to_string(static_cast<double>(lo)) +
                      " is not positive");
  }

  Eigen::Index dim() const { return m_.rows(); }
  const DenseMatrix<Scalar>& matrix() const { return m_; }

 private:
  DenseMatrix<Scalar> m_;
};

/// Validates a raw dense array as symmetric positive definite. Symmetrizes
/// via (A + A^T)/2 when the asymmetry is within tolerance.
template <typename Derived>
SpdMatrix<typename Derived::Scalar> validate_spd(const Eigen::MatrixBase<Derived>& raw,
                                                 const SpdOptions& opts = {}) {
  return SpdMatrix<typename Derived::Scalar>(raw, opts);
}

}  // namespace optrig
