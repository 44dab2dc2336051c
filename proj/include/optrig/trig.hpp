#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "optrig/errors.hpp"
#include "optrig/spd.hpp"
#include "optrig/spectral.hpp"

namespace optrig {

/// Relative spread below which the extreme eigenvalues count as equal and the
/// matrix turns nothing.
inline constexpr double kDegenerateTol = 1e-10;

/// First antieigenvalue mu1 = cos phi(A) = 2 sqrt(lambda_1 lambda_n) / (lambda_1 + lambda_n).
/// Equals 1 exactly when the spectrum is a single point.
template <typename Scalar>
Scalar first_antieigenvalue(const SpectralData<Scalar>& spec) {
  const Scalar lo = spec.lambda_min();
  const Scalar hi = spec.lambda_max();
  return Scalar(2) * std::sqrt(lo * hi) / (lo + hi);
}

/// sin phi(A) = (lambda_n - lambda_1) / (lambda_n + lambda_1), the value of
/// min over eps > 0 of the spectral norm of (eps A - I).
template <typename Scalar>
Scalar sin_turning_angle(const SpectralData<Scalar>& spec) {
  const Scalar lo = spec.lambda_min();
  const Scalar hi = spec.lambda_max();
  return (hi - lo) / (hi + lo);
}

/// The eps attaining that minimum: eps_m = 2 / (lambda_1 + lambda_n).
template <typename Scalar>
Scalar optimal_epsilon(const SpectralData<Scalar>& spec) {
  return Scalar(2) / (spec.lambda_min() + spec.lambda_max());
}

/// Maximal turning angle phi(A) = arccos(mu1), in radians.
template <typename Scalar>
Scalar max_turning_angle(const SpectralData<Scalar>& spec) {
  return std::acos(std::min(first_antieigenvalue(spec), Scalar(1)));
}

template <typename Scalar>
bool is_degenerate(const SpectralData<Scalar>& spec, Scalar tol = Scalar(kDegenerateTol)) {
  return spec.lambda_max() - spec.lambda_min() <= tol * spec.lambda_max();
}

template <typename Scalar = double>
struct AntieigenvectorPair {
  DenseVector<Scalar> plus;
  DenseVector<Scalar> minus;
};

/// The two maximally turned unit vectors
///   x_{+-} = sqrt(lambda_n/(lambda_1+lambda_n)) x_1 +- sqrt(lambda_1/(lambda_1+lambda_n)) x_n
/// with x_1, x_n the extreme eigenvectors under the decomposition's sign
/// convention. Throws when the spectrum is a single point: every vector is
/// then left unturned and no extremal pair exists.
template <typename Scalar>
AntieigenvectorPair<Scalar> antieigenvectors(const SpectralData<Scalar>& spec,
                                             Scalar tol = Scalar(kDegenerateTol)) {
  if (is_degenerate(spec, tol))
    throw Error(Errc::degenerate_spectrum, "lambda_min == lambda_max: nothing is turned");
  const Scalar lo = spec.lambda_min();
  const Scalar hi = spec.lambda_max();
  const Scalar w1 = std::sqrt(hi / (lo + hi));
  const Scalar wn = std::sqrt(lo / (lo + hi));
  const auto x1 = spec.eigenvectors.col(0);
  const auto xn = spec.eigenvectors.col(spec.dim() - 1);
  return {w1 * x1 + wn * xn, w1 * x1 - wn * xn};
}

/// cos of the angle between x and Ax. Defined for any nonzero x; equals 1 on
/// eigenvectors and attains its minimum mu1 at the antieigenvectors.
template <typename Scalar, typename Derived>
Scalar turning_quotient(const Eigen::MatrixBase<Derived>& x, const SpdMatrix<Scalar>& a) {
  if (x.size() != a.dim()) throw Error(Errc::dimension_mismatch, "vector length != matrix dim");
  const DenseVector<Scalar> xv = x.template cast<Scalar>();
  const Scalar nx = xv.norm();
  if (nx == Scalar(0)) throw Error(Errc::zero_vector, "turning angle of the zero vector");
  const DenseVector<Scalar> ax = a.matrix() * xv;
  return std::clamp(xv.dot(ax) / (ax.norm() * nx), Scalar(-1), Scalar(1));
}

/// Angle between x and Ax in radians; in [0, pi/2) for SPD A. Computed as
/// atan2 of the orthogonal and parallel parts of Ax relative to x, which
/// stays accurate for tiny angles where acos of the quotient cannot resolve
/// below sqrt(machine epsilon).
template <typename Scalar, typename Derived>
Scalar turning_angle(const Eigen::MatrixBase<Derived>& x, const SpdMatrix<Scalar>& a) {
  if (x.size() != a.dim()) throw Error(Errc::dimension_mismatch, "vector length != matrix dim");
  DenseVector<Scalar> u = x.template cast<Scalar>();
  const Scalar nx = u.norm();
  if (nx == Scalar(0)) throw Error(Errc::zero_vector, "turning angle of the zero vector");
  u /= nx;
  const DenseVector<Scalar> au = a.matrix() * u;
  const Scalar parallel = u.dot(au);
  const Scalar orthogonal = (au - parallel * u).norm();
  return std::atan2(orthogonal, parallel);
}

template <typename Scalar = double>
struct PositivityCheck {
  bool holds;     // sin phi(B) <= cos phi(A)
  Scalar margin;  // cos phi(A) - sin phi(B)
};

/// Sufficient condition for the product BA to stay positive: the turning of B
/// fits inside the non-turned sector of A.
template <typename Scalar>
PositivityCheck<Scalar> product_positivity_sufficient(const SpdMatrix<Scalar>& a,
                                                      const SpdMatrix<Scalar>& b) {
  if (a.dim() != b.dim())
    throw Error(Errc::dimension_mismatch, "operands have different dimensions");
  const Scalar cos_a = first_antieigenvalue(spectral_decompose(a));
  const Scalar sin_b = sin_turning_angle(spectral_decompose(b));
  return {sin_b <= cos_a, cos_a - sin_b};
}

}  // namespace optrig
