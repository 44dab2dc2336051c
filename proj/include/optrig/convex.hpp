#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "optrig/errors.hpp"
#include "optrig/spd.hpp"

namespace optrig {

enum class NormMethod {
  matrix_power,  // repeated squaring of (eps A - I)^T (eps A - I); default
  vector_power,  // classical single-vector power iteration
  svd,           // Eigen JacobiSVD, for diagnostics
};

struct ConvexOptions {
  double bracket_tol = 1e-12;  // relative width of the final golden-section interval
  NormMethod norm_method = NormMethod::matrix_power;
  int power_max_iter = 20000;  // vector_power only
  double power_tol = 1e-14;    // vector_power Rayleigh settling
};

template <typename Scalar = double>
struct ConvexResult {
  Scalar value;    // min over eps > 0 of |eps A - I|_2
  Scalar epsilon;  // argmin
  int evaluations = 0;
};

/// Spectral norm of a symmetric matrix B through powers of M = B^T B:
/// normalized repeated squaring gives (|M^(2^m)|_F)^(1/2^(m+1)), which
/// converges to |B|_2 with multiplicative error at most n^(1/2^(m+1))
/// regardless of how clustered the spectrum is. No eigensolver involved.
template <typename Scalar>
Scalar spectral_norm_squaring(const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> c = b.transpose() * b;
  Scalar f = c.norm();  // Frobenius
  if (f == Scalar(0)) return Scalar(0);
  c /= f;
  Scalar log_acc = std::log(f);
  Scalar weight = Scalar(0.5);
  for (int j = 0; j < 60; ++j) {
    c = (c * c).eval();
    f = c.norm();
    if (f == Scalar(0)) return Scalar(0);
    c /= f;
    log_acc += weight * std::log(f);
    weight /= Scalar(2);
  }
  return std::exp(log_acc / Scalar(2));
}

/// Classical power iteration on B^T B from a fixed pseudo-random start.
/// Accurate away from singular-value ties; kept for comparison against the
/// squaring engine.
template <typename Scalar>
Scalar spectral_norm_power(const DenseMatrix<Scalar>& b, int max_iter = 20000,
                           double tol = 1e-14) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> gauss;
  DenseVector<Scalar> v(b.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = static_cast<Scalar>(gauss(rng));
  v.normalize();

  Scalar sq = Scalar(0);
  int settled = 0;
  for (int k = 0; k < max_iter; ++k) {
    const DenseVector<Scalar> bv = b * v;
    const Scalar sq_next = bv.squaredNorm();  // v' B'B v with |v| = 1
    if (sq_next == Scalar(0)) return Scalar(0);
    const DenseVector<Scalar> w = b.transpose() * bv;
    v = w / w.norm();
    settled = std::abs(sq_next - sq) <= static_cast<Scalar>(tol) * sq_next ? settled + 1 : 0;
    sq = sq_next;
    if (settled >= 2) break;
  }
  return std::sqrt(sq);
}

namespace detail {

/// Golden-section minimization of a unimodal f over [a, b]. Stops when the
/// interval width falls below rel_tol relative to the current midpoint.
template <typename F, typename Scalar>
Scalar golden_section_min(F&& f, Scalar a, Scalar b, Scalar rel_tol, int& evaluations) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  Scalar c = b - (b - a) * Scalar(inv_phi);
  Scalar d = a + (b - a) * Scalar(inv_phi);
  Scalar fc = f(c);
  Scalar fd = f(d);
  evaluations += 2;
  while (b - a > rel_tol * std::max(std::abs(a + b) / Scalar(2),
                                    std::numeric_limits<Scalar>::min())) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * Scalar(inv_phi);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * Scalar(inv_phi);
      fd = f(d);
    }
    ++evaluations;
    if (c >= d) break;  // interval exhausted at floating-point resolution
  }
  return (a + b) / Scalar(2);
}

}  // namespace detail

/// Minimizes |eps A - I|_2 over eps > 0. The objective is convex in eps and
/// its minimizer lies in (0, 2/lambda_1], which brackets the golden-section
/// search; norm evaluations run through matrix powers, so no part of the
/// value flows through the closed-form expressions.
template <typename Scalar>
ConvexResult<Scalar> sin_turning_convex(const SpdMatrix<Scalar>& a,
                                        const ConvexOptions& opts = {}) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> es(a.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw Error(Errc::convergence_failure, "bracket eigenvalue computation failed");
  const Scalar lambda_min = es.eigenvalues()(0);

  const DenseMatrix<Scalar> identity = DenseMatrix<Scalar>::Identity(a.dim(), a.dim());
  ConvexResult<Scalar> out;
  auto objective = [&](Scalar eps) -> Scalar {
    const DenseMatrix<Scalar> b = eps * a.matrix() - identity;
    switch (opts.norm_method) {
      case NormMethod::vector_power:
        return spectral_norm_power<Scalar>(b, opts.power_max_iter, opts.power_tol);
      case NormMethod::svd: {
        Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(b);
        return svd.singularValues()(0);
      }
      case NormMethod::matrix_power:
      default:
        return spectral_norm_squaring<Scalar>(b);
    }
  };

  out.epsilon = detail::golden_section_min(objective, Scalar(0), Scalar(2) / lambda_min,
                                           static_cast<Scalar>(opts.bracket_tol),
                                           out.evaluations);
  out.value = objective(out.epsilon);
  ++out.evaluations;
  return out;
}

}  // namespace optrig
