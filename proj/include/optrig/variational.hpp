#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "optrig/errors.hpp"
#include "optrig/spd.hpp"

namespace optrig {

struct VariationalOptions {
  int restarts = 8;
  std::uint64_t seed = 0;
  double grad_tol = 1e-7;  // sphere-tangent gradient norm at convergence
  int max_iter = 5000;     // per restart
};

template <typename Scalar = double>
struct VariationalResult {
  Scalar value;                    // min of <Ax,x>/(|Ax||x|) over the sphere
  DenseVector<Scalar> minimizer;   // unit norm
  int converged_restarts = 0;
  int iterations = 0;              // total across restarts
};

/// Euclidean gradient of f(x) = <Ax,x>/(|Ax||x|) at any nonzero x. The
/// quotient is 0-homogeneous, so the gradient is automatically tangent to the
/// sphere through x (x . grad f = 0).
template <typename Scalar>
DenseVector<Scalar> turning_quotient_gradient(const SpdMatrix<Scalar>& a,
                                              const DenseVector<Scalar>& x) {
  const Scalar nx = x.norm();
  if (nx == Scalar(0)) throw Error(Errc::zero_vector, "gradient at the zero vector");
  const DenseVector<Scalar> ax = a.matrix() * x;
  const Scalar nax = ax.norm();
  const Scalar xax = x.dot(ax);
  const Scalar h = nax * nx;
  return (Scalar(2) / h) * ax - (xax / (h * nax * nax)) * (a.matrix() * ax) -
         (xax / (h * nx * nx)) * x;
}

namespace detail {

template <typename Scalar>
Scalar sphere_quotient(const SpdMatrix<Scalar>& a, const DenseVector<Scalar>& x) {
  const DenseVector<Scalar> ax = a.matrix() * x;
  return x.dot(ax) / (ax.norm() * x.norm());
}

/// One projected-gradient descent run from a given unit start. Steps are
/// x <- normalize(x - alpha g) with a Barzilai-Borwein initial alpha and
/// Armijo backtracking. Returns true when the tangent gradient dropped below
/// grad_tol within the iteration budget.
template <typename Scalar>
bool descend_on_sphere(const SpdMatrix<Scalar>& a, DenseVector<Scalar>& x, Scalar& fx,
                       const VariationalOptions& opts, int& iters_used) {
  const Scalar armijo_c = Scalar(1e-4);
  DenseVector<Scalar> g = turning_quotient_gradient(a, x);
  g -= g.dot(x) * x;  // re-project against rounding drift
  fx = sphere_quotient(a, x);
  Scalar alpha = Scalar(1);

  for (int k = 0; k < opts.max_iter; ++k) {
    const Scalar gnorm = g.norm();
    if (gnorm <= static_cast<Scalar>(opts.grad_tol)) {
      iters_used += k;
      return true;
    }
    Scalar step = alpha;
    DenseVector<Scalar> xn;
    Scalar fn = fx;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      xn = (x - step * g).normalized();
      fn = sphere_quotient(a, xn);
      if (fn <= fx - armijo_c * step * gnorm * gnorm) {
        moved = true;
        break;
      }
      step *= Scalar(0.5);
    }
    if (!moved) {
      // Line search stalled at floating-point resolution; gradient is still
      // above tolerance or the loop head would have returned.
      iters_used += k;
      return false;
    }
    DenseVector<Scalar> gn = turning_quotient_gradient(a, xn);
    gn -= gn.dot(xn) * xn;
    const DenseVector<Scalar> s = xn - x;
    const DenseVector<Scalar> y = gn - g;
    const Scalar sy = std::abs(s.dot(y));
    alpha = sy > Scalar(0) ? std::clamp(s.squaredNorm() / sy, Scalar(1e-12), Scalar(1e8))
                           : Scalar(1);
    x = std::move(xn);
    g = std::move(gn);
    fx = fn;
  }
  iters_used += opts.max_iter;
  return false;
}

}  // namespace detail

/// Direct minimization of <Ax,x>/(|Ax||x|) over the unit sphere by
/// multi-start projected-gradient descent. Independent of the spectral
/// closed form; the two are cross-checked in the test suites.
template <typename Scalar>
VariationalResult<Scalar> antieigenvalue_variational(const SpdMatrix<Scalar>& a,
                                                     const VariationalOptions& opts = {}) {
  const Eigen::Index n = a.dim();
  VariationalResult<Scalar> best;
  best.value = std::numeric_limits<Scalar>::infinity();

  for (int r = 0; r < std::max(opts.restarts, 1); ++r) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> gauss;
    DenseVector<Scalar> x(n);
    do {
      for (Eigen::Index i = 0; i < n; ++i) x(i) = static_cast<Scalar>(gauss(rng));
    } while (x.norm() == Scalar(0));
    x.normalize();

    Scalar fx;
    const bool ok = detail::descend_on_sphere(a, x, fx, opts, best.iterations);
    if (ok) ++best.converged_restarts;
    if (ok && fx < best.value) {
      best.value = fx;
      best.minimizer = x;
    }
  }
  if (best.converged_restarts == 0)
    throw Error(Errc::convergence_failure, "no descent restart reached the gradient tolerance");
  return best;
}

}  // namespace optrig
