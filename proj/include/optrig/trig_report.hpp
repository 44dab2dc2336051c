#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "optrig/convex.hpp"
#include "optrig/spd.hpp"
#include "optrig/spectral.hpp"
#include "optrig/trig.hpp"
#include "optrig/variational.hpp"

namespace optrig {

/// Method provenance tags attached to reported fields.
namespace method {
inline constexpr const char* closed_form = "closed-form";
inline constexpr const char* variational = "variational";
inline constexpr const char* convex_search = "convex-search";
}  // namespace method

/// Everything the operator trigonometry of one SPD matrix yields: the closed
/// forms, the turning angle, the antieigenvector pair, and the two direct
/// numerical routes run as a cross-check.
template <typename Scalar = double>
struct TrigReport {
  // closed-form path
  Scalar mu1;          // cos phi(A)
  Scalar nu1;          // sin phi(A)
  Scalar phi;          // radians
  Scalar epsilon_min;  // argmin of |eps A - I|
  Scalar identity_residual;  // |mu1^2 + nu1^2 - 1|
  bool degenerate;           // lambda_min == lambda_max within tolerance
  std::optional<AntieigenvectorPair<Scalar>> antieigs;  // absent when degenerate

  // direct numerical path
  Scalar mu1_variational;
  DenseVector<Scalar> variational_minimizer;
  Scalar nu1_convex;
  Scalar epsilon_argmin;

  Scalar phi_degrees() const { return phi * Scalar(180) / std::numbers::pi_v<Scalar>; }
};

struct TrigReportOptions {
  VariationalOptions variational{};
  ConvexOptions convex{};
  double degenerate_tol = kDegenerateTol;
};

/// Runs both computation paths on one matrix. A single-point spectrum is not
/// an error here: mu1 = 1, nu1 = 0, phi = 0 and the antieigenvector pair is
/// flagged degenerate.
template <typename Scalar>
TrigReport<Scalar> trig_report(const SpdMatrix<Scalar>& a, const TrigReportOptions& opts = {}) {
  const SpectralData<Scalar> spec = spectral_decompose(a);
  TrigReport<Scalar> rep;
  rep.degenerate = is_degenerate(spec, static_cast<Scalar>(opts.degenerate_tol));
  rep.mu1 = first_antieigenvalue(spec);
  rep.nu1 = sin_turning_angle(spec);
  rep.phi = max_turning_angle(spec);
  rep.epsilon_min = optimal_epsilon(spec);
  rep.identity_residual = std::abs(rep.mu1 * rep.mu1 + rep.nu1 * rep.nu1 - Scalar(1));
  if (rep.degenerate) {
    rep.mu1 = Scalar(1);
    rep.nu1 = Scalar(0);
    rep.phi = Scalar(0);
    rep.identity_residual = Scalar(0);
  } else {
    rep.antieigs = antieigenvectors(spec, static_cast<Scalar>(opts.degenerate_tol));
  }

  const VariationalResult<Scalar> var = antieigenvalue_variational(a, opts.variational);
  rep.mu1_variational = var.value;
  rep.variational_minimizer = var.minimizer;
  const ConvexResult<Scalar> convex = sin_turning_convex(a, opts.convex);
  rep.nu1_convex = convex.value;
  rep.epsilon_argmin = convex.epsilon;
  return rep;
}

}  // namespace optrig
