#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "optrig/convex.hpp"
#include "optrig/errors.hpp"
#include "optrig/spd.hpp"
#include "optrig/spectral.hpp"
#include "optrig/trig.hpp"

namespace optrig::granular {

/// 2x2 symmetric stress tensor for a plane granular problem. Symmetric by
/// construction (one shear component); validated positive definite.
template <typename Scalar = double>
class StressTensor2 {
 public:
  StressTensor2(Scalar sxx, Scalar sxz, Scalar szz) : sxx_(sxx), sxz_(sxz), szz_(szz) {
    if (!(std::isfinite(sxx) && std::isfinite(sxz) && std::isfinite(szz)))
      throw Error(Errc::non_finite_entry, "stress component is not finite");
    if (!(sxx > Scalar(0)) || !(sxx * szz - sxz * sxz > Scalar(0)))
      throw Error(Errc::not_positive_definite, "stress tensor is not positive definite");
  }

  Scalar sxx() const { return sxx_; }
  Scalar sxz() const { return sxz_; }
  Scalar szz() const { return szz_; }

  Eigen::Matrix<Scalar, 2, 2> matrix() const {
    Eigen::Matrix<Scalar, 2, 2> m;
    m << sxx_, sxz_, sxz_, szz_;
    return m;
  }

  SpdMatrix<Scalar> spd() const { return SpdMatrix<Scalar>(matrix()); }

 private:
  Scalar sxx_, sxz_, szz_;
};

/// Principal stresses sigma1 >= sigma2 > 0 and the principal direction psi,
/// normalized to (-pi/2, pi/2].
template <typename Scalar = double>
struct PrincipalStress {
  Scalar psi;
  Scalar sigma1;
  Scalar sigma2;
};

/// Closed-form 2x2 symmetric eigendecomposition of the stress tensor.
template <typename Scalar>
PrincipalStress<Scalar> principal_decompose(const StressTensor2<Scalar>& s) {
  const Scalar mean = (s.sxx() + s.szz()) / Scalar(2);
  const Scalar half_diff = (s.sxx() - s.szz()) / Scalar(2);
  const Scalar radius = std::hypot(half_diff, s.sxz());
  PrincipalStress<Scalar> p;
  p.sigma1 = mean + radius;
  p.sigma2 = mean - radius;
  p.psi = radius == Scalar(0)
              ? Scalar(0)  // isotropic: direction is arbitrary, pick 0
              : std::atan2(s.sxz(), half_diff) / Scalar(2);
  if (!(p.sigma2 > Scalar(0)))
    throw Error(Errc::not_positive_definite, "principal stress sigma2 <= 0");
  return p;
}

/// Rebuilds the tensor as R(psi) diag(sigma1, sigma2) R(psi)^T.
template <typename Scalar>
StressTensor2<Scalar> compose_stress(const PrincipalStress<Scalar>& p) {
  if (!(p.sigma2 > Scalar(0)) || p.sigma1 < p.sigma2)
    throw Error(Errc::invalid_principal_stress, "need sigma1 >= sigma2 > 0");
  const Scalar c = std::cos(p.psi);
  const Scalar s = std::sin(p.psi);
  return StressTensor2<Scalar>(p.sigma1 * c * c + p.sigma2 * s * s,
                               (p.sigma1 - p.sigma2) * s * c,
                               p.sigma1 * s * s + p.sigma2 * c * c);
}

/// Repose/turning-angle analysis of one stress tensor. theta comes from the
/// stress ratio tau/sigma, phi from the operator turning angle of the tensor,
/// and convex_value from the direct norm minimization; the three agree.
template <typename Scalar = double>
struct ReposeReport {
  Scalar mean_stress;   // sigma = (sigma1 + sigma2) / 2
  Scalar deviator;      // tau = (sigma1 - sigma2) / 2
  Scalar theta;         // angle of repose, arcsin(tau/sigma), radians
  Scalar delta;         // internal friction angle; equals theta
  Scalar phi;           // operator turning angle of the tensor, radians
  Scalar convex_value;  // |eps_m Sigma - I| by direct search

  Scalar theta_degrees() const { return theta * Scalar(180) / std::numbers::pi_v<Scalar>; }
  Scalar phi_degrees() const { return phi * Scalar(180) / std::numbers::pi_v<Scalar>; }
};

template <typename Scalar>
ReposeReport<Scalar> repose_report(const StressTensor2<Scalar>& s,
                                   const ConvexOptions& convex_opts = {}) {
  const PrincipalStress<Scalar> p = principal_decompose(s);
  ReposeReport<Scalar> rep;
  rep.mean_stress = (p.sigma1 + p.sigma2) / Scalar(2);
  rep.deviator = (p.sigma1 - p.sigma2) / Scalar(2);
  rep.theta = std::asin(rep.deviator / rep.mean_stress);
  rep.delta = rep.theta;
  const SpdMatrix<Scalar> spd = s.spd();
  rep.phi = max_turning_angle(spectral_decompose(spd));
  rep.convex_value = sin_turning_convex(spd, convex_opts).value;
  return rep;
}

/// Stress components on a rectangular grid. Nodes are stored as raw
/// component triples: the free surface row is identically zero, which a
/// validated StressTensor2 cannot represent.
template <typename Scalar = double>
struct StressField {
  Eigen::Index nx = 0, nz = 0;
  Scalar dx = Scalar(0), dz = Scalar(0);
  Scalar rho = Scalar(0), g = Scalar(0);
  Scalar theta_slope = Scalar(0);
  DenseMatrix<Scalar> sxx, sxz, szz;  // (i, j) = (x index, z index), z downward

  StressTensor2<Scalar> tensor_at(Eigen::Index i, Eigen::Index j) const {
    return StressTensor2<Scalar>(sxx(i, j), sxz(i, j), szz(i, j));
  }
};

/// Builds the linear-in-depth stress state on an nx-by-nz grid:
///   sigma_xz = rho g z sin(theta), sigma_zz = rho g z cos(theta),
///   sigma_xx = K rho g z cos(theta),
/// with z measured downward from the stress-free surface at z = 0 and x along
/// the slope. K is the lateral stress ratio sigma_xx / sigma_zz. The field
/// satisfies the momentum balance identically and is positive definite below
/// the surface whenever tan(theta) < sqrt(K).
template <typename Scalar>
StressField<Scalar> linear_depth_field(Scalar theta_slope, Scalar rho, Scalar g, Scalar k_ratio,
                                       Scalar depth, Eigen::Index nx, Eigen::Index nz) {
  if (nx < 2 || nz < 2) throw Error(Errc::grid_too_small, "need nx, nz >= 2");
  if (!(depth > Scalar(0))) throw Error(Errc::bad_range, "depth must be positive");
  if (!(theta_slope >= Scalar(0)) || !(k_ratio > Scalar(0)) ||
      !(std::tan(theta_slope) < std::sqrt(k_ratio)))
    throw Error(Errc::unstable_parameters,
                "slope too steep: tan(theta) must stay below sqrt(K)");

  StressField<Scalar> f;
  f.nx = nx;
  f.nz = nz;
  f.dx = depth / static_cast<Scalar>(nx - 1);
  f.dz = depth / static_cast<Scalar>(nz - 1);
  f.rho = rho;
  f.g = g;
  f.theta_slope = theta_slope;
  f.sxx.resize(nx, nz);
  f.sxz.resize(nx, nz);
  f.szz.resize(nx, nz);
  const Scalar sin_t = std::sin(theta_slope);
  const Scalar cos_t = std::cos(theta_slope);
  for (Eigen::Index j = 0; j < nz; ++j) {
    const Scalar z = static_cast<Scalar>(j) * f.dz;
    const Scalar w = rho * g * z;
    for (Eigen::Index i = 0; i < nx; ++i) {
      f.sxz(i, j) = w * sin_t;
      f.szz(i, j) = w * cos_t;
      f.sxx(i, j) = k_ratio * w * cos_t;
    }
  }
  return f;
}

/// Residuals of the momentum balance
///   r1 = dx(sigma_xx) + dz(sigma_xz) - rho g sin(theta)
///   r2 = dx(sigma_xz) + dz(sigma_zz) - rho g cos(theta)
/// by central differences. Only interior nodes carry a residual; boundary
/// entries are left at zero and excluded from the aggregate norms.
template <typename Scalar = double>
struct EquilibriumResidual {
  DenseMatrix<Scalar> r1, r2;  // full grid; populated on the interior only
  Scalar max_norm = Scalar(0);
  Scalar rms = Scalar(0);
};

template <typename Scalar>
EquilibriumResidual<Scalar> equilibrium_residual(const StressField<Scalar>& f) {
  if (f.nx < 3 || f.nz < 3)
    throw Error(Errc::grid_too_small, "central differences need nx, nz >= 3");
  EquilibriumResidual<Scalar> res;
  res.r1 = DenseMatrix<Scalar>::Zero(f.nx, f.nz);
  res.r2 = DenseMatrix<Scalar>::Zero(f.nx, f.nz);
  const Scalar body_x = f.rho * f.g * std::sin(f.theta_slope);
  const Scalar body_z = f.rho * f.g * std::cos(f.theta_slope);
  Scalar sum_sq = Scalar(0);
  for (Eigen::Index i = 1; i + 1 < f.nx; ++i) {
    for (Eigen::Index j = 1; j + 1 < f.nz; ++j) {
      const Scalar dxx = (f.sxx(i + 1, j) - f.sxx(i - 1, j)) / (Scalar(2) * f.dx);
      const Scalar dxz_x = (f.sxz(i + 1, j) - f.sxz(i - 1, j)) / (Scalar(2) * f.dx);
      const Scalar dxz_z = (f.sxz(i, j + 1) - f.sxz(i, j - 1)) / (Scalar(2) * f.dz);
      const Scalar dzz = (f.szz(i, j + 1) - f.szz(i, j - 1)) / (Scalar(2) * f.dz);
      res.r1(i, j) = dxx + dxz_z - body_x;
      res.r2(i, j) = dxz_x + dzz - body_z;
      res.max_norm = std::max({res.max_norm, std::abs(res.r1(i, j)), std::abs(res.r2(i, j))});
      sum_sq += res.r1(i, j) * res.r1(i, j) + res.r2(i, j) * res.r2(i, j);
    }
  }
  const auto interior = static_cast<Scalar>((f.nx - 2) * (f.nz - 2));
  res.rms = std::sqrt(sum_sq / (Scalar(2) * interior));
  return res;
}

}  // namespace optrig::granular
