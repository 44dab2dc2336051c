#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "optrig/errors.hpp"
#include "optrig/rational.hpp"
#include "optrig/spd.hpp"
#include "optrig/trig.hpp"

namespace optrig::pyth {

/// Generator pair for Euclid's formula: m > n >= 1, coprime, opposite parity.
struct TripleParams {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const TripleParams& x, const TripleParams& y) {
    return x.m == y.m && x.n == y.n;
  }
};

/// Primitive Pythagorean triple with the even leg first: a = 2mn, b = m²−n²,
/// c = m²+n².
struct PythTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const PythTriple& x, const PythTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// m² + n² must stay inside int64; this bound is sufficient and simple.
inline constexpr std::int64_t kMaxParam = (std::int64_t{1} << 31) - 1;

inline TripleParams validate_params(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(Errc::non_positive, "m and n must be positive");
  if (m <= n) throw Error(Errc::order_violation, "need m > n");
  if (std::gcd(m, n) != 1) throw Error(Errc::not_coprime, "m and n share a factor");
  if ((m - n) % 2 == 0) throw Error(Errc::same_parity, "m and n must have opposite parity");
  return TripleParams{m, n};
}

namespace detail {

inline void check_param_range(const TripleParams& p) {
  if (p.m > kMaxParam)
    throw Error(Errc::overflow, "m = " + std::to_string(p.m) + " exceeds the safe bound");
}

/// Exact integer square root, or -1 when v is not a perfect square.
inline std::int64_t isqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  // llround of the double sqrt can be off by one near perfect squares.
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace detail

inline PythTriple euclid_triple(const TripleParams& p) {
  detail::check_param_range(p);
  return PythTriple{2 * p.m * p.n, p.m * p.m - p.n * p.n, p.m * p.m + p.n * p.n};
}

/// Inverse of euclid_triple: recovers (m, n) from a primitive triple written
/// with the even leg first. Rejects anything outside that normal form.
inline TripleParams params_from_triple(const PythTriple& t) {
  if (t.a < 1 || t.b < 1 || t.c < 1)
    throw Error(Errc::not_representable, "triple sides must be positive");
  const __int128 lhs = static_cast<__int128>(t.a) * t.a + static_cast<__int128>(t.b) * t.b;
  if (lhs != static_cast<__int128>(t.c) * t.c)
    throw Error(Errc::not_representable, "a² + b² ≠ c²");
  if (std::gcd(t.a, t.b) != 1)
    throw Error(Errc::not_primitive, "gcd(a, b) = " + std::to_string(std::gcd(t.a, t.b)));
  if (t.a % 2 != 0)
    throw Error(Errc::not_representable, "even leg must come first (a = 2mn)");
  if ((t.c + t.b) % 2 != 0)
    throw Error(Errc::not_representable, "(c ± b)/2 not integral");
  const std::int64_t m = detail::isqrt_exact((t.c + t.b) / 2);
  const std::int64_t n = detail::isqrt_exact((t.c - t.b) / 2);
  if (m < 0 || n < 0 || 2 * m * n != t.a)
    throw Error(Errc::not_representable, "(c ± b)/2 are not perfect squares");
  return validate_params(m, n);
}

/// The Pythagorean triple matrix diag(n², m²): its turning angle has cosine
/// a/c and sine b/c.
inline SpdMatrix<double> pyth_matrix(const TripleParams& p) {
  detail::check_param_range(p);
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = static_cast<double>(p.n * p.n);
  d(1, 1) = static_cast<double>(p.m * p.m);
  return validate_spd(d);
}

/// Exact (cos φ, sin φ) = (2mn, m²−n²) / (m²+n²) = (a/c, b/c).
inline std::pair<Rational, Rational> pyth_trig(const TripleParams& p) {
  detail::check_param_range(p);
  const std::int64_t c = p.m * p.m + p.n * p.n;
  return {Rational(2 * p.m * p.n, c), Rational(p.m * p.m - p.n * p.n, c)};
}

/// Normalized antieigenvectors (m, ±n)/√(m²+n²) of the triple matrix.
inline AntieigenvectorPair<double> antieigenvectors(const TripleParams& p) {
  detail::check_param_range(p);
  const double norm = std::sqrt(static_cast<double>(p.m * p.m + p.n * p.n));
  AntieigenvectorPair<double> pair;
  pair.plus.resize(2);
  pair.minus.resize(2);
  pair.plus << static_cast<double>(p.m) / norm, static_cast<double>(p.n) / norm;
  pair.minus << static_cast<double>(p.m) / norm, -static_cast<double>(p.n) / norm;
  return pair;
}

/// Stereographic projection of the x-axis point (t, 0) onto the unit circle:
/// (2t, t²−1) / (t²+1). For t = m/n this lands exactly on (cos φ, sin φ).
inline std::pair<double, double> stereographic_point(double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw Error(Errc::non_positive_input, "need t > 0");
  const double d = t * t + 1;
  return {2 * t / d, (t * t - 1) / d};
}

/// Exact-rational overload.
inline std::pair<Rational, Rational> stereographic_point(const Rational& t) {
  if (t.num() <= 0) throw Error(Errc::non_positive_input, "need t > 0");
  const Rational one(1);
  const Rational d = t * t + one;
  return {(Rational(2) * t) / d, (t * t - one) / d};
}

/// All primitive triples with hypotenuse ≤ c_max, each exactly once, sorted
/// by (c, b). Scans valid generator pairs with m² + n² ≤ c_max.
inline std::vector<std::pair<TripleParams, PythTriple>> enumerate_primitive_triples(
    std::int64_t c_max) {
  std::vector<std::pair<TripleParams, PythTriple>> out;
  for (std::int64_t m = 2; m * m + 1 <= c_max && m <= kMaxParam; ++m) {
    for (std::int64_t n = 1; n < m && m * m + n * n <= c_max; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      const TripleParams p{m, n};
      out.emplace_back(p, euclid_triple(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second.c, x.second.b) < std::tie(y.second.c, y.second.b);
  });
  return out;
}

/// Everything the CLI reports about one generator pair.
struct PythReport {
  TripleParams params;
  PythTriple triple;
  Rational cos_phi, sin_phi;
  AntieigenvectorPair<double> antieigs;
  Rational stereo_x, stereo_y;
  Rational x_axis_point;  // the projected point (m/n, 0)
};

inline PythReport pyth_report(const TripleParams& p) {
  PythReport rep;
  rep.params = p;
  rep.triple = euclid_triple(p);
  std::tie(rep.cos_phi, rep.sin_phi) = pyth_trig(p);
  rep.antieigs = antieigenvectors(p);
  rep.x_axis_point = Rational(p.m, p.n);
  std::tie(rep.stereo_x, rep.stereo_y) = stereographic_point(rep.x_axis_point);
  return rep;
}

}  // namespace optrig::pyth
