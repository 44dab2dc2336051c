#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "optrig/pythagorean.hpp"
#include "optrig/spectral.hpp"
#include "optrig/trig.hpp"
#include "support/checks.hpp"

using optrig::Errc;
using optrig::pyth::PythTriple;
using optrig::pyth::Rational;
using optrig::pyth::TripleParams;
using optrig::pyth::enumerate_primitive_triples;
using optrig::pyth::euclid_triple;
using optrig::pyth::kMaxParam;
using optrig::pyth::params_from_triple;
using optrig::pyth::pyth_matrix;
using optrig::pyth::pyth_report;
using optrig::pyth::pyth_trig;
using optrig::pyth::validate_params;

TEST_SUITE("pythagorean") {
  TEST_CASE("rational normalization") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).num() == 3);
    CHECK(Rational(6, 4).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(5).den() == 1);
    CHECK(testgen::code_of([] { Rational(1, 0); }) == Errc::bad_range);
  }

  TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
    CHECK(Rational(1, 2) != Rational(1, 3));
    CHECK(testgen::code_of([] { Rational(1, 2) / Rational(0); }) == Errc::bad_range);
    CHECK(testgen::code_of([] { Rational(INT64_MAX) * Rational(2); }) == Errc::overflow);
    CHECK(testgen::code_of([] { Rational(INT64_MAX) + Rational(1); }) == Errc::overflow);
    // Reduction can rescue large intermediates.
    CHECK(Rational(INT64_MAX) * Rational(2, INT64_MAX) == Rational(2));
  }

  TEST_CASE("rational formatting and conversion") {
    CHECK(Rational(3, 4).to_double() == 0.75);
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-1, 2).str() == "-1/2");
  }

  TEST_CASE("parameter validation") {
    CHECK(validate_params(2, 1) == TripleParams{2, 1});
    CHECK(validate_params(8, 5) == TripleParams{8, 5});
    CHECK(testgen::code_of([] { validate_params(3, 1); }) == Errc::same_parity);
    CHECK(testgen::code_of([] { validate_params(5, 3); }) == Errc::same_parity);
    CHECK(testgen::code_of([] { validate_params(4, 2); }) == Errc::not_coprime);
    CHECK(testgen::code_of([] { validate_params(9, 3); }) == Errc::not_coprime);
    CHECK(testgen::code_of([] { validate_params(1, 2); }) == Errc::order_violation);
    CHECK(testgen::code_of([] { validate_params(3, 3); }) == Errc::order_violation);
    CHECK(testgen::code_of([] { validate_params(0, 1); }) == Errc::non_positive);
    CHECK(testgen::code_of([] { validate_params(2, -1); }) == Errc::non_positive);
  }

  TEST_CASE("euclid formula on hand examples") {
    CHECK(euclid_triple(validate_params(2, 1)) == PythTriple{4, 3, 5});
    CHECK(euclid_triple(validate_params(3, 2)) == PythTriple{12, 5, 13});
    CHECK(euclid_triple(validate_params(4, 1)) == PythTriple{8, 15, 17});
    CHECK(euclid_triple(validate_params(8, 5)) == PythTriple{80, 39, 89});
  }

  TEST_CASE("euclid formula range guard") {
    CHECK(testgen::code_of([] {
            euclid_triple(validate_params(std::int64_t{1} << 31, 1));
          }) == Errc::overflow);
    // The largest admissible m still fits.
    const auto t = euclid_triple(validate_params(kMaxParam, 2));
    CHECK(t.c > 0);
    const __int128 lhs =
        static_cast<__int128>(t.a) * t.a + static_cast<__int128>(t.b) * t.b;
    CHECK(lhs == static_cast<__int128>(t.c) * t.c);
  }

  TEST_CASE("parameter recovery from a triple") {
    CHECK(params_from_triple(PythTriple{4, 3, 5}) == TripleParams{2, 1});
    CHECK(params_from_triple(PythTriple{12, 5, 13}) == TripleParams{3, 2});
    CHECK(params_from_triple(PythTriple{8, 15, 17}) == TripleParams{4, 1});
    CHECK(params_from_triple(PythTriple{20, 21, 29}) == TripleParams{5, 2});
    CHECK(testgen::code_of([] { params_from_triple(PythTriple{6, 8, 10}); }) ==
          Errc::not_primitive);
    CHECK(testgen::code_of([] { params_from_triple(PythTriple{3, 4, 5}); }) ==
          Errc::not_representable);  // odd leg first is outside the normal form
    CHECK(testgen::code_of([] { params_from_triple(PythTriple{4, 5, 6}); }) ==
          Errc::not_representable);
    CHECK(testgen::code_of([] { params_from_triple(PythTriple{0, 3, 5}); }) ==
          Errc::not_representable);
    CHECK(testgen::code_of([] { params_from_triple(PythTriple{-4, 3, 5}); }) ==
          Errc::not_representable);
  }

  TEST_CASE("euclid and recovery are inverse over m <= 120") {
    int pairs = 0;
    for (std::int64_t m = 2; m <= 120; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
        const TripleParams p{m, n};
        CHECK(params_from_triple(euclid_triple(p)) == p);
        ++pairs;
      }
    }
    CHECK(pairs > 2000);
  }

  TEST_CASE("triple matrix is diag(n^2, m^2)") {
    const auto a = pyth_matrix(validate_params(2, 1));
    CHECK(a.matrix()(0, 0) == 1.0);
    CHECK(a.matrix()(1, 1) == 4.0);
    CHECK(a.matrix()(0, 1) == 0.0);
    const auto spec = optrig::spectral_decompose(a);
    CHECK(spec.lambda_min() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spec.lambda_max() == doctest::Approx(4.0).epsilon(1e-15));
  }

  TEST_CASE("exact trigonometry of the triple matrix") {
    const auto [cos_phi, sin_phi] = pyth_trig(validate_params(2, 1));
    CHECK(cos_phi == Rational(4, 5));
    CHECK(sin_phi == Rational(3, 5));
    const auto [cos_b, sin_b] = pyth_trig(validate_params(3, 2));
    CHECK(cos_b == Rational(12, 13));
    CHECK(sin_b == Rational(5, 13));
  }

  TEST_CASE("exact circle identity for every admissible pair up to m = 60") {
    for (std::int64_t m = 2; m <= 60; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
        const auto [c, s] = pyth_trig(TripleParams{m, n});
        CHECK(c * c + s * s == Rational(1));
        const auto t = euclid_triple(TripleParams{m, n});
        CHECK(c == Rational(t.a, t.c));
        CHECK(s == Rational(t.b, t.c));
      }
    }
  }

  TEST_CASE("exact trigonometry matches the floating-point core") {
    for (std::int64_t m = 2; m <= 30; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
        const TripleParams p{m, n};
        const auto spec = optrig::spectral_decompose(pyth_matrix(p));
        const auto [c, s] = pyth_trig(p);
        CHECK(std::abs(c.to_double() - optrig::first_antieigenvalue(spec)) <= 1e-14);
        CHECK(std::abs(s.to_double() - optrig::sin_turning_angle(spec)) <= 1e-14);
      }
    }
  }

  TEST_CASE("antieigenvectors of the triple matrix") {
    const auto pair = optrig::pyth::antieigenvectors(validate_params(2, 1));
    const double inv = 1.0 / std::sqrt(5.0);
    CHECK(pair.plus(0) == doctest::Approx(2.0 * inv).epsilon(1e-15));
    CHECK(pair.plus(1) == doctest::Approx(inv).epsilon(1e-15));
    CHECK(pair.minus(0) == doctest::Approx(2.0 * inv).epsilon(1e-15));
    CHECK(pair.minus(1) == doctest::Approx(-inv).epsilon(1e-15));
    CHECK(pair.plus.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pair.minus.norm() == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("triple antieigenvectors agree with the core and attain the angle") {
    for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 1}, {3, 2}, {4, 1}, {7, 4}, {9, 2}}) {
      const TripleParams p{m, n};
      const auto a = pyth_matrix(p);
      const auto ours = optrig::pyth::antieigenvectors(p);
      const auto core = optrig::antieigenvectors(optrig::spectral_decompose(a));
      CHECK((ours.plus - core.plus).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK((ours.minus - core.minus).cwiseAbs().maxCoeff() <= 1e-14);
      const auto [c, s] = pyth_trig(p);
      CHECK(std::abs(optrig::turning_quotient(ours.plus, a) - c.to_double()) <= 1e-14);
      CHECK(std::abs(optrig::turning_angle(ours.plus, a) -
                     optrig::max_turning_angle(optrig::spectral_decompose(a))) <= 1e-10);
    }
  }

  TEST_CASE("stereographic projection in floating point") {
    const auto [x1, y1] = optrig::pyth::stereographic_point(1.0);
    CHECK(x1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(y1 == doctest::Approx(0.0).epsilon(1e-15));
    const auto [x2, y2] = optrig::pyth::stereographic_point(2.0);
    CHECK(x2 == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(y2 == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(testgen::code_of([] { optrig::pyth::stereographic_point(0.0); }) ==
          Errc::non_positive_input);
    CHECK(testgen::code_of([] { optrig::pyth::stereographic_point(-3.0); }) ==
          Errc::non_positive_input);
    CHECK(testgen::code_of([] { optrig::pyth::stereographic_point(std::nan("")); }) ==
          Errc::non_positive_input);
    CHECK(testgen::code_of([] {
            optrig::pyth::stereographic_point(std::numeric_limits<double>::infinity());
          }) == Errc::non_positive_input);
  }

  TEST_CASE("stereographic projection in exact arithmetic") {
    const auto [x, y] = optrig::pyth::stereographic_point(Rational(3, 2));
    CHECK(x == Rational(12, 13));
    CHECK(y == Rational(5, 13));
    const auto [xu, yu] = optrig::pyth::stereographic_point(Rational(1));
    CHECK(xu == Rational(1));
    CHECK(yu == Rational(0));
    CHECK(testgen::code_of([] { optrig::pyth::stereographic_point(Rational(0)); }) ==
          Errc::non_positive_input);
    CHECK(testgen::code_of([] { optrig::pyth::stereographic_point(Rational(-2, 3)); }) ==
          Errc::non_positive_input);
  }

  TEST_CASE("stereographic image of m/n lands exactly on (cos, sin)") {
    for (std::int64_t m = 2; m <= 40; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
        const auto [px, py] = optrig::pyth::stereographic_point(Rational(m, n));
        const auto [c, s] = pyth_trig(TripleParams{m, n});
        CHECK(px == c);
        CHECK(py == s);
        CHECK(px * px + py * py == Rational(1));
      }
    }
  }

  TEST_CASE("enumeration matches hand lists") {
    const auto small = enumerate_primitive_triples(13);
    REQUIRE(small.size() == 2);
    CHECK(small[0].second == PythTriple{4, 3, 5});
    CHECK(small[1].second == PythTriple{12, 5, 13});
    CHECK(small[0].first == TripleParams{2, 1});

    const auto up_to_30 = enumerate_primitive_triples(30);
    REQUIRE(up_to_30.size() == 5);
    CHECK(up_to_30[2].second == PythTriple{8, 15, 17});
    CHECK(up_to_30[3].second == PythTriple{24, 7, 25});
    CHECK(up_to_30[4].second == PythTriple{20, 21, 29});

    CHECK(enumerate_primitive_triples(4).empty());
    CHECK(enumerate_primitive_triples(5).size() == 1);
  }

  TEST_CASE("enumeration agrees with a brute-force scan") {
    constexpr std::int64_t c_max = 200;
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> brute;
    for (std::int64_t a = 1; a <= c_max; ++a)
      for (std::int64_t b = a + 1; b <= c_max; ++b) {
        const std::int64_t ss = a * a + b * b;  // < 2^53, so sqrt is exact
        const auto c = static_cast<std::int64_t>(std::llround(std::sqrt(double(ss))));
        if (c * c != ss || c > c_max) continue;
        if (std::gcd(a, b) != 1) continue;
        brute.emplace(a, b, c);
      }

    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> ours;
    const auto list = enumerate_primitive_triples(c_max);
    for (const auto& [p, t] : list)
      ours.emplace(std::min(t.a, t.b), std::max(t.a, t.b), t.c);
    CHECK(ours.size() == list.size());  // no duplicates
    CHECK(ours == brute);
  }

  TEST_CASE("enumeration is sorted by hypotenuse then odd leg") {
    const auto list = enumerate_primitive_triples(300);
    for (std::size_t i = 1; i < list.size(); ++i) {
      const auto& prev = list[i - 1].second;
      const auto& cur = list[i].second;
      CHECK(std::tie(prev.c, prev.b) < std::tie(cur.c, cur.b));
    }
  }

  TEST_CASE("full report ties every representation together") {
    const auto rep = pyth_report(validate_params(2, 1));
    CHECK(rep.triple == PythTriple{4, 3, 5});
    CHECK(rep.cos_phi == Rational(4, 5));
    CHECK(rep.sin_phi == Rational(3, 5));
    CHECK(rep.x_axis_point == Rational(2));
    CHECK(rep.stereo_x == rep.cos_phi);
    CHECK(rep.stereo_y == rep.sin_phi);

    for (std::int64_t m = 2; m <= 40; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
        const auto r = pyth_report(TripleParams{m, n});
        CHECK(r.stereo_x == r.cos_phi);
        CHECK(r.stereo_y == r.sin_phi);
      }
    }
  }
}
