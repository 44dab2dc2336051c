#pragma once

#include <Eigen/Dense>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "optrig/errors.hpp"
#include "optrig/spd.hpp"
#include "optrig/spectral.hpp"
#include "optrig/trig.hpp"

namespace optrig::finance {

/// Ordered per-period returns with opaque period labels. Returns are simple
/// per-period fractions (0.05 = 5%), not log returns.
struct ReturnSeries {
  std::vector<std::string> labels;
  std::vector<double> returns;

  std::size_t size() const { return returns.size(); }
};

enum class ReturnsFormat {
  plain,        // one return per line
  labeled_csv,  // label,value per line
};

enum class SigmaConvention { sample, population };

inline const char* to_string(SigmaConvention c) {
  return c == SigmaConvention::sample ? "sample" : "population";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_return(std::string_view token, std::size_t line_no) {
  token = trim(token);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end() || !std::isfinite(value))
    throw Error(Errc::parse_error,
                "row " + std::to_string(line_no) + ": not a finite number: '" +
                    std::string(token) + "'");
  return value;
}

}  // namespace detail

/// Parses a return series from text. '#' starts a comment; blank lines are
/// skipped. Parse failures report the 1-based line number.
inline ReturnSeries ingest_returns(std::istream& in, ReturnsFormat format) {
  ReturnSeries series;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (const auto hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);
    body = detail::trim(body);
    if (body.empty()) continue;
    if (format == ReturnsFormat::plain) {
      series.returns.push_back(detail::parse_return(body, line_no));
      series.labels.push_back(std::to_string(series.returns.size()));
    } else {
      const auto comma = body.find(',');
      if (comma == std::string_view::npos)
        throw Error(Errc::parse_error,
                    "row " + std::to_string(line_no) + ": expected 'label,value'");
      series.labels.emplace_back(detail::trim(body.substr(0, comma)));
      series.returns.push_back(detail::parse_return(body.substr(comma + 1), line_no));
    }
  }
  if (series.returns.empty()) throw Error(Errc::empty_series, "no data rows");
  return series;
}

/// Standard deviation of the series under the chosen convention.
inline double stddev(const std::vector<double>& values, SigmaConvention conv) {
  if (values.size() < 2) throw Error(Errc::series_too_short, "need at least 2 returns");
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double sum_sq = 0;
  for (double v : values) sum_sq += (v - mean) * (v - mean);
  const auto denom = static_cast<double>(conv == SigmaConvention::sample ? values.size() - 1
                                                                         : values.size());
  return std::sqrt(sum_sq / denom);
}

/// Sharpe ratio (mean(r) - rf) / sigma(r).
inline double sharpe_ratio(const ReturnSeries& series, double rf,
                           SigmaConvention conv = SigmaConvention::sample) {
  const double sigma = stddev(series.returns, conv);
  double mean = 0;
  for (double v : series.returns) mean += v;
  mean /= static_cast<double>(series.size());
  double scale = 0;
  for (double v : series.returns) scale = std::max(scale, std::abs(v));
  if (sigma <= 1e-12 * std::max(scale, 1e-300))
    throw Error(Errc::zero_volatility, "returns have zero standard deviation");
  return (mean - rf) / sigma;
}

/// Ratio of geometric to arithmetic mean, 2 sqrt(r1 r2) / (r1 + r2). This is
/// exactly the first antieigenvalue of diag(r1, r2); the standard deviation
/// cancels between the two Sharpe ratios.
inline double gm_am_ratio(double r1, double r2) {
  if (!(r1 > 0) || !(r2 > 0))
    throw Error(Errc::non_positive_return, "geometric mean needs positive returns");
  return 2 * std::sqrt(r1 * r2) / (r1 + r2);
}

/// Two-period Sharpe analytics: arithmetic and geometric ratios over net
/// returns r' = r - rf, their quotient G, and G recomputed as the first
/// antieigenvalue of diag(r1', r2') through the spectral path.
struct SharpeReport {
  double r1, r2;
  SigmaConvention sigma_convention;
  double sigma;
  double s_am;  // (r1' + r2') / (2 sigma)
  double s_gm;  // sqrt(r1' r2') / sigma
  double g_ratio;
  double mu1_crosscheck;
  double rf;
};

inline SharpeReport two_period_report(double r1, double r2, double rf = 0,
                                      SigmaConvention conv = SigmaConvention::population) {
  const double n1 = r1 - rf;
  const double n2 = r2 - rf;
  if (!(n1 > 0) || !(n2 > 0))
    throw Error(Errc::non_positive_return, "net returns must be positive");
  // sigma of {r1, r2} equals sigma of the net returns; the rf shift cancels.
  const double spread = std::abs(r1 - r2);
  if (spread == 0) throw Error(Errc::zero_volatility, "r1 == r2: zero deviation");
  SharpeReport rep;
  rep.r1 = r1;
  rep.r2 = r2;
  rep.rf = rf;
  rep.sigma_convention = conv;
  rep.sigma = conv == SigmaConvention::sample ? spread / std::sqrt(2.0) : spread / 2;
  rep.s_am = (n1 + n2) / (2 * rep.sigma);
  rep.s_gm = std::sqrt(n1 * n2) / rep.sigma;
  rep.g_ratio = rep.s_gm / rep.s_am;

  Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
  diag(0, 0) = n1;
  diag(1, 1) = n2;
  rep.mu1_crosscheck = first_antieigenvalue(spectral_decompose(validate_spd(diag)));
  return rep;
}

/// G over each consecutive pair of the series. A pair with a non-positive
/// net return is marked skipped instead of failing the whole scan.
struct RollingEntry {
  std::string label_first, label_second;
  bool skipped;
  double g;  // meaningful only when !skipped
};

inline std::vector<RollingEntry> rolling_gm_am(const ReturnSeries& series, double rf = 0) {
  if (series.size() < 2) throw Error(Errc::series_too_short, "need at least 2 returns");
  std::vector<RollingEntry> out;
  out.reserve(series.size() - 1);
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    RollingEntry e{series.labels[i], series.labels[i + 1], false, 0.0};
    const double n1 = series.returns[i] - rf;
    const double n2 = series.returns[i + 1] - rf;
    if (n1 > 0 && n2 > 0) {
      e.g = gm_am_ratio(n1, n2);
    } else {
      e.skipped = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace optrig::finance
