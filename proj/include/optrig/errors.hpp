#pragma once

#include <stdexcept>
#include <string>

namespace optrig {

/// Failure conditions reported by the library. Everything except
/// `convergence_failure` is an input/validation problem.
enum class Errc {
  // matrix validation
  not_square,
  not_symmetric,
  not_positive_definite,
  non_finite_entry,
  dimension_mismatch,
  // spectral / optimization
  convergence_failure,
  degenerate_spectrum,
  zero_vector,
  // stress analysis
  invalid_principal_stress,
  unstable_parameters,
  grid_too_small,
  // return-series analytics
  parse_error,
  empty_series,
  zero_volatility,
  series_too_short,
  non_positive_return,
  // triple parameters
  order_violation,
  not_coprime,
  same_parity,
  non_positive,
  non_positive_input,
  overflow,
  not_primitive,
  not_representable,
  // i/o and reporting
  io_error,
  format_error,
  bad_range,
  empty_input,
};

constexpr const char* to_string(Errc c) {
  switch (c) {
    case Errc::not_square: return "NotSquare";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::non_finite_entry: return "NonFiniteEntry";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::convergence_failure: return "ConvergenceFailure";
    case Errc::degenerate_spectrum: return "DegenerateSpectrum";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::invalid_principal_stress: return "InvalidPrincipalStress";
    case Errc::unstable_parameters: return "UnstableParameters";
    case Errc::grid_too_small: return "GridTooSmall";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_series: return "EmptySeries";
    case Errc::zero_volatility: return "ZeroVolatility";
    case Errc::series_too_short: return "SeriesTooShort";
    case Errc::non_positive_return: return "NonPositiveReturn";
    case Errc::order_violation: return "OrderViolation";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::same_parity: return "SameParity";
    case Errc::non_positive: return "NonPositive";
    case Errc::non_positive_input: return "NonPositiveInput";
    case Errc::overflow: return "Overflow";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::not_representable: return "NotRepresentable";
    case Errc::io_error: return "IoError";
    case Errc::format_error: return "FormatError";
    case Errc::bad_range: return "BadRange";
    case Errc::empty_input: return "EmptyInput";
  }
  return "UnknownError";
}

/// True for failures of the numerical machinery itself, as opposed to bad
/// inputs. The CLI maps these to a distinct exit code.
constexpr bool is_numerical(Errc c) { return c == Errc::convergence_failure; }

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace optrig
