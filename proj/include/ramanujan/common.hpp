#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramanujan {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double kSqrt3 = 1.732050807568877293527446341505872367;
inline constexpr double kEps = 2.220446049250313080847263336181640625e-16;

/// How a value was produced.
enum class Method {
  contour,         ///< Mellin-Barnes line integral
  residue_series,  ///< sum of residues of the flipped G-function
  limit,           ///< analytic limit or small-argument expansion
  quadrature,      ///< direct real-line integration
  series,          ///< term-by-term series of G-function values
  closed_form,
};

std::string_view to_string(Method m);

struct WorkCounters {
  std::size_t panels = 0;       ///< quadrature panels / contour subintervals
  std::size_t terms = 0;        ///< series terms consumed
  std::size_t evaluations = 0;  ///< integrand or G-function evaluations
};

/// Value plus an error estimate and an honest record of how it was computed.
struct EvaluationResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  Method method = Method::closed_form;
  WorkCounters work{};
  /// Imaginary part left over by a contour evaluation (0 unless computed).
  double imag_residue = 0.0;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Errors. Every public operation reports failure by throwing one of these.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleAtNonPositiveInteger : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowToInfinity : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

class CoincidentPoles : public InvalidParameters {
 public:
  using InvalidParameters::InvalidParameters;
};

class MethodDisagreement : public Error {
 public:
  MethodDisagreement(const std::string& what, EvaluationResult first,
                     EvaluationResult second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}
  const EvaluationResult& first() const noexcept { return first_; }
  const EvaluationResult& second() const noexcept { return second_; }

 private:
  EvaluationResult first_;
  EvaluationResult second_;
};

/// Iteration cap hit before the requested tolerance; carries the best value.
class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(const std::string& what, EvaluationResult best)
      : Error(what), best_(std::move(best)) {}
  const EvaluationResult& best() const noexcept { return best_; }

 private:
  EvaluationResult best_;
};

inline constexpr std::string_view kCancellationWarning = "CancellationWarning";

}  // namespace ramanujan
