#pragma once

#include <array>
#include <functional>

#include "ramanujan/common.hpp"

namespace ramanujan::series {

/// One term coefficient * exp(-rate * x) of a kernel expansion.
struct ExpansionTerm {
  std::array<unsigned, 2> index{};  ///< r, or (p, q)
  double coefficient = 0.0;
  double rate = 0.0;
};

/// 1/cosh(pi x) = sum_r 2 (-1)^r exp(-pi (1 + 2r) x).
ExpansionTerm cosh_expansion(unsigned r);

/// 1/(1 + 2 cosh(2 pi x / sqrt 3)) = sum_{p,q} (-1)^{p+q} C(p+q, p) exp(-2 pi (2q + p + 1) x / sqrt 3).
/// Binomial series of (1 + u)^-1 with u = e^-t + e^-2t; it converges only where
/// u < 1, i.e. x > 0.27.
ExpansionTerm triple_cosh_expansion(unsigned p, unsigned q);

/// 1/(exp(2 pi s) - 1) = sum_r exp(-2 pi (1 + r) s), s = sqrt(x).
ExpansionTerm bose_expansion(unsigned r);

/// Partial sum of an expansion at x (s for the Bose kernel) over the first
/// `terms` indices (diagonals p + q < terms for the double expansion).
double cosh_partial(double x, unsigned terms);
double triple_cosh_partial(double x, unsigned terms);
double bose_partial(double s, unsigned terms);

enum class Acceleration {
  none,
  /// Cohen-Villegas-Zagier weights for sum (-1)^k a_k with a_k moments of a
  /// positive measure on [0, L]; error <= 2 sum|a_k| / T_n(1 + 2/L) roughly.
  alternating,
  /// Richardson extrapolation of partial sums S_N, N = 8 * 2^j, assuming
  /// S_N - S has an expansion in powers of 1/N.
  richardson,
};

std::string_view to_string(Acceleration a);

struct SummationConfig {
  double tol = 1e-12;
  std::size_t max_terms = 1000000;
  Acceleration acceleration = Acceleration::none;
  double moment_interval = 1.0;  ///< L for the alternating transformation
};

/// Term k of a single series, with its sign.
using SingleTerm = std::function<double(std::size_t)>;
/// Term (p, q) of a double series, with its sign.
using DoubleTerm = std::function<double(unsigned, unsigned)>;

/// Sums term(0) + term(1) + ... .
/// none: stops after three consecutive terms below tol |partial|.
/// alternating / richardson: stops when two consecutive accelerated
/// estimates agree within tol |estimate|.
EvaluationResult sum_series(const SingleTerm& term, const SummationConfig& cfg);

/// Sums a double series diagonal by diagonal, d = p + q; the diagonal sums
/// then form a single series treated as in sum_series, except that the raw
/// rule stops after two consecutive diagonals below tol |partial|.
EvaluationResult sum_double_series(const DoubleTerm& term, const SummationConfig& cfg);

/// Weights of the alternating transformation of order n:
/// S_n = sum_{k<n} w_k t_k for signed terms t_k.
std::vector<double> alternating_weights(unsigned n, double moment_interval);

}  // namespace ramanujan::series
