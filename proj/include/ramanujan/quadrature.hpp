#pragma once

#include <functional>

#include "ramanujan/common.hpp"

namespace ramanujan::quadrature {

/// Where the oscillating factor vanishes: phase(x) = shift + k pi with
/// phase = omega x^2 (quadratic) or omega x (linear).
struct Oscillation {
  enum class Kind { none, quadratic_phase, linear_phase };
  Kind kind = Kind::none;
  double omega = 0.0;
  double shift = 0.0;  ///< 0 for sin, pi/2 for cos
};

/// |f(x)| <= amplitude * x^power * exp(-rate * x)        (exp)
/// |f(x)| <= amplitude * x^power * exp(-rate * sqrt(x))  (exp_sqrt)
/// for every x >= valid_from.
struct Decay {
  enum class Kind { exp, exp_sqrt };
  Kind kind = Kind::exp;
  double rate = 1.0;
  double amplitude = 1.0;
  int power = 0;  ///< 0 or 1
  double valid_from = 0.0;
};

/// The descriptors only place panel breaks and the truncation point.
struct OscillatoryIntegrand {
  std::function<double(double)> f;
  Oscillation oscillation{};
  Decay decay{};
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;  ///< effective tolerance is max(abs_tol, rel_tol |value|)
  std::size_t max_panels = 2000000;
  bool extrapolate = false;  ///< Wynn epsilon on the panel partial sums
};

/// Integral of f over [0, inf): panels between consecutive zeros of the
/// oscillation, adaptive 20-point Gauss-Legendre per panel, compensated
/// summation in panel order, truncation once the envelope tail is below tol/10.
EvaluationResult integrate(const OscillatoryIntegrand& integrand, const QuadratureConfig& cfg = {});

/// Bound on the integral of the decay envelope over [x, inf).
double tail_bound(const Decay& decay, double x);

enum class Trig { sin, cos };

/// int_0^inf trig(pi b x) / (exp(2 pi sqrt(x)) - 1) dx in the x variable.
EvaluationResult integrate_bose_direct(double b, Trig kernel, const QuadratureConfig& cfg = {});

/// Same integral after x = t^2:
/// 2 int_0^inf t trig(pi b t^2) / (exp(2 pi t) - 1) dt.
EvaluationResult integrate_sqrt_substituted(double b, Trig kernel, const QuadratureConfig& cfg = {});

}  // namespace ramanujan::quadrature
