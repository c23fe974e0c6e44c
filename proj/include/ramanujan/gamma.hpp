#pragma once

#include "ramanujan/common.hpp"

namespace ramanujan::gamma {

/// Distance below which an argument is treated as sitting on a pole.
inline constexpr double kPoleTolerance = 1e-14;

/// Principal branch of log Gamma(z): analytic on C minus (-inf, 0], real on
/// the positive axis, log_gamma(conj z) == conj(log_gamma(z)).
///
/// Lanczos sum (g = 671/128, 15 terms) for re(z) >= 1/2, reflection below.
/// On the negative real axis the value is the limit from the upper half plane.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, unsigned k);

struct PochhammerTerm {
  double base = 0.0;
  unsigned index = 0;
  double value = 1.0;
};

PochhammerTerm pochhammer_term(double a, unsigned k);

/// (1)_k / (2)_k, evaluated as 1/(k+1) so it never overflows.
inline double unit_pochhammer_ratio(unsigned k) { return 1.0 / (static_cast<double>(k) + 1.0); }

/// Right-hand side of the Gauss-Legendre multiplication formula:
/// (2 pi)^((1-m)/2) m^(m z - 1/2) prod_{j=1..m} Gamma(z + (j-1)/m).
Complex multiplication_rhs(Complex z, unsigned m);

/// Gamma(z) / S^z, the Laplace transform of t^(z-1) at S. Requires S > 0, z > 0.
double laplace_power_check(double z, double s);

}  // namespace ramanujan::gamma
