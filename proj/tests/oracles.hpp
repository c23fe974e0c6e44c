#pragma once
// Reference implementations used only by the tests. None of them share code
// with the library routes they check.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using C = std::complex<double>;

/// log Gamma by Stirling's series at z + shift, recurred down.
inline C log_gamma_stirling(C z, int shift = 20) {
  C w = z + static_cast<double>(shift);
  // B_{2k} / (2k (2k-1)) for k = 1..8
  static const double coef[] = {1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,
                                -1.0 / 1680.0,    1.0 / 1188.0,      -691.0 / 360360.0,
                                1.0 / 156.0,      -3617.0 / 122400.0};
  C series = 0.0;
  C wpow = w;
  const C w2 = w * w;
  for (double c : coef) {
    series += c / wpow;
    wpow *= w2;
  }
  C value = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * M_PI) + series;
  for (int k = 0; k < shift; ++k) value -= std::log(z + static_cast<double>(k));
  return value;
}

/// Composite Gauss-Legendre on [a, b] with `pieces` panels, 10 points each.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int pieces) {
  static const double x[] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                             0.8650633666889845, 0.9739065285171717};
  static const double w[] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                             0.1494513491505806, 0.0666713443086881};
  double total = 0.0;
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double c = a + (i + 0.5) * h;
    double s = 0.0;
    for (int j = 0; j < 5; ++j) s += w[j] * (f(c - 0.5 * h * x[j]) + f(c + 0.5 * h * x[j]));
    total += 0.5 * h * s;
  }
  return total;
}

/// tanh-sinh on (0, inf) via x = exp(pi/2 sinh t); step h, |t| <= tmax.
inline double exp_sinh(const std::function<double(double)>& f, double h = 1.0 / 64.0,
                       double tmax = 4.5) {
  double total = 0.0;
  for (double t = -tmax; t <= tmax; t += h) {
    const double x = std::exp(0.5 * M_PI * std::sinh(t));
    const double dx = x * 0.5 * M_PI * std::cosh(t);
    if (!std::isfinite(x) || !std::isfinite(dx)) continue;
    const double v = f(x);
    if (std::isfinite(v)) total += v * dx;
  }
  return total * h;
}

}  // namespace oracle
