#pragma once

#include <string_view>

#include "ramanujan/meijer_g.hpp"
#include "ramanujan/quadrature.hpp"

namespace ramanujan::laplace {

/// int_0^inf e^{-alpha x} k(x) dx for k = sin(beta x^2), cos(beta x^2),
/// x sin(beta x^2), x cos(beta x^2).
enum class Kernel { Sin, Cos, XSin, XCos };

std::string_view to_string(Kernel k);
/// Accepts sin, cos, xsin, xcos (case-insensitive).
Kernel parse_kernel(std::string_view name);

struct LaplaceRequest {
  Kernel kernel = Kernel::Sin;
  double alpha = 1.0;  ///< > 0
  double beta = 0.0;   ///< >= 0
};

/// value = numerator / alpha^alpha_power * G^{1,3}_{3,1}(64 beta^2 / alpha^4 | params).
struct KernelSpec {
  double numerator = 0.0;
  int alpha_power = 1;
  meijer::GParams131 params{};
  bool carries_x = false;
  bool is_sine = false;

  double prefactor(double alpha) const;
};

const KernelSpec& kernel_spec(Kernel k);

inline double g_argument(double alpha, double beta) {
  const double a2 = alpha * alpha;
  return 64.0 * beta * beta / (a2 * a2);
}

enum class Route { g_function, quadrature };

EvaluationResult laplace_eval(const LaplaceRequest& req, Route route = Route::g_function,
                              const meijer::GOptions& g_options = {});

}  // namespace ramanujan::laplace
