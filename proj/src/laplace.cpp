#include "ramanujan/laplace.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

namespace ramanujan::laplace {

namespace {

const std::array<KernelSpec, 4> kSpecs = {{
    {1.0 / (kPi * kSqrt2), 1, meijer::kernel_params::sine, false, true},
    {1.0 / (kPi * kSqrt2), 1, meijer::kernel_params::cosine, false, false},
    {2.0 * kSqrt2 / kPi, 2, meijer::kernel_params::x_sine, true, true},
    {2.0 * kSqrt2 / kPi, 2, meijer::kernel_params::x_cosine, true, false},
}};

void validate(const LaplaceRequest& req) {
  if (!(req.alpha > 0.0) || !std::isfinite(req.alpha)) {
    throw DomainError("laplace: alpha must be a positive real");
  }
  if (!(req.beta >= 0.0) || !std::isfinite(req.beta)) {
    throw DomainError("laplace: beta must be a non-negative real");
  }
}

// beta = 0: int e^{-alpha x} x^p dx, or zero for the sine kernels.
EvaluationResult zero_frequency(const KernelSpec& spec, double alpha) {
  EvaluationResult out;
  out.method = Method::limit;
  if (!spec.is_sine) out.value = spec.carries_x ? 1.0 / (alpha * alpha) : 1.0 / alpha;
  return out;
}

EvaluationResult by_quadrature(const KernelSpec& spec, const LaplaceRequest& req) {
  quadrature::OscillatoryIntegrand in;
  const double a = req.alpha;
  const double b = req.beta;
  const bool sine = spec.is_sine;
  const bool with_x = spec.carries_x;
  in.f = [a, b, sine, with_x](double x) {
    const double phase = b * x * x;
    const double trig = sine ? std::sin(phase) : std::cos(phase);
    return std::exp(-a * x) * (with_x ? x : 1.0) * trig;
  };
  in.oscillation = {quadrature::Oscillation::Kind::quadratic_phase, b, sine ? 0.0 : kPi / 2.0};
  in.decay = {quadrature::Decay::Kind::exp, a, 1.0, with_x ? 1 : 0, 0.0};
  quadrature::QuadratureConfig cfg;
  cfg.abs_tol = 1e-13 * std::pow(a, -(with_x ? 2.0 : 1.0));
  cfg.rel_tol = 1e-12;
  return quadrature::integrate(in, cfg);
}

}  // namespace

std::string_view to_string(Kernel k) {
  switch (k) {
    case Kernel::Sin:
      return "sin";
    case Kernel::Cos:
      return "cos";
    case Kernel::XSin:
      return "xsin";
    case Kernel::XCos:
      return "xcos";
  }
  return "unknown";
}

Kernel parse_kernel(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sin") return Kernel::Sin;
  if (lower == "cos") return Kernel::Cos;
  if (lower == "xsin") return Kernel::XSin;
  if (lower == "xcos") return Kernel::XCos;
  throw DomainError("unknown kernel '" + std::string(name) + "' (expected sin, cos, xsin, xcos)");
}

double KernelSpec::prefactor(double alpha) const { return numerator / std::pow(alpha, alpha_power); }

const KernelSpec& kernel_spec(Kernel k) { return kSpecs[static_cast<std::size_t>(k)]; }

EvaluationResult laplace_eval(const LaplaceRequest& req, Route route, const meijer::GOptions& g_options) {
  validate(req);
  const KernelSpec& spec = kernel_spec(req.kernel);
  if (req.beta == 0.0) return zero_frequency(spec, req.alpha);
  if (route == Route::quadrature) return by_quadrature(spec, req);

  const double z = g_argument(req.alpha, req.beta);
  if (z == 0.0) return zero_frequency(spec, req.alpha);  // beta^2 underflowed
  EvaluationResult g = meijer::g_1331(spec.params, z, g_options);
  const double pre = spec.prefactor(req.alpha);
  g.value *= pre;
  g.abs_err_est *= pre;
  g.imag_residue *= pre;
  return g;
}

}  // namespace ramanujan::laplace
