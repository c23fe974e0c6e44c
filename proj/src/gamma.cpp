#include "ramanujan/gamma.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace ramanujan::gamma {

namespace {

constexpr double kLanczosG = 5.24218750000000000;  // 671/128
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110453;
constexpr double kLogPi = 1.1447298858494001741434273513530587;

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

void check_pole(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < kPoleTolerance) {
    std::ostringstream msg;
    msg << "Gamma has a pole at " << nearest;
    throw PoleAtNonPositiveInteger(msg.str());
  }
}

Complex lanczos_log_gamma(Complex z) {
  const Complex t = z + kLanczosG;
  Complex ser(0.999999999999997092, 0.0);
  for (std::size_t j = 0; j < kLanczos.size(); ++j) {
    ser += kLanczos[j] / (z + static_cast<double>(j + 1));
  }
  return (z + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * ser / z);
}

// log sin(pi z) continued analytically through the upper half plane from the
// interval (0, 1), where it is real. Written as
//   log(1/2) + i pi/2 - i pi z + log(1 - exp(2 pi i z)),
// whose last factor stays inside |.| < 1 for im(z) > 0.
Complex log_sin_pi_upper(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex w = std::exp(2.0 * kPi * i * z);
  return -std::log(2.0) + i * (kPi / 2.0) - i * kPi * z + std::log(1.0 - w);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  check_pole(z);
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return kLogPi - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

double pochhammer(double a, unsigned k) {
  double value = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    value *= a + static_cast<double>(j);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "pochhammer(" << a << ", " << k << ") overflows at factor " << j;
      throw OverflowToInfinity(msg.str());
    }
  }
  return value;
}

PochhammerTerm pochhammer_term(double a, unsigned k) { return {a, k, pochhammer(a, k)}; }

Complex multiplication_rhs(Complex z, unsigned m) {
  if (m == 0) throw DomainError("multiplication_rhs: m must be positive");
  const double md = static_cast<double>(m);
  check_pole(md * z);
  Complex log_sum = 0.5 * (1.0 - md) * std::log(2.0 * kPi) + (md * z - 0.5) * std::log(md);
  for (unsigned j = 1; j <= m; ++j) {
    log_sum += log_gamma(z + static_cast<double>(j - 1) / md);
  }
  return std::exp(log_sum);
}

double laplace_power_check(double z, double s) {
  if (!(s > 0.0) || !(z > 0.0)) {
    throw DomainError("laplace_power_check requires z > 0 and S > 0");
  }
  return std::exp(std::lgamma(z) - z * std::log(s));
}

}  // namespace ramanujan::gamma
