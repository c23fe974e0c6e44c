#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "ramanujan/gamma.hpp"

using namespace ramanujan;
using ramanujan::gamma::log_gamma;

namespace {

std::vector<Complex> random_box_samples(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex z(u(rng), u(rng));
    const double nearest = std::round(z.real());
    if (nearest <= 1.0 && std::abs(z - Complex(nearest, 0.0)) < 0.1) continue;
    out.push_back(z);
  }
  return out;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("log_gamma special values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(log_gamma(0.5).real() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  CHECK(std::abs(log_gamma(0.5).imag()) == 0.0);
  CHECK(log_gamma(11.0).real() == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma against shift-and-recur Stirling oracle") {
  const Complex z(0.5, 1.0);
  CHECK(std::abs(log_gamma(z) - oracle::log_gamma_stirling(z)) < 1e-13);
  for (Complex w : {Complex(3.7, -2.2), Complex(-2.5, 0.3), Complex(0.1, 7.0),
                    Complex(-7.3, -4.1), Complex(250.0, 40.0), Complex(-0.5, 1e-3)}) {
    const Complex ref = oracle::log_gamma_stirling(w, 30);
    INFO("z = " << w);
    // Stirling recurred from the right lands on the principal branch.
    CHECK(std::abs(log_gamma(w) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("log_gamma accuracy up to |z| = 1000") {
  for (Complex z : {Complex(999.0, 0.0), Complex(500.0, 800.0), Complex(-700.3, 300.0),
                    Complex(1.0, -999.0)}) {
    const Complex ref = oracle::log_gamma_stirling(z, 0);
    INFO("z = " << z);
    CHECK(std::abs(log_gamma(z) - ref) < 1e-13 * std::abs(ref));
  }
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleAtNonPositiveInteger);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleAtNonPositiveInteger);
  CHECK_THROWS_AS(log_gamma(Complex(-2.0, 5e-15)), PoleAtNonPositiveInteger);
  CHECK_NOTHROW(log_gamma(Complex(-2.0, 1e-10)));
  CHECK_NOTHROW(log_gamma(1.0));
  CHECK_THROWS_AS(log_gamma(Complex(std::nan(""), 0.0)), DomainError);
}

TEST_CASE("gamma recurrence, reflection, conjugate symmetry on random samples") {
  for (const Complex z : random_box_samples(2024, 200)) {
    INFO("z = " << z);
    const Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
    CHECK(std::abs(ratio - z) < 1e-12 * std::abs(z));
    const Complex reflect = std::exp(log_gamma(z) + log_gamma(1.0 - z)) * std::sin(kPi * z) / kPi;
    CHECK(std::abs(reflect - 1.0) < 1e-11);
    const Complex lz = log_gamma(z);
    const Complex lc = log_gamma(std::conj(z));
    CHECK(lc.real() == lz.real());
    CHECK(lc.imag() == -lz.imag());
  }
}

TEST_CASE("multiplication theorem") {
  CHECK(std::abs(gamma::multiplication_rhs(1.0, 2) - 1.0) < 1e-14);
  CHECK(std::abs(gamma::multiplication_rhs(0.5, 2) - 1.0) < 1e-14);
  const Complex z(0.3, 0.7);
  CHECK(rel(gamma::multiplication_rhs(z, 3), gamma::gamma(3.0 * z)) < 1e-12);
  for (unsigned m : {2u, 3u, 4u}) {
    for (const Complex w : random_box_samples(77 + m, 200)) {
      const Complex mz = static_cast<double>(m) * w;
      const double nearest = std::round(mz.real());
      if (nearest <= 0.0 && std::abs(mz - Complex(nearest, 0.0)) < 0.1) continue;
      INFO("m = " << m << " z = " << w);
      CHECK(rel(gamma::multiplication_rhs(w, m), gamma::gamma(mz)) < 1e-11);
    }
  }
  CHECK_THROWS_AS(gamma::multiplication_rhs(-0.5, 2), PoleAtNonPositiveInteger);
}

TEST_CASE("pochhammer") {
  CHECK(gamma::pochhammer(1.0, 0) == 1.0);
  CHECK(gamma::pochhammer(1.0, 5) / gamma::pochhammer(2.0, 5) == doctest::Approx(1.0 / 6.0));
  CHECK(gamma::unit_pochhammer_ratio(5) == doctest::Approx(1.0 / 6.0));
  CHECK(gamma::pochhammer(0.75, 4) == 3465.0 / 256.0);
  CHECK(gamma::pochhammer_term(0.75, 4).value == 3465.0 / 256.0);
  for (unsigned k = 0; k < 40; ++k) {
    CHECK(gamma::pochhammer(1.0, k) / gamma::pochhammer(2.0, k) ==
          doctest::Approx(gamma::unit_pochhammer_ratio(k)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gamma::pochhammer(1.0, 400), OverflowToInfinity);
}

TEST_CASE("laplace_power_check") {
  CHECK(gamma::laplace_power_check(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma::laplace_power_check(2.0, 3.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  // Gamma(1/2) / pi^(1/2) = 1
  CHECK(gamma::laplace_power_check(0.5, kPi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma::laplace_power_check(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(gamma::laplace_power_check(-1.0, 1.0), DomainError);
}
