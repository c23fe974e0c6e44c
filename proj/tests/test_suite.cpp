#include <doctest.h>

#include "oracles.hpp"
#include "ramanujan/expr.hpp"
#include "ramanujan/suite.hpp"

using namespace ramanujan;
using namespace ramanujan::suite;

namespace {

constexpr Family kIntegrals[] = {Family::Phi1, Family::Psi1, Family::Phi2,    Family::Psi2,
                                 Family::Phi3, Family::Psi3Star, Family::Psi3};

// Plain composite Gauss-Legendre on a long finite interval after x = t^2.
double bose_oracle(double n, bool cosine) {
  auto f = [n, cosine](double t) {
    const double phase = kPi * n * t * t;
    return 2.0 * t * (cosine ? std::cos(phase) : std::sin(phase)) / std::expm1(2.0 * kPi * t);
  };
  return oracle::gauss_legendre(f, 0.0, 7.0, 3000);
}

}  // namespace

TEST_CASE("expression evaluator") {
  CHECK(evaluate_expression("1/16") == 0.0625);
  CHECK(evaluate_expression("(13-4*sqrt(3))/144") == doctest::Approx((13.0 - 4.0 * std::sqrt(3.0)) / 144.0));
  CHECK(evaluate_expression("pi^2/4") == doctest::Approx(kPi * kPi / 4.0));
  CHECK(evaluate_expression("-2^2") == -4.0);
  CHECK(evaluate_expression(" 2 * ( 3 + 4 ) ") == 14.0);
  CHECK_THROWS_AS(evaluate_expression("sqrt(-1)"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("1/"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("e"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("(1"), DomainError);
}

TEST_CASE("family names") {
  for (Family f : kIntegrals) CHECK(parse_family(to_string(f)) == f);
  CHECK(parse_family("psi3star") == Family::Psi3Star);
  CHECK_THROWS_AS(parse_family("phi4"), DomainError);
}

TEST_CASE("named values") {
  CHECK(std::abs(eval_quantity({Family::Phi1, 1.0}, Route::series).value - 1.0 / (2.0 * kSqrt2)) < 1e-10);
  CHECK(std::abs(eval_quantity({Family::Phi1, 1.0}, Route::quadrature).value - 1.0 / (2.0 * kSqrt2)) < 1e-12);
  const double psi2 = (-std::sqrt(12.0) + kSqrt2 + std::sqrt(6.0)) / 8.0;
  CHECK(std::abs(eval_quantity({Family::Psi2, 1.0}, Route::series).value - psi2) < 1e-10);
  const double phi3 = (8.0 - 3.0 * std::sqrt(5.0)) / 16.0;
  CHECK(std::abs(eval_quantity({Family::Phi3, 0.4}, Route::series).value - phi3) < 1e-10);
  const double psi3 = 1.0 / (2.0 * kPi) + (kPi * kSqrt2 - 4.0) / (8.0 * kPi);
  CHECK(std::abs(eval_quantity({Family::Psi3, 1.0}, Route::quadrature).value - psi3) < 1e-12);
  CHECK_THROWS_AS(eval_quantity({Family::Phi1, 0.0}, Route::series), DomainError);
  CHECK_THROWS_AS(eval_quantity({Family::Phi1, -2.0}, Route::quadrature), DomainError);
}

TEST_CASE("routes agree and match an independent oracle") {
  for (Family f : kIntegrals) {
    for (double b : {1.0 / 3.0, 0.5, 1.0, 2.0, 5.0}) {
      const auto s = eval_quantity({f, b}, Route::series);
      const auto q = eval_quantity({f, b}, Route::quadrature);
      INFO(to_string(f) << " b = " << b);
      CHECK(std::abs(s.value - q.value) < 1e-8);
      CHECK(s.method == Method::series);
      CHECK(q.method == Method::quadrature);
    }
  }
  for (double b : {0.5, 2.0}) {
    CHECK(std::abs(eval_quantity({Family::Phi3, b}, Route::quadrature).value - bose_oracle(b, true)) < 1e-12);
    CHECK(std::abs(eval_quantity({Family::Psi3Star, b}, Route::quadrature).value - bose_oracle(b, false)) < 1e-12);
  }
}

TEST_CASE("Psi3 decomposition") {
  for (double n : {0.3, 1.0, 4.0}) {
    for (Route r : {Route::series, Route::quadrature}) {
      const double psi3 = eval_quantity({Family::Psi3, n}, r).value;
      const double star = eval_quantity({Family::Psi3Star, n}, r).value;
      CHECK(psi3 - star == doctest::Approx(1.0 / (2.0 * kPi * n)).epsilon(1e-14));
    }
  }
}

TEST_CASE("regrouped double sum") {
  for (Family f : {Family::Phi2, Family::Psi2}) {
    for (double b : {0.5, 1.0, 2.0}) {
      const double d = g_sum(f, b).value;
      const double s = g_sum_regrouped(f, b).value;
      CHECK(std::abs(d - s) < 1e-10 * std::abs(d));
    }
  }
  CHECK_THROWS_AS(g_sum_regrouped(Family::Phi1, 1.0), DomainError);
  CHECK_THROWS_AS(g_sum(Family::Psi3, 1.0), DomainError);
}

TEST_CASE("identity report") {
  auto r = make_report("x", 1.0, 1.0, 1.0 + 5e-9, 1e-8);
  CHECK(r.pass);
  r = make_report("x", 1.0, 100.0, 100.0 + 5e-7, 1e-8);
  CHECK(r.pass);
  r = make_report("x", 1.0, 1e-3, 1e-3 + 2e-8, 1e-8);
  CHECK_FALSE(r.pass);
  CHECK(r.rel_residual == doctest::Approx(2e-8 / (1e-3 + 2e-8)));
}

TEST_CASE("theorems, both routes, all seven forms") {
  for (Theorem t : {Theorem::I, Theorem::I_dual, Theorem::II, Theorem::II_dual, Theorem::III,
                    Theorem::III_dual, Theorem::III_star}) {
    for (double n : {1.0 / 3.0, 0.7, 2.0}) {
      INFO(to_string(t) << " n = " << n);
      const auto q = theorem_check(t, n, Route::quadrature);
      CHECK(q.pass);
      CHECK(q.abs_residual < 1e-8);
      CHECK(theorem_check(t, n, Route::series).pass);
    }
  }
  // At n = 1 Theorem I says Phi1(1) = (sqrt 2 + 1) Psi1(1).
  const auto r = theorem_check(Theorem::I, 1.0, Route::quadrature);
  CHECK(std::abs(r.rhs - (kSqrt2 + 1.0) * eval_quantity({Family::Psi1, 1.0}, Route::quadrature).value) < 1e-14);
  CHECK(r.abs_residual < 1e-9);
}

TEST_CASE("summation identities") {
  for (SumIdentity s : {SumIdentity::I, SumIdentity::I_dual, SumIdentity::II, SumIdentity::II_dual,
                        SumIdentity::III_star, SumIdentity::III}) {
    for (double n : {0.5, 1.0, 2.0}) {
      INFO(to_string(s) << " n = " << n);
      CHECK(summation_identity_check(s, n).abs_residual < 1e-8);
    }
  }
}

TEST_CASE("closed-form catalog") {
  const auto cat = closed_form_catalog();
  CHECK(cat.size() == 13);
  for (const auto& e : cat) {
    INFO(e.id);
    CHECK(e.status == Status::pass);
    CHECK(std::abs(e.computed - e.exact) < 1e-10);
    CHECK(e.decimal == [&] {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", evaluate_expression(e.expression));
      return std::string(buf);
    }());
  }
  CHECK(cat[5].id == "Phi3(2)");
  CHECK(cat[5].exact == 0.0625);
}

TEST_CASE("series-value table") {
  const auto table = series_value_table();
  CHECK(table.size() == 13);
  int pass = 0, flagged = 0;
  for (const auto& e : table) {
    INFO(e.id);
    CHECK(std::abs(e.computed - e.oracle) <= 1e-8 * std::abs(e.oracle));
    CHECK(e.status != Status::fail);
    pass += e.status == Status::pass;
    flagged += e.status == Status::flagged;
  }
  CHECK(pass == 9);
  CHECK(flagged == 4);
  CHECK(table[1].exact == doctest::Approx(kPi * kPi / 4.0));
  CHECK(table[4].exact == doctest::Approx(kPi * kPi * (kPi - 2.0 * kSqrt2) / 8.0));
  for (int i : {2, 3, 8, 12}) CHECK(table[i].status == Status::flagged);
}
