#include "ramanujan/suite.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

#include "ramanujan/expr.hpp"
#include "ramanujan/quadrature.hpp"
#include "ramanujan/series.hpp"

namespace ramanujan::suite {

namespace {

using meijer::GParams131;

void require_arg(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("argument n must be a positive real");
}

const GParams131& g_params(Family f) {
  switch (f) {
    case Family::Phi1:
    case Family::Phi2:
      return meijer::kernel_params::cosine;
    case Family::Psi1:
    case Family::Psi2:
      return meijer::kernel_params::sine;
    case Family::Phi3:
      return meijer::kernel_params::x_cosine;
    case Family::Psi3Star:
    case Family::Psi3:
      return meijer::kernel_params::x_sine;
  }
  throw DomainError("unknown family");
}

bool is_cosine(Family f) { return f == Family::Phi1 || f == Family::Phi2 || f == Family::Phi3; }

// G evaluations with running error and work bookkeeping.
class GTally {
 public:
  GTally(const GParams131& p, const SuiteConfig& cfg) : params_(p), options_(cfg.g) {}

  double operator()(double z, double weight) {
    const EvaluationResult r = meijer::g_1331(params_, z, options_);
    propagated_ += std::abs(weight) * r.abs_err_est;
    ++evaluations_;
    return r.value;
  }

  void fold_into(EvaluationResult& out) const {
    out.abs_err_est += propagated_;
    out.work.evaluations += evaluations_;
  }

 private:
  GParams131 params_;
  meijer::GOptions options_;
  double propagated_ = 0.0;
  std::size_t evaluations_ = 0;
};

series::SummationConfig alternating(double tol, double interval) {
  series::SummationConfig s;
  s.tol = tol;
  s.acceleration = series::Acceleration::alternating;
  s.moment_interval = interval;
  return s;
}

series::SummationConfig richardson(double tol) {
  series::SummationConfig s;
  s.tol = tol;
  s.acceleration = series::Acceleration::richardson;
  return s;
}

EvaluationResult by_quadrature(Family f, double n, const SuiteConfig& cfg) {
  quadrature::QuadratureConfig qc;
  qc.abs_tol = cfg.quadrature_tol;
  const double w = kPi * n;
  const bool cosine = is_cosine(f);
  const double shift = cosine ? kPi / 2.0 : 0.0;
  quadrature::OscillatoryIntegrand in;
  switch (f) {
    case Family::Phi1:
    case Family::Psi1:
      in.f = [w, cosine](double x) {
        const double phase = w * x * x;
        return (cosine ? std::cos(phase) : std::sin(phase)) / std::cosh(kPi * x);
      };
      in.oscillation = {quadrature::Oscillation::Kind::quadratic_phase, w, shift};
      in.decay = {quadrature::Decay::Kind::exp, kPi, 2.0, 0, 0.0};
      return quadrature::integrate(in, qc);
    case Family::Phi2:
    case Family::Psi2: {
      const double c = 2.0 * kPi / kSqrt3;
      in.f = [w, c, cosine](double x) {
        const double phase = w * x * x;
        return (cosine ? std::cos(phase) : std::sin(phase)) / (1.0 + 2.0 * std::cosh(c * x));
      };
      in.oscillation = {quadrature::Oscillation::Kind::quadratic_phase, w, shift};
      in.decay = {quadrature::Decay::Kind::exp, c, 1.0, 0, 0.0};
      return quadrature::integrate(in, qc);
    }
    case Family::Phi3:
    case Family::Psi3Star:
      qc.extrapolate = true;
      return quadrature::integrate_bose_direct(n, cosine ? quadrature::Trig::cos : quadrature::Trig::sin, qc);
    case Family::Psi3:
      break;
  }
  throw DomainError("no direct integral for this family");
}

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct TableRow {
  Family family;
  double arg;
  const char* label;
  const char* expression;
};

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Phi1:
      return "Phi1";
    case Family::Psi1:
      return "Psi1";
    case Family::Phi2:
      return "Phi2";
    case Family::Psi2:
      return "Psi2";
    case Family::Phi3:
      return "Phi3";
    case Family::Psi3Star:
      return "Psi3Star";
    case Family::Psi3:
      return "Psi3";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Family f : {Family::Phi1, Family::Psi1, Family::Phi2, Family::Psi2, Family::Phi3, Family::Psi3Star,
                   Family::Psi3}) {
    std::string candidate(to_string(f));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lower) return f;
  }
  throw DomainError("unknown quantity '" + std::string(name) + "'");
}

std::string_view to_string(Route r) { return r == Route::series ? "series" : "quadrature"; }

double series_prefactor(Family f) {
  switch (f) {
    case Family::Phi1:
    case Family::Psi1:
      return kSqrt2 / (kPi * kPi);
    case Family::Phi2:
    case Family::Psi2:
      return kSqrt3 / (2.0 * kSqrt2 * kPi * kPi);
    case Family::Phi3:
    case Family::Psi3Star:
    case Family::Psi3:
      return kSqrt2 / (kPi * kPi * kPi);
  }
  return 0.0;
}

EvaluationResult g_sum(Family f, double n, const SuiteConfig& cfg) {
  require_arg(n);
  GTally g(g_params(f), cfg);
  EvaluationResult out;
  switch (f) {
    case Family::Phi1:
    case Family::Psi1: {
      const double kappa = 64.0 * n * n / (kPi * kPi);
      out = series::sum_series(
          [&](std::size_t r) {
            const double d = 1.0 + 2.0 * static_cast<double>(r);
            const double w = (r % 2 == 0 ? 1.0 : -1.0) / d;
            return w * g(kappa / (d * d * d * d), w);
          },
          alternating(cfg.series_tol, 1.0));
      break;
    }
    case Family::Phi2:
    case Family::Psi2: {
      // Diagonal d = p + q has moments (y + y^2)^d, y in [0, 1]: interval [0, 2].
      const double kappa = 36.0 * n * n / (kPi * kPi);
      std::map<unsigned, double> cache;
      auto g_over_m = [&](unsigned m) {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        const double md = m;
        const double v = g(kappa / (md * md * md * md), 1.0 / md) / md;
        cache.emplace(m, v);
        return v;
      };
      out = series::sum_double_series(
          [&](unsigned p, unsigned q) {
            const series::ExpansionTerm t = series::triple_cosh_expansion(p, q);
            return t.coefficient * g_over_m(2 * q + p + 1);
          },
          alternating(cfg.series_tol, 2.0));
      break;
    }
    case Family::Phi3:
    case Family::Psi3Star: {
      const double kappa = 4.0 * n * n / (kPi * kPi);
      out = series::sum_series(
          [&](std::size_t r) {
            const double k = 1.0 + static_cast<double>(r);
            const double w = 1.0 / (k * k);
            return w * g(kappa * w * w, w);
          },
          richardson(cfg.series_tol));
      break;
    }
    case Family::Psi3:
      throw DomainError("Psi3 has no G-function sum of its own; use Psi3Star");
  }
  g.fold_into(out);
  return out;
}

EvaluationResult g_sum_regrouped(Family f, double n, const SuiteConfig& cfg) {
  require_arg(n);
  if (f != Family::Phi2 && f != Family::Psi2) throw DomainError("regrouping applies to Phi2/Psi2 only");
  GTally g(g_params(f), cfg);
  const double kappa = 36.0 * n * n / (kPi * kPi);
  auto g_over_m = [&](double m) { return g(kappa / (m * m * m * m), 1.0 / m) / m; };
  EvaluationResult out = series::sum_series(
      [&](std::size_t k) {
        const double base = 3.0 * static_cast<double>(k);
        return g_over_m(base + 1.0) - g_over_m(base + 2.0);
      },
      richardson(cfg.series_tol));
  g.fold_into(out);
  return out;
}

EvaluationResult eval_quantity(const RamanujanQuantity& q, Route route, const SuiteConfig& cfg) {
  require_arg(q.arg);
  if (q.family == Family::Psi3) {
    EvaluationResult r = eval_quantity({Family::Psi3Star, q.arg}, route, cfg);
    r.value += 1.0 / (2.0 * kPi * q.arg);
    return r;
  }
  if (route == Route::quadrature) return by_quadrature(q.family, q.arg, cfg);
  EvaluationResult s = g_sum(q.family, q.arg, cfg);
  const double pre = series_prefactor(q.family);
  s.value *= pre;
  s.abs_err_est *= pre;
  return s;
}

IdentityReport make_report(std::string id, double n, double lhs, double rhs, double tol) {
  IdentityReport r;
  r.id = std::move(id);
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol;
  r.abs_residual = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_residual = scale > 0.0 ? r.abs_residual / scale : 0.0;
  r.pass = r.abs_residual <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return r;
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::I:
      return "I";
    case Theorem::I_dual:
      return "I'";
    case Theorem::II:
      return "II";
    case Theorem::II_dual:
      return "II'";
    case Theorem::III:
      return "III";
    case Theorem::III_dual:
      return "III'";
    case Theorem::III_star:
      return "III*";
  }
  return "unknown";
}

IdentityReport theorem_check(Theorem which, double n, Route route, const SuiteConfig& cfg) {
  require_arg(n);
  WorkCounters work;
  auto eval = [&](Family f, double m) {
    const EvaluationResult r = eval_quantity({f, m}, route, cfg);
    work.panels += r.work.panels;
    work.terms += r.work.terms;
    work.evaluations += r.work.evaluations;
    return r.value;
  };
  const double root = std::sqrt(2.0 / n);
  double lhs = 0.0, rhs = 0.0;
  switch (which) {
    case Theorem::I:
      lhs = eval(Family::Phi1, n);
      rhs = root * eval(Family::Psi1, 1.0 / n) + eval(Family::Psi1, n);
      break;
    case Theorem::I_dual:
      lhs = eval(Family::Psi1, n);
      rhs = root * eval(Family::Phi1, 1.0 / n) - eval(Family::Phi1, n);
      break;
    case Theorem::II:
      lhs = eval(Family::Phi2, n);
      rhs = root * eval(Family::Psi2, 1.0 / n) + eval(Family::Psi2, n);
      break;
    case Theorem::II_dual:
      lhs = eval(Family::Psi2, n);
      rhs = root * eval(Family::Phi2, 1.0 / n) - eval(Family::Phi2, n);
      break;
    case Theorem::III:
      lhs = eval(Family::Phi3, n);
      rhs = root / n * eval(Family::Psi3, 1.0 / n) - eval(Family::Psi3, n);
      break;
    case Theorem::III_dual:
      lhs = eval(Family::Psi3, n);
      rhs = root / n * eval(Family::Phi3, 1.0 / n) + eval(Family::Phi3, n);
      break;
    case Theorem::III_star:
      lhs = eval(Family::Psi3Star, n);
      rhs = root / n * eval(Family::Phi3, 1.0 / n) + eval(Family::Phi3, n) - 1.0 / (2.0 * kPi * n);
      break;
  }
  IdentityReport r = make_report(std::string(to_string(which)), n, lhs, rhs, cfg.identity_tol);
  r.method_lhs = std::string(to_string(route));
  r.method_rhs = std::string(to_string(route));
  r.work = work;
  return r;
}

std::string_view to_string(SumIdentity s) {
  switch (s) {
    case SumIdentity::I:
      return "sum-I";
    case SumIdentity::I_dual:
      return "sum-I'";
    case SumIdentity::II:
      return "sum-II";
    case SumIdentity::II_dual:
      return "sum-II'";
    case SumIdentity::III_star:
      return "sum-III*";
    case SumIdentity::III:
      return "sum-III";
  }
  return "unknown";
}

IdentityReport summation_identity_check(SumIdentity which, double n, const SuiteConfig& cfg) {
  require_arg(n);
  WorkCounters work;
  auto sum = [&](Family f, double m) {
    const EvaluationResult r = g_sum(f, m, cfg);
    work.terms += r.work.terms;
    work.evaluations += r.work.evaluations;
    return r.value;
  };
  const double root = std::sqrt(2.0 / n);
  const double root3 = kSqrt2 / (n * std::sqrt(n));
  const double pi2 = kPi * kPi;
  double lhs = 0.0, rhs = 0.0;
  switch (which) {
    case SumIdentity::I:
      lhs = sum(Family::Phi1, n);
      rhs = root * sum(Family::Psi1, 1.0 / n) + sum(Family::Psi1, n);
      break;
    case SumIdentity::I_dual:
      lhs = sum(Family::Psi1, n);
      rhs = root * sum(Family::Phi1, 1.0 / n) - sum(Family::Phi1, n);
      break;
    case SumIdentity::II:
      lhs = sum(Family::Phi2, n);
      rhs = root * sum(Family::Psi2, 1.0 / n) + sum(Family::Psi2, n);
      break;
    case SumIdentity::II_dual:
      lhs = sum(Family::Psi2, n);
      rhs = root * sum(Family::Phi2, 1.0 / n) - sum(Family::Phi2, n);
      break;
    case SumIdentity::III_star:
      lhs = sum(Family::Psi3Star, n);
      rhs = -pi2 / (2.0 * n * kSqrt2) + root3 * sum(Family::Phi3, 1.0 / n) + sum(Family::Phi3, n);
      break;
    case SumIdentity::III:
      lhs = sum(Family::Phi3, n);
      rhs = 0.5 * pi2 * (1.0 / std::sqrt(n) - 1.0 / (n * kSqrt2)) + root3 * sum(Family::Psi3Star, 1.0 / n) -
            sum(Family::Psi3Star, n);
      break;
  }
  IdentityReport r = make_report(std::string(to_string(which)), n, lhs, rhs, cfg.identity_tol);
  r.method_lhs = "series";
  r.method_rhs = "series";
  r.work = work;
  return r;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::flagged:
      return "flagged";
  }
  return "unknown";
}

std::vector<ClosedFormEntry> closed_form_catalog(const SuiteConfig& cfg) {
  static const TableRow rows[] = {
      {Family::Phi1, 1.0, "1", "1/(2*sqrt(2))"},
      {Family::Psi1, 1.0, "1", "(-1+sqrt(2))/(2*sqrt(2))"},
      {Family::Phi2, 1.0, "1", "(2-sqrt(6)+sqrt(2))/8"},
      {Family::Psi2, 1.0, "1", "(-sqrt(12)+sqrt(2)+sqrt(6))/8"},
      {Family::Phi3, 1.0, "1", "(2-sqrt(2))/8"},
      {Family::Phi3, 2.0, "2", "1/16"},
      {Family::Phi3, 4.0, "4", "(3-sqrt(2))/32"},
      {Family::Phi3, 6.0, "6", "(13-4*sqrt(3))/144"},
      {Family::Phi3, 0.5, "1/2", "1/(4*pi)"},
      {Family::Phi3, 0.4, "2/5", "(8-3*sqrt(5))/16"},
      {Family::Psi3Star, 1.0, "1", "(pi*sqrt(2)-4)/(8*pi)"},
      {Family::Psi3Star, 2.0, "2", "(pi-2)/(16*pi)"},
      {Family::Psi3Star, 0.5, "1/2", "(pi-3)/(4*pi)"},
  };
  std::vector<ClosedFormEntry> out;
  for (const TableRow& row : rows) {
    ClosedFormEntry e;
    e.family = row.family;
    e.arg = row.arg;
    e.arg_label = row.label;
    e.id = std::string(to_string(row.family)) + "(" + row.label + ")";
    e.expression = row.expression;
    e.exact = evaluate_expression(row.expression);
    e.decimal = format12(e.exact);
    const EvaluationResult q = eval_quantity({row.family, row.arg}, Route::quadrature, cfg);
    const EvaluationResult s = eval_quantity({row.family, row.arg}, Route::series, cfg);
    e.computed = q.value;
    e.computed_method = "quadrature";
    e.oracle = s.value;
    e.oracle_method = "series";
    e.work.panels = q.work.panels;
    e.work.terms = s.work.terms;
    e.work.evaluations = q.work.evaluations + s.work.evaluations;
    const bool quad_ok = std::abs(q.value - e.exact) <= cfg.closed_form_tol;
    const bool series_ok = std::abs(s.value - e.exact) <= cfg.identity_tol * std::max(1.0, std::abs(e.exact));
    e.status = quad_ok && series_ok ? Status::pass : Status::fail;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ClosedFormEntry> series_value_table(const SuiteConfig& cfg) {
  static const TableRow rows[] = {
      {Family::Psi1, 1.0, "1", "pi^2/4*(-1+sqrt(2))"},
      {Family::Phi1, 1.0, "1", "pi^2/4"},
      {Family::Psi2, 1.0, "1", "pi^2/(2*sqrt(3))*(-sqrt(6)+sqrt(3)+4)"},
      {Family::Phi2, 1.0, "1", "pi^3/(2*sqrt(3))*(sqrt(2)-sqrt(3)+1)"},
      {Family::Psi3Star, 1.0, "1", "pi^2/8*(pi-2*sqrt(2))"},
      {Family::Psi3Star, 2.0, "2", "pi^2*sqrt(2)/32*(pi-2)"},
      {Family::Psi3Star, 0.5, "1/2", "pi^2*sqrt(2)/8*(pi-3)"},
      {Family::Phi3, 1.0, "1", "pi^3/16*(2*sqrt(2)-2)"},
      {Family::Phi3, 2.0, "2", "pi^3*sqrt(3)/48"},
      {Family::Phi3, 0.5, "1/2", "pi^2*sqrt(2)/8"},
      {Family::Phi3, 4.0, "4", "pi^3/64*(3*sqrt(2)-2)"},
      {Family::Phi3, 6.0, "6", "pi^3/288*(13*sqrt(2)-4*sqrt(6))"},
      {Family::Phi3, 0.4, "2/5", "pi^3/38*(8*sqrt(2)-3*sqrt(10))"},
  };
  std::vector<ClosedFormEntry> out;
  for (const TableRow& row : rows) {
    ClosedFormEntry e;
    e.family = row.family;
    e.arg = row.arg;
    e.arg_label = row.label;
    e.id = "sum-" + std::string(to_string(row.family)) + "(" + row.label + ")";
    e.expression = row.expression;
    e.exact = evaluate_expression(row.expression);
    e.decimal = format12(e.exact);
    const EvaluationResult s = g_sum(row.family, row.arg, cfg);
    const EvaluationResult q = eval_quantity({row.family, row.arg}, Route::quadrature, cfg);
    e.computed = s.value;
    e.computed_method = "series";
    e.oracle = q.value / series_prefactor(row.family);
    e.oracle_method = "quadrature";
    e.work.panels = q.work.panels;
    e.work.terms = s.work.terms;
    e.work.evaluations = q.work.evaluations + s.work.evaluations;
    const bool routes_agree = rel_gap(e.computed, e.oracle) <= cfg.series_value_tol;
    const double printed_gap = rel_gap(e.computed, e.exact);
    if (routes_agree && printed_gap <= cfg.series_value_tol) {
      e.status = Status::pass;
    } else if (routes_agree && printed_gap > cfg.flag_tol) {
      e.status = Status::flagged;
    } else {
      e.status = Status::fail;
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<std::pair<double, std::string>>& theorem_grid() {
  static const std::vector<std::pair<double, std::string>> grid = {
      {1.0 / 3.0, "1/3"}, {0.5, "1/2"}, {1.0, "1"}, {2.0, "2"}, {5.0, "5"}};
  return grid;
}

const std::vector<std::pair<double, std::string>>& identity_grid() {
  static const std::vector<std::pair<double, std::string>> grid = {{0.5, "1/2"}, {1.0, "1"}, {2.0, "2"}};
  return grid;
}

}  // namespace ramanujan::suite
