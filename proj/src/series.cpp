#include "ramanujan/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace ramanujan::series {

namespace {

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (unsigned j = 1; j <= k; ++j) c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
  return c < 9e15 ? std::round(c) : c;
}

struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Lazily evaluated term stream; `cost` counts raw terms consumed upstream.
class Stream {
 public:
  Stream(std::function<double(std::size_t)> next, std::function<std::size_t()> cost)
      : next_(std::move(next)), cost_(std::move(cost)) {}
  double operator[](std::size_t k) {
    while (cache_.size() <= k) cache_.push_back(next_(cache_.size()));
    return cache_[k];
  }
  std::size_t size() const { return cache_.size(); }
  std::size_t cost() const { return cost_(); }

 private:
  std::function<double(std::size_t)> next_;
  std::function<std::size_t()> cost_;
  std::vector<double> cache_;
};

EvaluationResult finish(double value, double err, const Stream& s) {
  EvaluationResult out;
  out.method = Method::series;
  out.value = value;
  out.abs_err_est = err;
  out.work.terms = s.cost();
  return out;
}

[[noreturn]] void give_up(const std::string& what, EvaluationResult best) {
  throw ToleranceNotReached(what, std::move(best));
}

EvaluationResult sum_raw(Stream& s, const SummationConfig& cfg, int quiet_needed) {
  CompensatedSum sum;
  int quiet = 0;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    const double t = s[k];
    sum.add(t);
    quiet = std::abs(t) < cfg.tol * std::abs(sum.value()) ? quiet + 1 : 0;
    if (quiet >= quiet_needed) {
      // The next neglected term is bounded by the last one seen.
      return finish(sum.value(), std::abs(t), s);
    }
  }
  std::ostringstream msg;
  msg << "series did not settle within " << cfg.max_terms << " terms";
  give_up(msg.str(), finish(sum.value(), std::abs(s[cfg.max_terms - 1]), s));
}

EvaluationResult sum_alternating(Stream& s, const SummationConfig& cfg) {
  const unsigned cap = static_cast<unsigned>(std::min<std::size_t>(cfg.max_terms, 300));
  double previous = std::numeric_limits<double>::quiet_NaN();
  double best_err = std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  int quiet = 0;
  for (unsigned n = 1; n <= cap; ++n) {
    const std::vector<double> w = alternating_weights(n, cfg.moment_interval);
    CompensatedSum acc;
    double magnitude = 0.0;
    for (unsigned k = 0; k < n; ++k) {
      const double wt = w[k] * s[k];
      acc.add(wt);
      magnitude += std::abs(wt);
    }
    const double value = acc.value();
    const double floor = 4.0 * kEps * magnitude;
    if (n > 1) {
      const double diff = std::abs(value - previous);
      const double err = diff + floor;
      if (err < best_err) {
        best_err = err;
        best_value = value;
      }
      quiet = diff <= std::max(cfg.tol * std::abs(value), 10.0 * floor) ? quiet + 1 : 0;
      if (quiet >= 2) return finish(value, err, s);
    }
    previous = value;
  }
  give_up("alternating acceleration did not settle", finish(best_value, best_err, s));
}

EvaluationResult sum_richardson(Stream& s, const SummationConfig& cfg) {
  constexpr std::size_t kFirst = 8;
  constexpr int kMaxLevels = 13;
  std::vector<std::vector<double>> table;
  CompensatedSum partial;
  std::size_t consumed = 0;
  double best_err = std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  int quiet = 0;
  for (int j = 0; j < kMaxLevels; ++j) {
    const std::size_t n = kFirst << j;
    if (n > cfg.max_terms) break;
    double magnitude = 0.0;
    while (consumed < n) {
      partial.add(s[consumed]);
      magnitude += std::abs(s[consumed]);
      ++consumed;
    }
    std::vector<double> row(static_cast<std::size_t>(j) + 1);
    row[0] = partial.value();
    for (int k = 1; k <= j; ++k) {
      const double f = std::ldexp(1.0, k);
      row[k] = (f * row[k - 1] - table[j - 1][k - 1]) / (f - 1.0);
    }
    table.push_back(row);
    if (j == 0) continue;
    const double value = row[j];
    const double diff = std::abs(value - table[j - 1][j - 1]);
    if (diff < best_err) {
      best_err = diff;
      best_value = value;
    }
    quiet = diff <= cfg.tol * std::abs(value) ? quiet + 1 : 0;
    if (quiet >= 2) return finish(value, diff + 16.0 * kEps * std::abs(value), s);
  }
  give_up("Richardson extrapolation did not settle", finish(best_value, best_err, s));
}

EvaluationResult dispatch(Stream& s, const SummationConfig& cfg, int quiet_needed) {
  if (!(cfg.tol > 0.0)) throw DomainError("summation tolerance must be positive");
  if (cfg.max_terms == 0) throw DomainError("max_terms must be positive");
  switch (cfg.acceleration) {
    case Acceleration::none:
      return sum_raw(s, cfg, quiet_needed);
    case Acceleration::alternating:
      if (!(cfg.moment_interval > 0.0)) throw DomainError("moment interval must be positive");
      return sum_alternating(s, cfg);
    case Acceleration::richardson:
      return sum_richardson(s, cfg);
  }
  throw DomainError("unknown acceleration");
}

}  // namespace

ExpansionTerm cosh_expansion(unsigned r) {
  return {{r, 0}, r % 2 == 0 ? 2.0 : -2.0, kPi * (1.0 + 2.0 * r)};
}

ExpansionTerm triple_cosh_expansion(unsigned p, unsigned q) {
  const double sign = (p + q) % 2 == 0 ? 1.0 : -1.0;
  return {{p, q}, sign * binomial(p + q, p), 2.0 * kPi * (2.0 * q + p + 1.0) / kSqrt3};
}

ExpansionTerm bose_expansion(unsigned r) { return {{r, 0}, 1.0, 2.0 * kPi * (1.0 + r)}; }

double cosh_partial(double x, unsigned terms) {
  double s = 0.0;
  for (unsigned r = 0; r < terms; ++r) {
    const ExpansionTerm t = cosh_expansion(r);
    s += t.coefficient * std::exp(-t.rate * x);
  }
  return s;
}

double triple_cosh_partial(double x, unsigned terms) {
  double s = 0.0;
  for (unsigned d = 0; d < terms; ++d) {
    for (unsigned p = 0; p <= d; ++p) {
      const ExpansionTerm t = triple_cosh_expansion(p, d - p);
      s += t.coefficient * std::exp(-t.rate * x);
    }
  }
  return s;
}

double bose_partial(double s, unsigned terms) {
  double total = 0.0;
  for (unsigned r = 0; r < terms; ++r) {
    const ExpansionTerm t = bose_expansion(r);
    total += t.coefficient * std::exp(-t.rate * s);
  }
  return total;
}

std::string_view to_string(Acceleration a) {
  switch (a) {
    case Acceleration::none:
      return "none";
    case Acceleration::alternating:
      return "alternating";
    case Acceleration::richardson:
      return "richardson";
  }
  return "unknown";
}

std::vector<double> alternating_weights(unsigned n, double moment_interval) {
  // v_j: coefficients of T_n(1 + y) scaled by (2/L)^j; w_k = 1 - sum_{j<=k} v_j / sum_j v_j.
  std::vector<double> v(n + 1);
  v[0] = 1.0;
  const double scale = 2.0 / moment_interval;
  for (unsigned j = 0; j < n; ++j) {
    const double jd = j, nd = n;
    v[j + 1] = v[j] * scale * 2.0 * (nd + jd) * (nd - jd) / ((2.0 * jd + 2.0) * (2.0 * jd + 1.0));
  }
  double total = 0.0;
  for (double x : v) total += x;
  std::vector<double> w(n);
  double running = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    running += v[k];
    w[k] = (total - running) / total;
  }
  return w;
}

EvaluationResult sum_series(const SingleTerm& term, const SummationConfig& cfg) {
  std::size_t count = 0;
  Stream s([&](std::size_t k) { ++count; return term(k); }, [&] { return count; });
  return dispatch(s, cfg, 3);
}

EvaluationResult sum_double_series(const DoubleTerm& term, const SummationConfig& cfg) {
  std::size_t count = 0;
  Stream s(
      [&](std::size_t d) {
        CompensatedSum diag;
        const unsigned du = static_cast<unsigned>(d);
        for (unsigned p = 0; p <= du; ++p) {
          diag.add(term(p, du - p));
          ++count;
        }
        return diag.value();
      },
      [&] { return count; });
  return dispatch(s, cfg, 2);
}

}  // namespace ramanujan::series
