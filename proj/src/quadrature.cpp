#include "ramanujan/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace ramanujan::quadrature {

namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
  std::array<double, kOrder / 2> x{};
  std::array<double, kOrder / 2> w{};

  GaussLegendre() {
    // Newton on P_n starting from the Chebyshev-like guess.
    for (int i = 0; i < kOrder / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl;
  return gl;
}

struct Piece {
  double value = 0.0;
  double abs_value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

Piece gl20(const std::function<double(double)>& f, double a, double b) {
  const auto& r = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Piece p;
  for (int i = 0; i < kOrder / 2; ++i) {
    const double f1 = f(c - h * r.x[i]);
    const double f2 = f(c + h * r.x[i]);
    p.value += r.w[i] * (f1 + f2);
    p.abs_value += r.w[i] * (std::abs(f1) + std::abs(f2));
  }
  p.value *= h;
  p.abs_value *= h;
  p.evaluations = kOrder;
  return p;
}

constexpr long kSplitBudget = 100000;

// Recursive bisection. Each child keeps the parent's tolerance, so an
// endpoint singularity costs a chain of short refinements only.
Piece adapt(const std::function<double(double)>& f, double a, double b, const Piece& whole, double tol,
            int depth, long& budget) {
  const double m = 0.5 * (a + b);
  Piece left = gl20(f, a, m);
  Piece right = gl20(f, m, b);
  // The refined error is not bounded by |coarse - fine| near an endpoint
  // singularity (about 2.4x for x^-1/2), hence the factor 3.
  const double diff = 3.0 * std::abs(left.value + right.value - whole.value);
  const double floor = 8.0 * kEps * (left.abs_value + right.abs_value);
  if (diff <= std::max(tol, floor) || depth >= 80 || budget <= 0 || m <= a || m >= b) {
    Piece out;
    out.value = left.value + right.value;
    out.abs_value = left.abs_value + right.abs_value;
    out.error = diff;
    out.evaluations = left.evaluations + right.evaluations;
    return out;
  }
  --budget;
  Piece l = adapt(f, a, m, left, tol, depth + 1, budget);
  Piece r = adapt(f, m, b, right, tol, depth + 1, budget);
  Piece out;
  out.value = l.value + r.value;
  out.abs_value = l.abs_value + r.abs_value;
  out.error = l.error + r.error;
  out.evaluations = l.evaluations + r.evaluations + 2 * kOrder;
  return out;
}

// Neumaier's compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

class Breakpoints {
 public:
  explicit Breakpoints(const OscillatoryIntegrand& in) : osc_(in.oscillation), decay_(in.decay) {
    if (osc_.kind != Oscillation::Kind::none && !(osc_.omega > 0.0)) {
      throw DomainError("oscillation frequency must be positive");
    }
    if (!(decay_.rate > 0.0)) throw DomainError("decay rate must be positive");
    zero_index_ = osc_.shift > 0.0 ? 0 : 1;
  }

  double next(double x) {
    double candidate = next_decay(x);
    if (osc_.kind != Oscillation::Kind::none) {
      while (zero(zero_index_) <= x) ++zero_index_;
      candidate = std::min(candidate, zero(zero_index_));
    }
    return candidate;
  }

 private:
  double zero(long k) const {
    const double phase = static_cast<double>(k) * kPi + osc_.shift;
    return osc_.kind == Oscillation::Kind::quadratic_phase ? std::sqrt(phase / osc_.omega)
                                                           : phase / osc_.omega;
  }

  // Panels no longer than a couple of decay lengths.
  double next_decay(double x) const {
    if (decay_.kind == Decay::Kind::exp) return x + 2.0 / decay_.rate;
    const double u = std::sqrt(x) + 1.0 / decay_.rate;
    return u * u;
  }

  Oscillation osc_;
  Decay decay_;
  long zero_index_ = 1;
};

struct WynnResult {
  double value = 0.0;
  double error = std::numeric_limits<double>::infinity();
};

WynnResult wynn_epsilon(const std::vector<double>& s) {
  const std::size_t n = s.size();
  WynnResult best;
  if (n < 3) return best;
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(s.begin(), s.end());
  // Even columns approximate the limit; track the last two diagonal entries.
  double last_even = cur.back();
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double d = cur[i + 1] - cur[i];
      if (d == 0.0) return best;
      next[i] = prev[i + 1] + 1.0 / d;
    }
    prev = cur;
    cur = std::move(next);
    if (col % 2 == 0 && !cur.empty()) {
      const double v = cur.back();
      if (!std::isfinite(v)) return best;
      const double err = std::abs(v - last_even);
      if (err < best.error) best = {v, err};
      last_even = v;
    }
  }
  return best;
}

}  // namespace

double tail_bound(const Decay& d, double x) {
  const double c = d.rate;
  if (d.kind == Decay::Kind::exp) {
    const double e = d.amplitude * std::exp(-c * x);
    return d.power == 0 ? e / c : e * (x / c + 1.0 / (c * c));
  }
  const double u = std::sqrt(x);
  const double e = 2.0 * d.amplitude * std::exp(-c * u);
  if (d.power == 0) return e * (u / c + 1.0 / (c * c));
  const double c2 = c * c;
  return e * (u * u * u / c + 3.0 * u * u / c2 + 6.0 * u / (c2 * c) + 6.0 / (c2 * c2));
}

EvaluationResult integrate(const OscillatoryIntegrand& integrand, const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || cfg.rel_tol < 0.0) throw DomainError("tolerance must be positive");
  if (!integrand.f) throw DomainError("integrand is empty");
  Breakpoints breaks(integrand);

  CompensatedSum sum;
  double error = 0.0;
  double abs_total = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  std::vector<double> partials;
  double a = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  bool truncated = false;
  while (panels < cfg.max_panels) {
    const double b = breaks.next(a);
    Piece whole = gl20(integrand.f, a, b);
    // Below rounding of the running total no refinement can help.
    const double local_tol =
        std::max({cfg.abs_tol, cfg.rel_tol * std::abs(whole.value), kEps * (abs_total + whole.abs_value)}) / 100.0;
    long budget = kSplitBudget;
    Piece p = adapt(integrand.f, a, b, whole, local_tol, 0, budget);
    evaluations += whole.evaluations + p.evaluations;
    sum.add(p.value);
    error += p.error;
    abs_total += p.abs_value;
    ++panels;
    partials.push_back(sum.value());
    a = b;
    if (a >= integrand.decay.valid_from) {
      const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum.value()));
      tail = tail_bound(integrand.decay, a);
      if (tail < tol / 10.0) {
        truncated = true;
        break;
      }
    }
  }

  EvaluationResult out;
  out.method = Method::quadrature;
  out.value = sum.value();
  out.abs_err_est = error + tail + 4.0 * kEps * abs_total;
  out.work.panels = panels;
  out.work.evaluations = evaluations;

  if (cfg.extrapolate && partials.size() >= 5) {
    const std::size_t keep = std::min<std::size_t>(partials.size(), 15);
    std::vector<double> recent(partials.end() - static_cast<long>(keep), partials.end());
    const WynnResult w = wynn_epsilon(recent);
    if (w.error < tail) {
      out.value = w.value;
      out.abs_err_est = error + w.error + 4.0 * kEps * abs_total;
    }
  }

  const double requested = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  if (truncated && out.abs_err_est > requested) {
    std::ostringstream msg;
    msg << "quadrature error estimate " << out.abs_err_est << " exceeds the requested " << requested;
    throw ToleranceNotReached(msg.str(), out);
  }
  if (!truncated) {
    std::ostringstream msg;
    msg << "quadrature stopped at the panel cap (" << cfg.max_panels << ") before the tail bound fell below tolerance";
    throw ToleranceNotReached(msg.str(), out);
  }
  return out;
}

namespace {

void require_positive(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("argument must be a positive real");
}

}  // namespace

EvaluationResult integrate_bose_direct(double b, Trig kernel, const QuadratureConfig& cfg) {
  require_positive(b);
  OscillatoryIntegrand in;
  const double w = kPi * b;
  if (kernel == Trig::sin) {
    in.f = [w](double x) { return std::sin(w * x) / std::expm1(2.0 * kPi * std::sqrt(x)); };
  } else {
    in.f = [w](double x) { return std::cos(w * x) / std::expm1(2.0 * kPi * std::sqrt(x)); };
  }
  in.oscillation = {Oscillation::Kind::linear_phase, w, kernel == Trig::sin ? 0.0 : kPi / 2.0};
  // 1/(e^y - 1) <= 2 e^-y once e^y >= 2.
  const double from = std::log(2.0) / (2.0 * kPi);
  in.decay = {Decay::Kind::exp_sqrt, 2.0 * kPi, 2.0, 0, from * from};
  return integrate(in, cfg);
}

EvaluationResult integrate_sqrt_substituted(double b, Trig kernel, const QuadratureConfig& cfg) {
  require_positive(b);
  OscillatoryIntegrand in;
  const double w = kPi * b;
  if (kernel == Trig::sin) {
    in.f = [w](double t) { return 2.0 * t * std::sin(w * t * t) / std::expm1(2.0 * kPi * t); };
  } else {
    in.f = [w](double t) { return 2.0 * t * std::cos(w * t * t) / std::expm1(2.0 * kPi * t); };
  }
  in.oscillation = {Oscillation::Kind::quadratic_phase, w, kernel == Trig::sin ? 0.0 : kPi / 2.0};
  in.decay = {Decay::Kind::exp, 2.0 * kPi, 4.0, 1, std::log(2.0) / (2.0 * kPi)};
  return integrate(in, cfg);
}

}  // namespace ramanujan::quadrature
