#include "ramanujan/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "ramanujan/gamma.hpp"

namespace ramanujan::meijer {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

bool is_positive_integer(double x) {
  const double r = std::round(x);
  return r >= 1.0 && std::abs(x - r) < 1e-12;
}

bool congruent_mod_one(double x, double y) {
  const double d = x - y;
  return std::abs(d - std::round(d)) < 1e-12;
}

void require_positive_argument(double z, const char* who) {
  if (std::isnan(z) || std::isinf(z)) {
    throw DomainError(std::string(who) + ": argument must be finite");
  }
  if (z == 0.0) throw ZeroArgument(std::string(who) + ": z = 0 is excluded");
  if (z < 0.0) throw DomainError(std::string(who) + ": only z > 0 is supported");
}

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double imag = 0.0;
  double error = 0.0;
  double abs_sum = 0.0;
};

struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

// QUADPACK-style error heuristic for one 21-point panel.
template <class F>
Segment gk21(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(centre);
  Complex kronrod = fc * kWgk[10];
  Complex gauss(0.0, 0.0);
  double abs_sum = std::abs(fc.real()) * kWgk[10];
  std::array<Complex, 21> values{};
  values[10] = fc;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(centre - dx);
    const Complex f2 = f(centre + dx);
    values[j] = f1;
    values[20 - j] = f2;
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1.real()) + std::abs(f2.real()));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kronrod.real();
  double asc = kWgk[10] * std::abs(fc.real() - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    asc += kWgk[j] * (std::abs(values[j].real() - mean) + std::abs(values[20 - j].real() - mean));
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = kronrod.real() * half;
  s.imag = kronrod.imag() * half;
  s.abs_sum = abs_sum * std::abs(half);
  asc *= std::abs(half);
  const double diff = std::abs((kronrod - gauss).real() * half);
  double err = diff;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  if (s.abs_sum > 1e-290 / (50.0 * kEps)) err = std::max(err, 50.0 * kEps * s.abs_sum);
  s.error = err;
  return s;
}

// Residue sum over the poles of Gamma(b - s) for every b in minus_num, for
//   prod Gamma(minus_num - s) prod Gamma(1 - plus_num + s)
//   / (prod Gamma(1 - plus_den + s) prod Gamma(minus_den - s)) w^s.
struct ResidueProblem {
  std::vector<double> minus_num;  // beta_1..beta_m
  std::vector<double> plus_den;   // beta_{m+1}..beta_q
  std::vector<double> plus_num;   // alpha_1..alpha_n
  std::vector<double> minus_den;  // alpha_{n+1}..alpha_p
};

double checked_tgamma(double x, const char* what) {
  const double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < gamma::kPoleTolerance) {
    throw InvalidParameters(std::string("residue series: Gamma pole in ") + what);
  }
  return std::tgamma(x);
}

EvaluationResult sum_residues(const ResidueProblem& prob, double w, double tol, int max_terms) {
  const std::size_t families = prob.minus_num.size();
  for (std::size_t i = 0; i < families; ++i) {
    for (std::size_t j = i + 1; j < families; ++j) {
      if (congruent_mod_one(prob.minus_num[i], prob.minus_num[j])) {
        throw CoincidentPoles("residue series: lower parameters differ by an integer");
      }
    }
  }
  for (double d : prob.plus_den) {
    for (double b : prob.minus_num) {
      if (std::abs(1.0 - d + b - std::round(1.0 - d + b)) < 1e-14 && std::round(1.0 - d + b) <= 0.0) {
        throw InvalidParameters("residue series: reciprocal Gamma vanishes identically");
      }
    }
  }

  std::vector<double> term(families);
  std::vector<double> partial(families, 0.0);
  for (std::size_t h = 0; h < families; ++h) {
    const double bh = prob.minus_num[h];
    double c = 1.0;
    for (std::size_t j = 0; j < families; ++j) {
      if (j != h) c *= checked_tgamma(prob.minus_num[j] - bh, "numerator");
    }
    for (double a : prob.plus_num) c *= checked_tgamma(1.0 - a + bh, "numerator");
    for (double d : prob.plus_den) c /= std::tgamma(1.0 - d + bh);
    for (double a : prob.minus_den) c /= std::tgamma(a - bh);
    term[h] = c * std::pow(w, bh);
  }

  EvaluationResult out;
  out.method = Method::residue_series;
  double total = 0.0;
  double abs_total = 0.0;
  double max_partial = 0.0;
  int quiet = 0;
  int k = 0;
  for (; k < max_terms; ++k) {
    double biggest = 0.0;
    for (std::size_t h = 0; h < families; ++h) {
      partial[h] += term[h];
      total += term[h];
      abs_total += std::abs(term[h]);
      biggest = std::max(biggest, std::abs(term[h]));
    }
    max_partial = std::max(max_partial, std::abs(total));

    // Advance every family to k + 1 and record the largest ratio.
    double max_ratio = 0.0;
    const double kd = static_cast<double>(k);
    for (std::size_t h = 0; h < families; ++h) {
      const double bh = prob.minus_num[h];
      double r = -w / (kd + 1.0);
      for (std::size_t j = 0; j < families; ++j) {
        if (j != h) r /= prob.minus_num[j] - bh - kd - 1.0;
      }
      for (double a : prob.plus_num) r *= 1.0 - a + bh + kd;
      for (double d : prob.plus_den) r /= 1.0 - d + bh + kd;
      for (double a : prob.minus_den) r *= a - bh - kd - 1.0;
      term[h] *= r;
      max_ratio = std::max(max_ratio, std::abs(r));
    }

    if (biggest == 0.0 && total == 0.0) {
      quiet = 3;
    } else if (max_ratio < 0.5 && biggest <= tol * std::abs(total)) {
      ++quiet;
    } else {
      quiet = 0;
    }
    if (quiet >= 3) break;
  }
  out.work.terms = static_cast<std::size_t>(std::min(k + 1, max_terms)) * families;
  out.value = total;
  double family_scale = 0.0;
  for (double s : partial) family_scale += std::abs(s);
  double truncation = 0.0;
  for (double t : term) truncation += std::abs(t);
  out.abs_err_est = 10.0 * kEps * (abs_total + family_scale) + truncation;
  if (max_partial > 1e8 * std::abs(total)) {
    out.warnings.emplace_back(kCancellationWarning);
  }
  if (quiet < 3) {
    std::ostringstream msg;
    msg << "residue series did not converge in " << max_terms << " terms at w = " << w;
    throw ToleranceNotReached(msg.str(), out);
  }
  return out;
}

}  // namespace

Strip GParams131::pole_strip() const {
  return {std::max({a1, a2, a3}) - 1.0, b1};
}

void GParams131::validate() const {
  for (double a : upper()) {
    if (!std::isfinite(a)) throw InvalidParameters("G parameters must be finite");
    if (is_positive_integer(a - b1)) {
      std::ostringstream msg;
      msg << "a_k - b1 = " << a - b1 << " is a positive integer";
      throw InvalidParameters(msg.str());
    }
  }
  if (!std::isfinite(b1)) throw InvalidParameters("G parameters must be finite");
  if (pole_strip().width() <= 0.0) {
    throw InvalidParameters("pole-separation strip is empty");
  }
}

ConvergenceCase convergence_case(const GParams131& params, double arg_z, double xi) {
  const double lambda = params.lambda();
  const double bound = lambda * kPi;
  const double abs_arg = std::abs(arg_z);
  constexpr double eps = 1e-12;
  if (lambda > 0.0 && abs_arg < bound - eps) return ConvergenceCase::interior;
  if (lambda >= 0.0 && std::abs(abs_arg - bound) <= eps) {
    constexpr int p = GParams131::p, q = GParams131::q;
    if (p == q) {
      return params.omega() < -1.0 ? ConvergenceCase::boundary_p_eq_q : ConvergenceCase::divergent;
    }
    const double lhs = (q - p) * xi;
    const double rhs = 1.0 - 0.5 * (q - p) + params.omega();
    return lhs > rhs ? ConvergenceCase::boundary_p_ne_q : ConvergenceCase::divergent;
  }
  return ConvergenceCase::divergent;
}

FlippedParams3113 flip_to_3113(const GParams131& params) {
  return {1.0 - params.b1, {1.0 - params.a1, 1.0 - params.a2, 1.0 - params.a3}};
}

Complex contour_integrand(const GParams131& params, double z, Complex s) {
  Complex log_f = gamma::log_gamma(params.b1 - s) + s * std::log(z);
  for (double a : params.upper()) log_f += gamma::log_gamma(1.0 - a + s);
  return std::exp(log_f);
}

double contour_envelope(const GParams131& params, double z, double xi, double eta) {
  // |Gamma(x + i y)| ~ sqrt(2 pi) |y|^(x - 1/2) exp(-pi |y| / 2); a factor 2
  // covers the O(1/|y|) correction for |y| >= 2 and the parameter ranges used.
  const double y = std::max(std::abs(eta), 2.0);
  const double a_sum = params.a1 + params.a2 + params.a3;
  const double power = params.b1 + 2.0 * xi + 1.0 - a_sum;
  return 2.0 * 4.0 * kPi * kPi * std::pow(y, power) * std::exp(-2.0 * kPi * y) * std::pow(z, xi);
}

EvaluationResult contour_1331(const GParams131& params, double z, const ContourSpec& spec,
                              ContourDiagnostics* diagnostics) {
  require_positive_argument(z, "contour_1331");
  params.validate();
  const Strip strip = params.pole_strip();
  const double xi = spec.xi.value_or(strip.midpoint());
  if (!strip.contains(xi)) {
    std::ostringstream msg;
    msg << "contour abscissa " << xi << " outside the strip (" << strip.lo << ", " << strip.hi << ")";
    throw InvalidParameters(msg.str());
  }
  if (convergence_case(params, 0.0, xi) != ConvergenceCase::interior) {
    throw InvalidParameters("line integral does not converge");
  }

  const auto f = [&](double eta) { return contour_integrand(params, z, Complex(xi, eta)); };
  const double scale = std::abs(f(0.0));
  const double tail_tol = std::max(scale, 1e-300) * 1e-17;

  // Truncation height from the exp(-2 pi |eta|) envelope.
  const double a_sum = params.a1 + params.a2 + params.a3;
  const double power = params.b1 + 2.0 * xi + 1.0 - a_sum;
  double tmax = spec.tmax;
  double tail = 0.0;
  const auto tail_bound = [&](double t) {
    const double rate = 2.0 * kPi - std::max(power, 0.0) / t;
    return contour_envelope(params, z, xi, t) / rate;
  };
  if (tmax <= 0.0) {
    tmax = 2.0;
    while ((tail_bound(tmax) > tail_tol || contour_envelope(params, z, xi, tmax) > tail_tol / (10.0 * tmax)) &&
           tmax < 200.0) {
      tmax += 0.5;
    }
    while (std::abs(f(tmax)) > tail_tol / (10.0 * tmax) && tmax < 200.0) tmax += 1.0;
  }
  tail = tail_bound(tmax);

  // Initial partition resolves the exp(i eta log z) oscillation.
  const double lo = spec.full_line ? -tmax : 0.0;
  const double span = tmax - lo;
  const double period = 2.0 * kPi / std::max(std::abs(std::log(z)), 1e-3);
  const std::size_t initial = static_cast<std::size_t>(
      std::clamp(std::ceil(span / std::min(1.0, 0.5 * period)), 1.0, 2000.0));

  std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> queue;
  double total = 0.0, total_imag = 0.0, total_err = 0.0, total_abs = 0.0;
  for (std::size_t i = 0; i < initial; ++i) {
    const double a = lo + span * static_cast<double>(i) / static_cast<double>(initial);
    const double b = lo + span * static_cast<double>(i + 1) / static_cast<double>(initial);
    Segment s = gk21(f, a, b);
    total += s.value;
    total_imag += s.imag;
    total_err += s.error;
    total_abs += s.abs_sum;
    queue.push(s);
  }
  std::size_t evaluations = 21 * initial;
  while (queue.size() < spec.max_intervals) {
    const double target = std::max(spec.rel_tol * std::abs(total), 50.0 * kEps * total_abs);
    if (total_err <= target) break;
    Segment worst = queue.top();
    // The worst panel is already at its rounding floor: bisection cannot help.
    if (worst.error <= 50.0 * kEps * worst.abs_sum * (1.0 + 1e-9)) break;
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk21(f, worst.a, mid);
    Segment right = gk21(f, mid, worst.b);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    total_imag += left.imag + right.imag - worst.imag;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_sum + right.abs_sum - worst.abs_sum;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in interval order so the result does not depend on heap layout.
  std::vector<Segment> pieces;
  pieces.reserve(queue.size());
  while (!queue.empty()) {
    pieces.push_back(queue.top());
    queue.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double value = 0.0, imag = 0.0, err = 0.0;
  for (const Segment& s : pieces) {
    value += s.value;
    imag += s.imag;
    err += s.error;
  }

  const double norm = spec.full_line ? 1.0 / (2.0 * kPi) : 1.0 / kPi;
  EvaluationResult out;
  out.method = Method::contour;
  out.value = value * norm;
  out.imag_residue = spec.full_line ? imag * norm : 0.0;
  out.abs_err_est = (err + (spec.full_line ? 2.0 : 1.0) * tail) * norm;
  out.work.panels = pieces.size();
  out.work.evaluations = evaluations;
  if (diagnostics != nullptr) {
    diagnostics->xi = xi;
    diagnostics->tmax = tmax;
    diagnostics->envelope_at_tmax = contour_envelope(params, z, xi, tmax);
    diagnostics->integrand_at_tmax = std::abs(f(tmax));
    diagnostics->tail_bound = tail;
    diagnostics->threshold = tail_tol / (10.0 * tmax);
  }
  if (pieces.size() >= spec.max_intervals &&
      err > std::max(spec.rel_tol * std::abs(value), 100.0 * kEps * total_abs)) {
    throw ToleranceNotReached("contour quadrature hit the interval cap", out);
  }
  return out;
}

EvaluationResult residue_series_3113(const FlippedParams3113& params, double w, double tol,
                                     int max_terms) {
  if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("residue_series_3113: w must be >= 0");
  ResidueProblem prob;
  prob.minus_num.assign(params.beta.begin(), params.beta.end());
  prob.plus_num = {params.alpha};
  return sum_residues(prob, w, tol, max_terms);
}

EvaluationResult small_z_expansion_1331(const GParams131& params, double z) {
  require_positive_argument(z, "small_z_expansion_1331");
  params.validate();
  const auto upper = params.upper();
  double term = std::pow(z, params.b1);
  for (double a : upper) term *= checked_tgamma(1.0 - a + params.b1, "small-z expansion");

  EvaluationResult out;
  out.method = Method::limit;
  double sum = 0.0;
  double abs_sum = 0.0;
  double smallest = std::abs(term);
  int j = 0;
  for (; j < 200; ++j) {
    sum += term;
    abs_sum += std::abs(term);
    double ratio = -z / (j + 1.0);
    for (double a : upper) ratio *= 1.0 - a + params.b1 + j;
    const double next = term * ratio;
    if (std::abs(next) >= smallest && std::abs(ratio) >= 1.0) {
      // Terms started growing: optimal truncation reached.
      break;
    }
    smallest = std::abs(next);
    term = next;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum) && std::abs(ratio) < 0.5) {
      ++j;
      break;
    }
  }
  out.value = sum;
  out.abs_err_est = std::abs(term) + 4.0 * kEps * abs_sum;
  out.work.terms = static_cast<std::size_t>(j + 1);
  return out;
}

EvaluationResult g_1331(const GParams131& params, double z, const GOptions& options) {
  require_positive_argument(z, "g_1331");
  params.validate();
  GMethod method = options.method;
  if (method == GMethod::automatic) {
    if (z <= options.limit_max_z) {
      method = GMethod::limit;
    } else if (1.0 / z <= options.residue_max_w) {
      method = GMethod::residue_series;
    } else {
      method = GMethod::contour;
    }
  }
  switch (method) {
    case GMethod::contour:
      return contour_1331(params, z, options.contour);
    case GMethod::residue_series:
      return residue_series_3113(flip_to_3113(params), 1.0 / z, options.series_tol, options.max_terms);
    case GMethod::limit:
      return small_z_expansion_1331(params, z);
    case GMethod::automatic:
      break;
  }
  throw InvalidParameters("unknown G evaluation method");
}

EvaluationResult g_1331(const GParams131& params, double z, GMethod method) {
  GOptions options;
  options.method = method;
  return g_1331(params, z, options);
}

EvaluationResult g_1331_cross_checked(const GParams131& params, double z, const GOptions& options) {
  GOptions contour = options;
  contour.method = GMethod::contour;
  GOptions residue = options;
  residue.method = GMethod::residue_series;
  EvaluationResult c = g_1331(params, z, contour);
  EvaluationResult r = g_1331(params, z, residue);
  const double combined = c.abs_err_est + r.abs_err_est;
  if (std::abs(c.value - r.value) > 10.0 * combined) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "contour " << c.value << " vs residue series " << r.value << " at z = " << z
        << " (combined estimate " << combined << ")";
    throw MethodDisagreement(msg.str(), c, r);
  }
  // Report the route with the smaller estimate, with the disagreement folded in.
  EvaluationResult best = c.abs_err_est <= r.abs_err_est ? c : r;
  best.abs_err_est = std::max(best.abs_err_est, std::abs(c.value - r.value));
  best.work.evaluations = c.work.evaluations + r.work.evaluations;
  best.work.terms = c.work.terms + r.work.terms;
  best.work.panels = c.work.panels;
  return best;
}

namespace {

double g102_via_residues(double lower1, double lower2, double x) {
  if (!(std::abs(x) < 50.0)) throw DomainError("sin/cos via G: |x| must be below 50");
  ResidueProblem prob;
  prob.minus_num = {lower1};
  prob.plus_den = {lower2};
  // Terms of this 0F1 series peak near exp(|x|); stop only on rounding.
  return std::sqrt(kPi) * sum_residues(prob, 0.25 * x * x, 1e-17, 400).value;
}

}  // namespace

double sin_via_g(double x) {
  const double v = g102_via_residues(0.5, 0.0, x);
  return x < 0.0 ? -v : v;
}

double cos_via_g(double x) { return g102_via_residues(0.0, 0.5, x); }

}  // namespace ramanujan::meijer
