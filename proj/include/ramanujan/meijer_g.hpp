#pragma once

#include <array>
#include <optional>

#include "ramanujan/common.hpp"

namespace ramanujan::meijer {

/// Open interval of contour abscissae separating the two pole families.
struct Strip {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo < x && x < hi; }
};

/// Parameters of G^{1,3}_{3,1}(z | a1, a2, a3 ; b1).
struct GParams131 {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double b1 = 0.0;

  static constexpr int m = 1, n = 3, p = 3, q = 1;

  std::array<double, 3> upper() const { return {a1, a2, a3}; }
  /// m + n - (p + q)/2; always 2 for this order.
  double lambda() const { return m + n - 0.5 * (p + q); }
  /// sum of lower minus sum of upper parameters.
  double omega() const { return b1 - (a1 + a2 + a3); }
  /// (max_k a_k - 1, b1): left poles a_k - 1 - j, right poles b1 + j.
  Strip pole_strip() const;
  /// Throws InvalidParameters if some a_k - b1 is a positive integer or the
  /// pole-separation strip is empty.
  void validate() const;
};

/// The four parameter blocks of the sin / cos / x sin / x cos Laplace kernels.
namespace kernel_params {
inline constexpr GParams131 sine{0.25, 0.5, 0.75, 0.5};
inline constexpr GParams131 cosine{0.25, 0.75, 0.0, 0.0};
inline constexpr GParams131 x_sine{-0.25, 0.25, 0.5, 0.5};
inline constexpr GParams131 x_cosine{-0.25, 0.25, 0.0, 0.0};
inline constexpr std::array<GParams131, 4> all{sine, cosine, x_sine, x_cosine};
}  // namespace kernel_params

enum class ConvergenceCase {
  interior,           ///< |arg z| < Lambda pi, Lambda > 0
  boundary_p_eq_q,    ///< |arg z| = Lambda pi, p = q, re(omega) < -1
  boundary_p_ne_q,    ///< |arg z| = Lambda pi, p != q, (q-p) xi > 1 - (q-p)/2 + re(omega)
  divergent,
};

/// Classifies the line integral for arg(z) and abscissa xi. Only the interior
/// case is ever reached for z > 0; the boundary cases are checked for completeness.
ConvergenceCase convergence_case(const GParams131& params, double arg_z, double xi);

/// Parameters of G^{3,1}_{1,3}(w | alpha ; beta1, beta2, beta3).
struct FlippedParams3113 {
  double alpha = 0.0;
  std::array<double, 3> beta{};
};

/// G^{1,3}_{3,1}(z | a; b) = G^{3,1}_{1,3}(1/z | 1-b; 1-a).
FlippedParams3113 flip_to_3113(const GParams131& params);

struct ContourSpec {
  std::optional<double> xi;   ///< abscissa; default is the strip midpoint
  double tmax = 0.0;          ///< truncation height; 0 selects it from the envelope
  double rel_tol = 1e-14;
  bool full_line = false;     ///< integrate [-T, T] instead of folding by symmetry
  std::size_t max_intervals = 4000;
};

struct ContourDiagnostics {
  double xi = 0.0;
  double tmax = 0.0;
  double envelope_at_tmax = 0.0;   ///< analytic bound on |integrand| at eta = T
  double integrand_at_tmax = 0.0;  ///< computed |integrand| at eta = T
  double tail_bound = 0.0;         ///< bound on the neglected |eta| > T part
  double threshold = 0.0;          ///< tol / (10 T)
};

/// Mellin-Barnes line integral (1/2 pi i) int Gamma(b1-s) prod Gamma(1-a_k+s) z^s ds
/// along re(s) = xi, by adaptive Gauss-Kronrod on [0, T].
EvaluationResult contour_1331(const GParams131& params, double z, const ContourSpec& spec = {},
                              ContourDiagnostics* diagnostics = nullptr);

/// |integrand| bound on the line re(s) = xi at height eta from Stirling's formula.
double contour_envelope(const GParams131& params, double z, double xi, double eta);

/// Complex integrand of the line integral at s = xi + i eta.
Complex contour_integrand(const GParams131& params, double z, Complex s);

/// Sum of residues at the poles of the three Gamma(beta_j - s) factors; each
/// family is a 1F2 power series in -w. Convergent for every w > 0 but subject to
/// cancellation of order exp(2 sqrt(w)).
EvaluationResult residue_series_3113(const FlippedParams3113& params, double w,
                                     double tol = 1e-16, int max_terms = 400);

/// Small-z expansion from the right poles b1 + j, truncated where its terms
/// are below rounding. Used only for z <= 1e-3, where the omitted remainder is
/// below exp(-2/sqrt(z)).
EvaluationResult small_z_expansion_1331(const GParams131& params, double z);

enum class GMethod { automatic, contour, residue_series, limit };

struct GOptions {
  GMethod method = GMethod::automatic;
  ContourSpec contour{};
  double series_tol = 1e-16;
  int max_terms = 400;
  double residue_max_w = 4.0;  ///< automatic: residue series when 1/z <= this
  double limit_max_z = 1e-3;   ///< automatic: small-z expansion when z <= this
};

/// G^{1,3}_{3,1}(z | a1,a2,a3; b1) for z > 0.
EvaluationResult g_1331(const GParams131& params, double z, const GOptions& options = {});
EvaluationResult g_1331(const GParams131& params, double z, GMethod method);

/// Evaluates by contour and residue series and throws MethodDisagreement when
/// they differ by more than 10x their combined error estimates.
EvaluationResult g_1331_cross_checked(const GParams131& params, double z,
                                      const GOptions& options = {});

/// sqrt(pi) G^{1,0}_{0,2}(x^2/4 | 1/2, 0) and sqrt(pi) G^{1,0}_{0,2}(x^2/4 | 0, 1/2).
/// Residue series only; absolute error grows like eps * exp(|x|), about 1e-9 at |x| = 18.
double sin_via_g(double x);
double cos_via_g(double x);

}  // namespace ramanujan::meijer
