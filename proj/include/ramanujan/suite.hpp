#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramanujan/meijer_g.hpp"

namespace ramanujan::suite {

/// Phi1/Psi1: cos/sin(pi n x^2) / cosh(pi x)
/// Phi2/Psi2: cos/sin(pi n x^2) / (1 + 2 cosh(2 pi x / sqrt 3))
/// Phi3/Psi3Star: cos/sin(pi n x) / (exp(2 pi sqrt x) - 1)
/// Psi3 = 1/(2 pi n) + Psi3Star
enum class Family { Phi1, Psi1, Phi2, Psi2, Phi3, Psi3Star, Psi3 };

std::string_view to_string(Family f);
/// phi1, psi1, phi2, psi2, phi3, psi3star, psi3 (case-insensitive).
Family parse_family(std::string_view name);

struct RamanujanQuantity {
  Family family = Family::Phi1;
  double arg = 1.0;  ///< n > 0
};

enum class Route { series, quadrature };
std::string_view to_string(Route r);

struct SuiteConfig {
  double identity_tol = 1e-8;
  double closed_form_tol = 1e-10;  ///< absolute, quadrature against exact values
  double series_value_tol = 1e-8;  ///< relative, for series-value entries
  double flag_tol = 1e-6;          ///< relative gap that marks a printed value as suspect
  double quadrature_tol = 1e-12;
  double series_tol = 1e-12;
  meijer::GOptions g{};
};

/// Value of the quantity by direct quadrature or by the G-function series.
EvaluationResult eval_quantity(const RamanujanQuantity& q, Route route, const SuiteConfig& cfg = {});

/// Sum of G-function values that the series route scales by its prefactor:
///   Phi1/Psi1:     sum_r (-1)^r/(1+2r) G(64 n^2 / (pi^2 (1+2r)^4))
///   Phi2/Psi2:     sum_{p,q} (-1)^{p+q} C(p+q,p)/m G(36 n^2 / (pi^2 m^4)), m = 2q+p+1
///   Phi3/Psi3Star: sum_r 1/(r+1)^2 G(4 n^2 / (pi^2 (r+1)^4))
/// with the cosine-type parameter blocks for Phi and the sine-type for Psi.
EvaluationResult g_sum(Family f, double n, const SuiteConfig& cfg = {});

/// Phi2/Psi2 sum regrouped through
/// 1/(1 + 2 cosh t) = sum_k (e^{-(3k+1)t} - e^{-(3k+2)t}) into a single sum
/// over m = 1, 2, 4, 5, 7, ... with signs +, -, +, -, ... . A derived
/// cross-check of the double sum, not an independent representation.
EvaluationResult g_sum_regrouped(Family f, double n, const SuiteConfig& cfg = {});

/// Prefactor p with quantity = p * g_sum; the scale factor is 1/p.
double series_prefactor(Family f);

struct IdentityReport {
  std::string id;
  double n = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string method_lhs;
  std::string method_rhs;
  WorkCounters work{};
};

/// pass <=> |lhs - rhs| <= tol * max(1, |lhs|, |rhs|).
IdentityReport make_report(std::string id, double n, double lhs, double rhs, double tol);

/// Reciprocity relations between n and 1/n.
enum class Theorem {
  I,         ///< Phi1(n) = sqrt(2/n) Psi1(1/n) + Psi1(n)
  I_dual,    ///< Psi1(n) = sqrt(2/n) Phi1(1/n) - Phi1(n)
  II,        ///< Phi2(n) = sqrt(2/n) Psi2(1/n) + Psi2(n)
  II_dual,   ///< Psi2(n) = sqrt(2/n) Phi2(1/n) - Phi2(n)
  III,       ///< Phi3(n) = (1/n) sqrt(2/n) Psi3(1/n) - Psi3(n)
  III_dual,  ///< Psi3(n) = (1/n) sqrt(2/n) Phi3(1/n) + Phi3(n)
  III_star,  ///< Psi3*(n) = (1/n) sqrt(2/n) Phi3(1/n) + Phi3(n) - 1/(2 pi n)
};

std::string_view to_string(Theorem t);
IdentityReport theorem_check(Theorem which, double n, Route route, const SuiteConfig& cfg = {});

/// The reciprocity relations written directly as identities between sums of
/// G-function values (prefactors cancelled, constants carried explicitly).
enum class SumIdentity { I, I_dual, II, II_dual, III_star, III };

std::string_view to_string(SumIdentity s);
IdentityReport summation_identity_check(SumIdentity which, double n, const SuiteConfig& cfg = {});

enum class Status { pass, fail, flagged };
std::string_view to_string(Status s);

/// One exactly known value compared with two computations.
struct ClosedFormEntry {
  std::string id;
  Family family = Family::Phi1;
  double arg = 0.0;
  std::string arg_label;   ///< "2/5" etc.
  std::string expression;  ///< exact form as text
  double exact = 0.0;      ///< evaluate_expression(expression)
  std::string decimal;     ///< exact rendered to 12 significant digits
  double computed = 0.0;
  std::string computed_method;
  double oracle = 0.0;
  std::string oracle_method;
  Status status = Status::fail;
  WorkCounters work{};
};

/// The thirteen integrals with known values: quadrature (computed) and
/// G-function series (oracle) against the exact expression.
std::vector<ClosedFormEntry> closed_form_catalog(const SuiteConfig& cfg = {});

/// The thirteen published sums of G-function values: computed sum, the scaled
/// quadrature of the matching integral (oracle), and the published value.
/// flagged: both computations agree but the published value does not.
std::vector<ClosedFormEntry> series_value_table(const SuiteConfig& cfg = {});

/// Argument grids used by the verification suites.
const std::vector<std::pair<double, std::string>>& theorem_grid();
const std::vector<std::pair<double, std::string>>& identity_grid();

}  // namespace ramanujan::suite
