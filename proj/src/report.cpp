#include "ramanujan/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace ramanujan::report {

namespace {

using nlohmann::ordered_json;
using suite::Status;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_decimal(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw DomainError("empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string label(double n) {
  for (const auto& [v, l] : suite::theorem_grid()) {
    if (v == n) return l;
  }
  std::ostringstream s;
  s << n;
  return s.str();
}

ReportItem from_identity(const std::string& suite_name, const suite::IdentityReport& r) {
  ReportItem it;
  it.suite = suite_name;
  it.id = r.id + " n=" + label(r.n);
  it.n = r.n;
  it.lhs = r.lhs;
  it.rhs = r.rhs;
  it.abs_residual = r.abs_residual;
  it.rel_residual = r.rel_residual;
  it.status = r.pass ? Status::pass : Status::fail;
  it.method_lhs = r.method_lhs;
  it.method_rhs = r.method_rhs;
  it.terms = r.work.terms;
  it.panels = r.work.panels;
  return it;
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

void add_theorems(RunReport& rep) {
  using suite::Route;
  using suite::Theorem;
  for (Theorem t : {Theorem::I, Theorem::II, Theorem::III, Theorem::III_star}) {
    for (const auto& [n, l] : suite::theorem_grid()) {
      suite::IdentityReport r;
      const double ms = timed([&] { r = suite::theorem_check(t, n, Route::quadrature, rep.config); });
      ReportItem it = from_identity("theorems", r);
      it.id = "theorem-" + it.id;
      it.time_ms = ms;
      rep.items.push_back(std::move(it));
    }
  }
}

void add_identities(RunReport& rep) {
  using suite::SumIdentity;
  for (SumIdentity s : {SumIdentity::I, SumIdentity::I_dual, SumIdentity::II, SumIdentity::II_dual,
                        SumIdentity::III_star, SumIdentity::III}) {
    for (const auto& [n, l] : suite::identity_grid()) {
      suite::IdentityReport r;
      const double ms = timed([&] { r = suite::summation_identity_check(s, n, rep.config); });
      ReportItem it = from_identity("identities", r);
      it.time_ms = ms;
      rep.items.push_back(std::move(it));
    }
  }
}

void add_entries(RunReport& rep, const std::string& suite_name,
                 const std::function<std::vector<suite::ClosedFormEntry>()>& build, bool printed_is_rhs) {
  std::vector<suite::ClosedFormEntry> entries;
  const double ms = timed([&] { entries = build(); });
  for (const auto& e : entries) {
    ReportItem it;
    it.suite = suite_name;
    it.id = e.id;
    it.n = e.arg;
    it.lhs = e.computed;
    it.method_lhs = e.computed_method;
    if (printed_is_rhs) {
      it.rhs = e.exact;
      it.method_rhs = "closed-form";
      it.alternate = Alternate{e.oracle_method, e.oracle};
    } else {
      it.rhs = e.oracle;
      it.method_rhs = e.oracle_method;
    }
    it.abs_residual = std::abs(it.lhs - it.rhs);
    it.rel_residual = rel(it.lhs, it.rhs);
    it.status = e.status;
    it.terms = e.work.terms;
    it.panels = e.work.panels;
    it.time_ms = ms / static_cast<double>(entries.size());
    it.printed = Printed{e.expression, e.exact, e.decimal};
    rep.items.push_back(std::move(it));
  }
}

ordered_json item_json(const ReportItem& it) {
  ordered_json j;
  j["suite"] = it.suite;
  j["id"] = it.id;
  if (it.n) j["n"] = *it.n;
  j["lhs"] = it.lhs;
  j["rhs"] = it.rhs;
  j["abs_residual"] = it.abs_residual;
  j["rel_residual"] = it.rel_residual;
  j["status"] = std::string(to_string(it.status));
  j["method_lhs"] = it.method_lhs;
  j["method_rhs"] = it.method_rhs;
  j["terms"] = it.terms;
  j["panels"] = it.panels;
  j["time_ms"] = it.time_ms;
  if (it.printed) {
    j["printed"] = {{"expression", it.printed->expression},
                    {"value", it.printed->value},
                    {"decimal", it.printed->decimal}};
  }
  if (it.alternate) j["alternate"] = {{"method", it.alternate->method}, {"value", it.alternate->value}};
  return j;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Summary RunReport::summary() const {
  Summary s;
  for (const auto& it : items) {
    ++s.total;
    switch (it.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::flagged:
        ++s.flagged;
        break;
    }
  }
  return s;
}

bool is_suite_name(std::string_view name) {
  return name == "theorems" || name == "identities" || name == "closed-forms" || name == "series-values" ||
         name == "all";
}

RunReport run_suite(std::string_view name, const suite::SuiteConfig& cfg) {
  if (!is_suite_name(name)) throw ConfigError("unknown suite '" + std::string(name) + "'");
  RunReport rep;
  rep.suite = std::string(name);
  rep.config = cfg;
  const bool all = name == "all";
  if (all || name == "closed-forms") {
    add_entries(rep, "closed-forms", [&] { return suite::closed_form_catalog(cfg); }, true);
  }
  if (all || name == "theorems") add_theorems(rep);
  if (all || name == "identities") add_identities(rep);
  if (all || name == "series-values") {
    add_entries(rep, "series-values", [&] { return suite::series_value_table(cfg); }, false);
  }
  return rep;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "markdown" || name == "md") return Format::markdown;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected json, csv, markdown)");
}

ordered_json config_json(const suite::SuiteConfig& cfg) {
  ordered_json c;
  c["identity_tol"] = cfg.identity_tol;
  c["closed_form_tol"] = cfg.closed_form_tol;
  c["series_value_tol"] = cfg.series_value_tol;
  c["flag_tol"] = cfg.flag_tol;
  c["quadrature_tol"] = cfg.quadrature_tol;
  c["series_tol"] = cfg.series_tol;
  c["contour"] = {{"xi", cfg.g.contour.xi ? ordered_json(*cfg.g.contour.xi) : ordered_json("strip-midpoint")},
                  {"tmax", cfg.g.contour.tmax},
                  {"rel_tol", cfg.g.contour.rel_tol},
                  {"max_intervals", cfg.g.contour.max_intervals}};
  c["g_series_tol"] = cfg.g.series_tol;
  c["g_max_terms"] = cfg.g.max_terms;
  c["residue_max_w"] = cfg.g.residue_max_w;
  c["limit_max_z"] = cfg.g.limit_max_z;
  return c;
}

ordered_json to_json(const RunReport& report) {
  ordered_json j;
  j["schema"] = kSchemaId;
  j["tool_version"] = kToolVersion;
  j["suite"] = report.suite;
  j["config"] = config_json(report.config);
  j["items"] = ordered_json::array();
  for (const auto& it : report.items) j["items"].push_back(item_json(it));
  const Summary s = report.summary();
  j["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"flagged", s.flagged}};
  return j;
}

std::string render(const RunReport& report, Format format) {
  std::ostringstream out;
  const Summary s = report.summary();
  switch (format) {
    case Format::json:
      out << to_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      out << "suite,id,lhs,rhs,abs_residual,rel_residual,status,method_lhs,method_rhs,terms,panels,time_ms,"
             "printed_expression\n";
      for (const auto& it : report.items) {
        out << it.suite << ',' << csv_field(it.id) << ',' << fmt(it.lhs) << ',' << fmt(it.rhs) << ','
            << fmt(it.abs_residual) << ',' << fmt(it.rel_residual) << ',' << to_string(it.status) << ','
            << it.method_lhs << ',' << it.method_rhs << ',' << it.terms << ',' << it.panels << ','
            << fmt(it.time_ms) << ',' << (it.printed ? csv_field(it.printed->expression) : "") << '\n';
      }
      break;
    case Format::markdown:
      out << "# Verification report: " << report.suite << "\n\n";
      out << "| suite | id | lhs | rhs | rel. residual | status | printed |\n";
      out << "|---|---|---|---|---|---|---|\n";
      for (const auto& it : report.items) {
        out << "| " << it.suite << " | " << it.id << " | " << fmt(it.lhs) << " | " << fmt(it.rhs) << " | "
            << fmt(it.rel_residual) << " | " << to_string(it.status) << " | "
            << (it.printed ? "`" + it.printed->expression + "` = " + it.printed->decimal : "") << " |\n";
      }
      out << "\n**" << s.pass << " pass, " << s.fail << " fail, " << s.flagged << " flagged** of " << s.total
          << " checks\n";
      break;
  }
  return out.str();
}

double parse_real(std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  const double num = parse_decimal(std::string_view(s).substr(0, slash));
  const double den = parse_decimal(std::string_view(s).substr(slash + 1));
  if (den == 0.0) throw DomainError("zero denominator in '" + s + "'");
  return num / den;
}

void apply_config_value(std::string_view key_in, std::string_view value_in, suite::SuiteConfig& cfg) {
  const std::string key = trim(key_in);
  const std::string value = trim(value_in);
  auto positive = [&]() {
    double v = 0.0;
    try {
      v = parse_real(value);
    } catch (const DomainError& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("config key '" + key + "' must be positive");
    return v;
  };
  if (key == "identity_tol") {
    cfg.identity_tol = positive();
  } else if (key == "closed_form_tol") {
    cfg.closed_form_tol = positive();
  } else if (key == "series_value_tol") {
    cfg.series_value_tol = positive();
  } else if (key == "flag_tol") {
    cfg.flag_tol = positive();
  } else if (key == "quadrature_tol") {
    cfg.quadrature_tol = positive();
  } else if (key == "series_tol") {
    cfg.series_tol = positive();
  } else if (key == "contour_rel_tol") {
    cfg.g.contour.rel_tol = positive();
  } else if (key == "contour_tmax") {
    cfg.g.contour.tmax = positive();
  } else if (key == "contour_max_intervals") {
    cfg.g.contour.max_intervals = static_cast<std::size_t>(positive());
  } else if (key == "g_series_tol") {
    cfg.g.series_tol = positive();
  } else if (key == "g_max_terms") {
    cfg.g.max_terms = static_cast<int>(positive());
  } else if (key == "residue_max_w") {
    cfg.g.residue_max_w = positive();
  } else if (key == "limit_max_z") {
    cfg.g.limit_max_z = positive();
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_text(std::string_view text, suite::SuiteConfig& cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key=value");
    }
    apply_config_value(std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1), cfg);
  }
}

void apply_config_file(const std::string& path, suite::SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), cfg);
}

}  // namespace ramanujan::report
