#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ramanujan/laplace.hpp"
#include "ramanujan/meijer_g.hpp"
#include "ramanujan/report.hpp"
#include "ramanujan/suite.hpp"

namespace {

using namespace ramanujan;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConfig = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitDisagreement = 4;

struct Globals {
  std::string config_path;
  std::vector<std::string> overrides;
  bool json = false;
};

suite::SuiteConfig load_config(const Globals& g) {
  suite::SuiteConfig cfg;
  if (const char* env = std::getenv("RAMANUJAN_CONFIG"); env != nullptr && *env != '\0') {
    report::apply_config_file(env, cfg);
  }
  if (!g.config_path.empty()) report::apply_config_file(g.config_path, cfg);
  for (const auto& kv : g.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw report::ConfigError("--set expects key=value, got '" + kv + "'");
    report::apply_config_value(std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1), cfg);
  }
  return cfg;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

void print_result(const std::string& what, const EvaluationResult& r, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["quantity"] = what;
    j["value"] = r.value;
    j["abs_err_est"] = r.abs_err_est;
    j["method"] = std::string(to_string(r.method));
    j["terms"] = r.work.terms;
    j["panels"] = r.work.panels;
    j["evaluations"] = r.work.evaluations;
    j["warnings"] = r.warnings;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "quantity     " << what << '\n'
            << "value        " << num(r.value) << '\n'
            << "error_est    " << num(r.abs_err_est) << '\n'
            << "method       " << to_string(r.method) << '\n'
            << "terms        " << r.work.terms << '\n'
            << "panels       " << r.work.panels << '\n'
            << "evaluations  " << r.work.evaluations << '\n';
  for (const auto& w : r.warnings) std::cout << "warning      " << w << '\n';
}

meijer::GMethod parse_method(const std::string& m) {
  if (m == "auto") return meijer::GMethod::automatic;
  if (m == "contour") return meijer::GMethod::contour;
  if (m == "residue" || m == "residue-series") return meijer::GMethod::residue_series;
  if (m == "limit") return meijer::GMethod::limit;
  throw DomainError("unknown method '" + m + "' (expected auto, contour, residue-series, limit)");
}

laplace::Route parse_laplace_route(const std::string& r) {
  if (r == "g" || r == "gfunc" || r == "series") return laplace::Route::g_function;
  if (r == "quadrature") return laplace::Route::quadrature;
  throw DomainError("unknown route '" + r + "' (expected g, quadrature)");
}

suite::Route parse_route(const std::string& r) {
  if (r == "series") return suite::Route::series;
  if (r == "quadrature") return suite::Route::quadrature;
  throw DomainError("unknown route '" + r + "' (expected series, quadrature)");
}

meijer::GParams131 parse_params(const std::string& text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(report::parse_real(part));
  if (v.size() != 4) throw DomainError("--params expects a1,a2,a3,b1");
  return {v[0], v[1], v[2], v[3]};
}

EvaluationResult run_gfunc(const meijer::GParams131& p, double z, const std::string& method,
                           const suite::SuiteConfig& cfg, std::optional<double> tol) {
  meijer::GOptions opt = cfg.g;
  opt.method = parse_method(method);
  if (tol) {
    opt.contour.rel_tol = *tol;
    opt.series_tol = *tol;
  }
  return meijer::g_1331(p, z, opt);
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const report::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ToleranceNotReached& e) {
    std::cerr << "tolerance not reached: " << e.what() << '\n'
              << "best value " << num(e.best().value) << " +/- " << num(e.best().abs_err_est) << '\n';
    return kExitTolerance;
  } catch (const MethodDisagreement& e) {
    std::cerr << "method disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate Ramanujan's oscillatory integrals and verify their identities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", report::kToolVersion);

  Globals globals;
  app.add_option("--config", globals.config_path, "key=value config file (default: $RAMANUJAN_CONFIG)");
  app.add_option("--set", globals.overrides, "override one config key, key=value")->take_all();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  std::string quantity, arg_text, route = "series", params_text, kernel_text = "sin", alpha_text = "1",
                                  method = "auto";
  std::optional<double> tol;
  eval->add_option("quantity", quantity, "phi1 psi1 phi2 psi2 phi3 psi3 psi3star gfunc laplace")->required();
  eval->add_option("arg", arg_text, "n (or z for gfunc, beta for laplace); decimal or p/q")->required();
  eval->add_option("--route", route, "series|quadrature (laplace: g|quadrature)");
  eval->add_option("--tol", tol, "target tolerance");
  eval->add_option("--params", params_text, "gfunc parameters a1,a2,a3,b1");
  eval->add_option("--method", method, "gfunc method: auto|contour|residue-series|limit");
  eval->add_option("--kernel", kernel_text, "laplace kernel: sin|cos|xsin|xcos");
  eval->add_option("--alpha", alpha_text, "laplace alpha");
  eval->add_flag("--json", globals.json, "print the result as JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, format_text = "markdown", out_path;
  verify->add_option("suite", suite_name, "theorems|identities|closed-forms|series-values|all")->required();
  verify->add_option("--format", format_text, "json|csv|markdown");
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  // gfunc
  auto* gfunc = app.add_subcommand("gfunc", "evaluate G^{1,3}_{3,1}(z | a1,a2,a3; b1)");
  std::vector<std::string> g_args;
  std::string g_method = "auto";
  gfunc->add_option("values", g_args, "a1 a2 a3 b1 z")->required()->expected(5);
  gfunc->add_option("--method", g_method, "auto|contour|residue-series|limit");
  gfunc->add_flag("--json", globals.json, "print the result as JSON");

  // laplace
  auto* lap = app.add_subcommand("laplace", "Laplace transform of sin/cos(beta x^2) kernels");
  std::vector<std::string> l_args;
  std::string l_route = "g";
  lap->add_option("values", l_args, "kernel alpha beta")->required()->expected(3);
  lap->add_option("--route", l_route, "g|quadrature");
  lap->add_flag("--json", globals.json, "print the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  suite::SuiteConfig cfg;
  if (const int rc = guarded([&] {
        cfg = load_config(globals);
        return kExitOk;
      });
      rc != kExitOk) {
    return kExitConfig;
  }

  if (*eval) {
    return guarded([&] {
      const double arg = report::parse_real(arg_text);
      if (quantity == "gfunc") {
        if (params_text.empty()) throw DomainError("gfunc needs --params a1,a2,a3,b1");
        print_result("gfunc(" + arg_text + ")", run_gfunc(parse_params(params_text), arg, method, cfg, tol),
                     globals.json);
        return kExitOk;
      }
      if (quantity == "laplace") {
        const laplace::LaplaceRequest req{laplace::parse_kernel(kernel_text), report::parse_real(alpha_text), arg};
        const auto r = route == "series" ? laplace::Route::g_function : parse_laplace_route(route);
        print_result("laplace " + kernel_text + "(alpha=" + alpha_text + ", beta=" + arg_text + ")",
                     laplace::laplace_eval(req, r, cfg.g), globals.json);
        return kExitOk;
      }
      const suite::Family f = suite::parse_family(quantity);
      if (tol) {
        cfg.series_tol = *tol;
        cfg.quadrature_tol = *tol;
      }
      print_result(std::string(to_string(f)) + "(" + arg_text + ")",
                   suite::eval_quantity({f, arg}, parse_route(route), cfg), globals.json);
      return kExitOk;
    });
  }

  if (*verify) {
    return guarded([&] {
      if (!report::is_suite_name(suite_name)) throw report::ConfigError("unknown suite '" + suite_name + "'");
      const report::Format format = report::parse_format(format_text);
      const report::RunReport rep = report::run_suite(suite_name, cfg);
      const std::string text = report::render(rep, format);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw report::ConfigError("cannot write '" + out_path + "'");
        out << text;
      }
      const report::Summary s = rep.summary();
      std::cerr << suite_name << ": " << s.pass << " pass, " << s.fail << " fail, " << s.flagged << " flagged of "
                << s.total << '\n';
      return s.fail == 0 ? kExitOk : kExitFailure;
    });
  }

  if (*gfunc) {
    return guarded([&] {
      const meijer::GParams131 p{report::parse_real(g_args[0]), report::parse_real(g_args[1]),
                                 report::parse_real(g_args[2]), report::parse_real(g_args[3])};
      print_result("gfunc(" + g_args[4] + ")", run_gfunc(p, report::parse_real(g_args[4]), g_method, cfg, {}),
                   globals.json);
      return kExitOk;
    });
  }

  return guarded([&] {
    const laplace::LaplaceRequest req{laplace::parse_kernel(l_args[0]), report::parse_real(l_args[1]),
                                      report::parse_real(l_args[2])};
    print_result("laplace " + l_args[0] + "(alpha=" + l_args[1] + ", beta=" + l_args[2] + ")",
                 laplace::laplace_eval(req, parse_laplace_route(l_route), cfg.g), globals.json);
    return kExitOk;
  });
}
