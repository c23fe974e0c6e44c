#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ramanujan/suite.hpp"

namespace ramanujan::report {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaId = "ramanujan-run-report/1";

struct Printed {
  std::string expression;
  double value = 0.0;
  std::string decimal;
};

struct Alternate {
  std::string method;
  double value = 0.0;
};

struct ReportItem {
  std::string suite;
  std::string id;
  std::optional<double> n;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  suite::Status status = suite::Status::fail;
  std::string method_lhs;
  std::string method_rhs;
  std::size_t terms = 0;
  std::size_t panels = 0;
  double time_ms = 0.0;
  std::optional<Printed> printed;
  std::optional<Alternate> alternate;
};

struct Summary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t flagged = 0;
};

struct RunReport {
  std::string suite;
  suite::SuiteConfig config;
  std::vector<ReportItem> items;

  Summary summary() const;
};

/// theorems, identities, closed-forms, series-values, all.
bool is_suite_name(std::string_view name);
RunReport run_suite(std::string_view name, const suite::SuiteConfig& cfg);

enum class Format { json, csv, markdown };
Format parse_format(std::string_view name);

nlohmann::ordered_json to_json(const RunReport& report);
std::string render(const RunReport& report, Format format);

/// Configuration echo as written to reports.
nlohmann::ordered_json config_json(const suite::SuiteConfig& cfg);

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Applies key=value lines ('#' comments, blank lines allowed) to cfg.
/// Throws ConfigError on unknown keys or unparsable values.
void apply_config_text(std::string_view text, suite::SuiteConfig& cfg);
void apply_config_file(const std::string& path, suite::SuiteConfig& cfg);
/// Sets one key; shared by config files and command-line overrides.
void apply_config_value(std::string_view key, std::string_view value, suite::SuiteConfig& cfg);

/// Decimal ("0.4", "1e-3") or rational ("2/5") real.
double parse_real(std::string_view text);

}  // namespace ramanujan::report
