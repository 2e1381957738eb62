#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace iwqm {

enum class OutputFormat { json, csv };

struct Check {
  std::string name;
  /// The identity or closed form this check measures.
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Tolerance was widened because the Fock truncation cannot reach the requested one.
  bool flagged = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  /// True iff every check passes.
  bool pass() const;

  /// Records residual <= tolerance (NaN fails).
  Check& add(std::string name, std::string anchor, double residual, double tolerance);
  /// Records a boolean outcome; residual is 0 on success and 1 on failure.
  Check& add_condition(std::string name, std::string anchor, bool holds);
};

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const Report& report);
/// {"suites": [...], "pass": bool}
nlohmann::json to_json(const std::vector<Report>& reports);

/// One header line, then suite,name,anchor,residual,tolerance,pass,flagged per check.
std::string to_csv(const std::vector<Report>& reports);

std::string render(const std::vector<Report>& reports, OutputFormat format);

bool all_pass(const std::vector<Report>& reports);

}  // namespace iwqm
