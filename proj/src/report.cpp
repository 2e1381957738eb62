#include "iwqm/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace iwqm {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& Report::add(std::string name, std::string anchor, double residual, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  checks.push_back(std::move(c));
  return checks.back();
}

Check& Report::add_condition(std::string name, std::string anchor, bool holds) {
  return add(std::move(name), std::move(anchor), holds ? 0.0 : 1.0, 0.0);
}

nlohmann::json to_json(const Check& check) {
  nlohmann::json j = {{"name", check.name},
                      {"anchor", check.anchor},
                      {"residual", std::isfinite(check.residual) ? nlohmann::json(check.residual)
                                                                 : nlohmann::json(nullptr)},
                      {"tolerance", check.tolerance},
                      {"pass", check.pass}};
  if (check.flagged) j["flagged"] = "truncation-limited";
  if (!check.note.empty()) j["note"] = check.note;
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"suite", report.suite}, {"checks", std::move(checks)}, {"pass", report.pass()}};
}

nlohmann::json to_json(const std::vector<Report>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) suites.push_back(to_json(r));
  return {{"suites", std::move(suites)}, {"pass", all_pass(reports)}};
}

namespace {

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

std::string to_csv(const std::vector<Report>& reports) {
  std::string out = "suite,name,anchor,residual,tolerance,pass,flagged\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out += fmt::format("{},{},{},{:.17g},{:.17g},{},{}\n", csv_field(r.suite), csv_field(c.name),
                         csv_field(c.anchor), c.residual, c.tolerance, c.pass ? "true" : "false",
                         c.flagged ? "true" : "false");
    }
  }
  return out;
}

std::string render(const std::vector<Report>& reports, OutputFormat format) {
  if (format == OutputFormat::csv) return to_csv(reports);
  return to_json(reports).dump(2) + "\n";
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass(); });
}

}  // namespace iwqm
