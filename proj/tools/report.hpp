#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trimoments::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// Result of one command: its exact values and the checks it ran.
struct Report {
  std::string command;
  Json data = Json::object();
  std::vector<Check> checks;

  bool passed() const;
  void check(std::string name, bool passed, std::string detail = {});

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
/// Throws std::invalid_argument on a malformed document.
Report report_from_json(const Json& j);

std::string render_json(const Report& r);
Report parse_report(std::string_view text);

/// Human-readable rendering: data fields, tables for arrays of records,
/// then one PASS/FAIL line per check.
std::string render_text(const Report& r);

}  // namespace trimoments::cli
