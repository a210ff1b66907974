#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace trimoments::cli {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"command", r.command}, {"passed", r.passed()}, {"data", r.data}, {"checks", checks}};
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.data = j.at("data");
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const Report& r) { return to_json(r).dump(2); }

Report parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_record_array(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void render_table(std::ostringstream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto it = row.find(columns[c]);
      std::string cell = it == row.end() ? "" : scalar_text(*it);
      width[c] = std::max(width[c], cell.size());
      line.push_back(std::move(cell));
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
    }
    out << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v,
                  const std::string& indent) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, child] : v.items()) render_value(out, k, child, indent + "  ");
  } else if (is_record_array(v)) {
    out << indent << key << ":\n";
    render_table(out, v, indent + "  ");
  } else if (v.is_array()) {
    out << indent << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else {
    out << indent << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << '\n';
  for (const auto& [key, value] : r.data.items()) render_value(out, key, value, "  ");
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  out << (r.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

}  // namespace trimoments::cli
