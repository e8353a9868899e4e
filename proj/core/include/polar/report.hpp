#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polar {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Machine-readable verification report. JSON output is deterministic for
/// identical inputs; wall_time_ms is reported separately by the CLI.
struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Check> checks;
  std::int64_t wall_time_ms = 0;
  bool partial = false;  // resource cap cut the run short

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

template <class E, class C>
void add_check(Report& r, std::string name, const E& expected, const C& computed) {
  std::ostringstream se, sc;
  se << expected;
  sc << computed;
  r.checks.push_back({std::move(name), se.str(), sc.str(), se.str() == sc.str()});
}

/// Fixed JSON schema for reports, version "1".
std::string report_schema();

}  // namespace polar
