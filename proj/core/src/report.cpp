#include "polar/report.hpp"

namespace polar {

bool Report::pass() const {
  if (partial) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["version"] = "1";
  j["command"] = command;
  j["parameters"] = parameters;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass}});
  j["pass"] = pass();
  j["partial"] = partial;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string Report::to_table() const {
  std::string out = command + "\n";
  for (const auto& c : checks)
    out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name + ": expected " + c.expected +
           ", computed " + c.computed + "\n";
  out += partial ? "partial (resource cap reached)\n" : (pass() ? "all checks passed\n" : "CHECKS FAILED\n");
  return out;
}

std::string report_schema() {
  return R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "verification report",
  "version": "1",
  "type": "object",
  "required": ["version", "command", "parameters", "checks", "pass", "partial", "wall_time_ms"],
  "properties": {
    "version": {"const": "1"},
    "command": {"type": "string"},
    "parameters": {"type": "object"},
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "expected", "computed", "pass"],
        "properties": {
          "name": {"type": "string"},
          "expected": {"type": "string"},
          "computed": {"type": "string"},
          "pass": {"type": "boolean"}
        }
      }
    },
    "pass": {"type": "boolean"},
    "partial": {"type": "boolean"},
    "wall_time_ms": {"type": "integer"}
  }
}
)";
}

}  // namespace polar
