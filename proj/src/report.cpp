#include "sandgraph/report.hpp"

#include <algorithm>

namespace sandgraph {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
  return checks.back();
}

void Report::result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  for (const auto& [k, v] : other.results) results.emplace_back(prefix + k, v);
}

nlohmann::json Report::to_json() const {
  nlohmann::json doc;
  doc["command"] = command;
  doc["results"] = nlohmann::json::object();
  for (const auto& [k, v] : results) doc["results"][k] = v;
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  doc["pass"] = passed();
  return doc;
}

std::string Report::to_text() const {
  std::string out;
  if (!command.empty()) out += "# " + command + "\n";
  for (const auto& [k, v] : results) out += k + " = " + v + "\n";
  for (const auto& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += passed() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

}  // namespace sandgraph
