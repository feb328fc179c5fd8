#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sandgraph {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of a verification: named pass/fail checks plus the values they
/// compared, rendered as decimal strings or canonical polynomial text.
struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> results;

  bool passed() const;
  Check& check(std::string name, bool pass, std::string detail = {});
  void result(std::string key, std::string value);
  /// Appends another report's checks and results, prefixing names.
  void merge(const Report& other, const std::string& prefix);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace sandgraph
