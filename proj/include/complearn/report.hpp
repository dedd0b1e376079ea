// Copyright 2026 The Complearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPLEARN_REPORT_HPP_
#define COMPLEARN_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace complearn {

struct Check {
  std::string name;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// The machine-readable outcome of a command. Serialization is fully
// deterministic given (seed, inputs); anything wall-clock dependent stays
// out of it.
struct Report {
  int schema_version = 1;
  std::string command;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  bool pass() const {
    for (const Check& check : checks) {
      if (!check.pass) return false;
    }
    return true;
  }

  void add_check(const std::string& name, double deviation, double tolerance) {
    checks.push_back({name, deviation, tolerance, deviation <= tolerance});
  }

  void note(const std::string& text) { notes.push_back(text); }
};

inline nlohmann::ordered_json report_to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = report.schema_version;
  doc["command"] = report.command;
  if (!report.suite.empty()) {
    doc["suite"] = report.suite;
    doc["trials"] = report.trials;
  }
  doc["seed"] = report.seed;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& check : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = check.name;
    item["max_abs_deviation"] = check.max_abs_deviation;
    item["tolerance"] = check.tolerance;
    item["pass"] = check.pass;
    doc["checks"].push_back(std::move(item));
  }
  doc["notes"] = report.notes;
  for (auto& [key, value] : report.extra.items()) doc[key] = value;
  doc["pass"] = report.pass();
  return doc;
}

inline std::string render_report(const Report& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace complearn

#endif  // COMPLEARN_REPORT_HPP_
