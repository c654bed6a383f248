#include "nearring/report.hpp"

#include <algorithm>

namespace nearring {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Check& Report::at(std::string_view name) const {
  if (const Check* c = find(name)) return *c;
  throw Error("report '" + subject + "' has no check named '" + std::string(name) + "'");
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& [k, v] : other.metrics.items()) metrics[k] = v;
  elapsed_seconds += other.elapsed_seconds;
}

Json to_json(const Check& check) {
  Json j;
  j["name"] = check.name;
  j["status"] = check.passed ? "pass" : "fail";
  j["examined"] = check.examined;
  j["failures"] = check.failures;
  Json ce = Json::array();
  for (const auto& e : check.counterexample) ce.push_back(to_string(e));
  j["counterexample"] = ce;
  j["detail"] = check.detail;
  return j;
}

Json to_json(const Report& report, bool with_timing) {
  Json j;
  j["subject"] = report.subject;
  j["status"] = report.passed() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["metrics"] = report.metrics;
  if (with_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

}  // namespace nearring
