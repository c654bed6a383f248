#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nearring/params.hpp"

namespace nearring {

using Json = nlohmann::ordered_json;

/// Outcome of one named check. A failed check always carries a replayable
/// counterexample (the elements involved, in the order the check names them).
struct Check {
  std::string name;
  bool passed = true;
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  std::vector<Element> counterexample;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  Json metrics = Json::object();
  double elapsed_seconds = 0.0;

  bool passed() const;
  const Check* find(std::string_view name) const;
  /// Throws Error when no check has that name.
  const Check& at(std::string_view name) const;
  void append(const Report& other);
};

Json to_json(const Check& check);
/// Stable field names; elapsed time is included only when requested so that
/// reports can be compared byte for byte.
Json to_json(const Report& report, bool with_timing = true);

}  // namespace nearring
