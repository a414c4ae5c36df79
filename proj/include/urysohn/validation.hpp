#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace urysohn {

/// Outcome of one axiom/property check. `witness` holds the offending
/// values or point identifiers, in the order the check's name implies.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string name) : property(std::move(name)) {}

  std::string property;
  bool passed = true;
  std::vector<std::string> witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  /// nullptr if no check of that name was run.
  const CheckResult* find(std::string_view property) const {
    for (const auto& c : checks) {
      if (c.property == property) return &c;
    }
    return nullptr;
  }
};

}  // namespace urysohn
