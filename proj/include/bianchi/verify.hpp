#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bianchi {

/// One comparison between a formula and its oracle (or an identity).
/// Soft checks are conformance diagnostics: reported, never fatal.
struct Check {
  std::string name;
  bool passed = false;
  bool hard = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;

  bool hard_failure() const;
};

/// symbols, classgroup, cusps, fixedpoints, sczech, integrality, anchors
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown name.
SuiteResult run_suite(std::string_view name);

}  // namespace bianchi
