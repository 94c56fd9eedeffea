#pragma once

// Cross-route verification suites: every route to a count is compared
// against every other route that covers the same values.

#include <optional>
#include <string>
#include <vector>

namespace aqc {

enum class VerifyScope { kOracle, kRecurrences, kGf, kPermanent, kMulti, kAll };

// Parses "oracle", "recurrences", "gf", "permanent", "multi", "all".
std::optional<VerifyScope> parse_scope(const std::string& name);

struct VerifyLimits {
  // Overrides the per-scope default n limit when set.
  std::optional<unsigned> n_max;
  unsigned q_max = 6;
  unsigned order = 30;
  unsigned threads = 0;
};

// Default n limit per scope: oracle 8, recurrences 30, permanent 7, multi 7.
unsigned default_n_max(VerifyScope scope);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failing instance, empty on success
};

std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyLimits& limits);

}  // namespace aqc
