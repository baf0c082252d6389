#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqclass/classes.hpp"
#include "eqclass/minor.hpp"

namespace eqclass {

struct PropertyResult {
  std::string module;
  std::string name;
  Verdict status = Verdict::Holds;  // Holds = pass
  std::string detail;
};

struct SelfcheckOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Replaces the built-in inclusion table in the catalog validation.
  std::optional<InclusionTable> table;
  std::uint64_t seed = 20240601;
};

std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& opts = {});

/// 2 if any property was inconclusive, else 1 if any failed, else 0.
int selfcheck_exit_code(const std::vector<PropertyResult>& results);

}  // namespace eqclass
