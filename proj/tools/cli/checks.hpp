#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jhall::cli {

struct CheckOptions {
  /// Suite-specific weight or dimension bound; each suite has a default.
  std::optional<int> bound;
  int p = 2;
  std::uint64_t seed = 1;
  int trials = 1000;
  int degree_bound = 8;
};

struct CheckReport {
  std::string suite;
  int bound = 0;
  long cases = 0;
  /// Cases left out because an enumeration would exceed its budget.
  long skipped = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
  [[nodiscard]] std::string summary() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or a bad option and
/// oracle::BudgetExceeded when the bound exceeds the suite's hard cap.
CheckReport run_check(const std::string& suite, const CheckOptions& options);

}  // namespace jhall::cli
