#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace jhall::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kResourceCap = 3,
};

enum class Format { Text, Json };

struct Options {
  /// Numeric mode: evaluate coefficients at this rational q.
  std::optional<std::string> q;
  std::optional<std::string> basis;
  int degree_bound = 8;
  std::uint64_t seed = 1;
  std::optional<Format> format;
  int p = 2;
  int trials = 1000;
};

Format parse_format(const std::string& name);

int run_eval(const std::string& expression, const Options& options, std::ostream& out, std::ostream& err);
int run_check(const std::string& suite, std::optional<int> bound, const Options& options, std::ostream& out,
              std::ostream& err);
/// Multiplication table of the derived algebra on root objects of total
/// weight <= weight. JSON lines unless text is requested.
int run_table(int weight, const Options& options, std::ostream& out, std::ostream& err);
/// Monomial expansions of P_lambda(x; t) for |lambda| <= degree.
int run_export_hl(int degree, const Options& options, std::ostream& out, std::ostream& err);

inline constexpr int kMaxTableWeight = 5;

}  // namespace jhall::cli
