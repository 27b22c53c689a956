#include <CLI11.hpp>
#include <iostream>

#include "cli/checks.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace jhall::cli;

  CLI::App app{"Exact computations in the derived Hall algebra of the Jordan quiver"};
  app.require_subcommand(1);

  Options opts;
  std::string q, basis, format;
  app.add_option("--q", q, "Evaluate numerically at this rational q");
  app.add_option("--basis", basis, "Output basis: natural, normal, m, e, p or P");
  app.add_option("--degree-bound", opts.degree_bound, "Largest symmetric-function degree")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opts.seed, "Seed for randomized suites");
  app.add_option("--format", format, "Output format: text or json");
  app.add_option("--p", opts.p, "Prime for oracle suites (2 or 3)");
  app.add_option("--trials", opts.trials, "Samples per configuration in randomized suites");

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expression, "Expression, e.g. \"u[1] * u[;1]\"")->required();
  eval->fallthrough();

  std::string suite;
  int bound = -1;
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("bound", bound, "Weight or dimension bound");
  check->fallthrough();

  int weight = 0;
  auto* table = app.add_subcommand("table", "Multiplication table of the derived algebra");
  table->add_option("weight", weight, "Largest total weight")->required();
  table->fallthrough();

  int degree = 0;
  auto* export_hl = app.add_subcommand("export-hl", "Hall-Littlewood P in the monomial basis");
  export_hl->add_option("degree", degree, "Largest degree")->required();
  export_hl->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (!app.get_option("--q")->empty()) opts.q = q;
  if (!app.get_option("--basis")->empty()) opts.basis = basis;
  try {
    if (!app.get_option("--format")->empty()) opts.format = parse_format(format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (*eval) return run_eval(expression, opts, std::cout, std::cerr);
  if (*check) return run_check(suite, bound < 0 ? std::nullopt : std::optional<int>(bound), opts, std::cout, std::cerr);
  if (*table) return run_table(weight, opts, std::cout, std::cerr);
  return run_export_hl(degree, opts, std::cout, std::cerr);
}
