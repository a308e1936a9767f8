// Command-line front end: solve, generate and check monotone-subset instances.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxcms/commands.hpp"
#include "maxcms/errors.hpp"

int main(int argc, char** argv) {
  using namespace maxcms;

  CLI::App app{"Largest-weight monotone subsets of labeled, partially ordered data"};
  app.require_subcommand(1);

  std::string solve_input, algorithm = "exact", epsilon_text;
  std::optional<std::string> solve_output;
  std::size_t exact_limit = kDefaultExactLimit;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("-i,--input", solve_input, "Instance file")->required();
  solve_cmd->add_option("-a,--algorithm", algorithm, "exact | flow | approx2")
      ->check(CLI::IsMember({"exact", "flow", "approx2"}));
  solve_cmd->add_option("--epsilon", epsilon_text, "Relaxation tolerance for approx2 (default 1/16)");
  solve_cmd->add_option("--exact-limit", exact_limit, "Largest instance the exact solver accepts");
  solve_cmd->add_option("-o,--output", solve_output, "Solution file (stdout if absent)");

  GenerateOptions gen;
  std::optional<std::string> gen_output;
  std::optional<std::string> cnf_path;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random or 3-SAT gadget instance");
  gen_cmd->add_option("--kind", gen.kind, "random | sat")->check(CLI::IsMember({"random", "sat"}));
  gen_cmd->add_option("--n", gen.n, "Objects (random) or variables (sat)");
  gen_cmd->add_option("--m", gen.m, "Labels (random) or clauses (sat)");
  gen_cmd->add_option("--dim", gen.dimension, "Label order dimension, 1 or 2")->check(CLI::Range(1, 2));
  gen_cmd->add_option("--noise", gen.noise, "Fraction of resampled labels")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--cnf", cnf_path, "DIMACS 3-CNF for kind=sat");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("-o,--output", gen_output, "Instance file (stdout if absent)");

  std::string check_input;
  std::vector<std::string> subset;
  auto* check_cmd = app.add_subcommand("check", "Test whether a subset is acceptable");
  check_cmd->add_option("-i,--input", check_input, "Instance file")->required();
  check_cmd->add_option("--subset", subset, "Comma-separated object ids")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (*solve_cmd) {
    SolveOptions options;
    options.algorithm = parse_algorithm(algorithm);
    options.exact_limit = exact_limit;
    if (!epsilon_text.empty()) {
      try {
        options.epsilon = parse_rational(epsilon_text);
      } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
      }
      if (options.epsilon <= 0) {
        std::cerr << "error: epsilon must be positive\n";
        return kExitParse;
      }
    }
    return cmd_solve(solve_input, options, solve_output, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    gen.cnf_path = cnf_path;
    return cmd_generate(gen, gen_output, std::cout, std::cerr);
  }
  return cmd_check(check_input, subset, std::cout, std::cerr);
}
