#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxcms/approx2.hpp"
#include "maxcms/core.hpp"
#include "maxcms/exact.hpp"
#include "maxcms/io.hpp"

namespace maxcms {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,        // I/O failure, or check found a violation
  kExitMismatch = 2,       // algorithm does not apply to the label order kind
  kExitParse = 3,          // malformed input or unknown ids
  kExitSizeLimit = 4,      // exact solver size limit
  kExitBudget = 5,         // relaxation iteration budget exhausted
};

enum class Algorithm { kExact, kFlow, kApprox2 };

/// Throws InvalidInput on an unknown name.
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kExact;
  Rational epsilon = kDefaultEpsilon;
  std::size_t exact_limit = kDefaultExactLimit;
  // approx2 also reports the exact optimum when the instance is this small.
  std::size_t report_optimum_limit = 16;
};

/// Runs one solver. flow needs a "total" label order, approx2 a "realizer2"
/// one (AlgorithmMismatch otherwise).
SolutionFile solve(const Instance& inst, const SolveOptions& options);

/// Thin wrappers used by the CLI: every error becomes a message on `err` and
/// the matching exit code.
int cmd_solve(const std::string& input, const SolveOptions& options,
              const std::optional<std::string>& output, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::string kind = "random";  // random | sat
  std::size_t n = 10;           // objects (random) or variables (sat)
  std::size_t m = 3;            // labels (random) or clauses (sat)
  int dimension = 1;
  double noise = 0.2;
  std::uint64_t seed = 1;
  std::optional<std::string> cnf_path;  // sat: read this DIMACS file instead of sampling
};

int cmd_generate(const GenerateOptions& options, const std::optional<std::string>& output,
                 std::ostream& out, std::ostream& err);

int cmd_check(const std::string& input, const std::vector<std::string>& subset, std::ostream& out,
              std::ostream& err);

}  // namespace maxcms
