#pragma once

#include <stdexcept>
#include <string>

namespace maxcms {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed instance/solution document, rational literal or DIMACS file.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid data that violates a domain invariant (non-positive
/// weight, relation that is not a partial order, unknown label, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// The requested solver does not apply to the instance's label order.
struct AlgorithmMismatch : Error {
  using Error::Error;
};

/// Instance exceeds the configured limit of an enumerating solver.
struct SizeLimitExceeded : Error {
  using Error::Error;
};

/// A subset handed to an operation that needs an acceptable one is not.
struct NotAcceptable : Error {
  using Error::Error;
};

/// The relaxation solver ran out of iterations before certifying its target.
struct BudgetExhausted : Error {
  BudgetExhausted(const std::string& what, std::string best_gap)
      : Error(what), best_gap(std::move(best_gap)) {}
  std::string best_gap;
};

}  // namespace maxcms
