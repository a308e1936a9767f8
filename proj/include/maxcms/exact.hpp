#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"
#include "maxcms/specgraph.hpp"

namespace maxcms {

struct ExactResult {
  std::vector<std::size_t> best_set;  // ascending
  Rational best_weight;
  std::uint64_t enumerated = 0;  // search nodes visited
};

inline constexpr std::size_t kDefaultExactLimit = 24;

/// Maximum-weight independent set by branch and bound over vertices in index
/// order, include-branch first. Among optima the lexicographically smallest
/// ascending vertex list wins. Throws SizeLimitExceeded when g.n > limit
/// (limit is capped at 64).
ExactResult brute_force_is(const SpecialGraph& g, std::size_t limit = kDefaultExactLimit);

/// Optimal acceptable subset of an instance, via its conflict digraph.
ExactResult brute_force_maxcms(const Instance& inst, std::size_t limit = kDefaultExactLimit);

}  // namespace maxcms
