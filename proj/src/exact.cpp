#include "maxcms/exact.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>

#include "maxcms/errors.hpp"

namespace maxcms {
namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

class BranchAndBound {
 public:
  explicit BranchAndBound(const SpecialGraph& g) : g_(g), conflict_(g.n, 0) {
    for (auto [a, b] : g.edges) {
      conflict_[a] |= bit(b);
      conflict_[b] |= bit(a);
    }
    // suffix_[v] = total weight of vertices v..n-1
    suffix_.assign(g.n + 1, Rational(0));
    for (std::size_t v = g.n; v-- > 0;) suffix_[v] = suffix_[v + 1] + g.weights[v];
  }

  ExactResult run() {
    Rational weight = 0;
    search(0, 0, 0, weight);
    ExactResult out;
    out.best_weight = best_weight_ ? *best_weight_ : Rational(0);
    for (std::size_t v = 0; v < g_.n; ++v)
      if (best_mask_ & bit(v)) out.best_set.push_back(v);
    out.enumerated = nodes_;
    return out;
  }

 private:
  Rational available(std::size_t from, Mask blocked) const {
    Rational total = 0;
    for (std::size_t v = from; v < g_.n; ++v)
      if (!(blocked & bit(v))) total += g_.weights[v];
    return total;
  }

  void search(std::size_t v, Mask chosen, Mask blocked, Rational& weight) {
    ++nodes_;
    if (best_weight_) {
      // Cheap bound first; the exact available weight only when it might prune.
      if (weight + suffix_[v] <= *best_weight_) return;
      if (weight + available(v, blocked) <= *best_weight_) return;
    }
    if (v == g_.n) {
      best_weight_ = weight;
      best_mask_ = chosen;
      return;
    }
    if (!(blocked & bit(v))) {
      weight += g_.weights[v];
      search(v + 1, chosen | bit(v), blocked | conflict_[v], weight);
      weight -= g_.weights[v];
    }
    search(v + 1, chosen, blocked, weight);
  }

  const SpecialGraph& g_;
  std::vector<Mask> conflict_;
  std::vector<Rational> suffix_;
  std::optional<Rational> best_weight_;
  Mask best_mask_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult brute_force_is(const SpecialGraph& g, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 64);
  if (g.n > limit)
    throw SizeLimitExceeded("exact solver limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(g.n));
  return BranchAndBound(g).run();
}

ExactResult brute_force_maxcms(const Instance& inst, std::size_t limit) {
  SpecialGraph g = build_special_graph(inst);
  ExactResult result = brute_force_is(g, limit);
  assert(is_acceptable(inst, result.best_set));
  return result;
}

}  // namespace maxcms
