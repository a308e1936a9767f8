#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"

namespace maxcms {

/// Conflict digraph of an instance: edge (i, j) whenever i >= j on objects but
/// label(i) is not >= label(j). A vertex set is acceptable exactly when it is
/// independent here. `parts`, when present, splits the edges into transitive
/// pieces, one per chain of a label-order realizer.
struct SpecialGraph {
  std::size_t n = 0;
  std::vector<Rational> weights;
  std::vector<IndexPair> edges;  // sorted, no loops
  std::optional<std::vector<std::vector<IndexPair>>> parts;

  bool adjacent(std::size_t i, std::size_t j) const;
  Relation adjacency() const;
  Rational total_weight() const;
};

/// Sorted, loop-free edge list of a relation.
std::vector<IndexPair> edges_of(const Relation& r);

bool is_acyclic(std::size_t n, std::span<const IndexPair> edges);
bool is_transitive(std::size_t n, std::span<const IndexPair> edges);
bool is_independent(const SpecialGraph& g, std::span<const std::size_t> vertices);

/// Vertices in a topological order of the edges; std::nullopt on a cycle.
std::optional<std::vector<std::size_t>> topological_order(std::size_t n,
                                                          std::span<const IndexPair> edges);

SpecialGraph build_special_graph(const Instance& inst);

/// Same edges as build_special_graph, additionally split by realizer chain:
/// part s holds (i, j) with i >= j on objects and label(i) strictly below
/// label(j) in chain s. Throws InvalidInput if the instance has no realizer.
SpecialGraph decompose_edges(const Instance& inst);

/// Turns independent-set search on the digraph (order minus preorder) into a
/// labeled instance. Objects are the vertices ordered by `order`; labels are
/// the equivalence classes of `preorder`, ordered by it. The returned instance
/// has exactly the edges order \ preorder, so its optimum equals the maximum
/// independent set weight of that digraph.
Instance quotient_reduce(std::span<const Rational> weights, const Preorder& preorder,
                         const Poset& order);

}  // namespace maxcms
