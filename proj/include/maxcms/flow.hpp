#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"

namespace maxcms {

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational lower = 0;
  std::optional<Rational> upper;  // nullopt: unbounded
};

/// Split-vertex network for one transitive edge part. Node 2v is v+, 2v+1 is
/// v-, then the source s and sink t. Arc v is (v+, v-) carrying lower bound
/// c_v; edge arcs (x-, y+), source arcs (s, a+) for every a without incoming
/// edges and sink arcs (b-, t) for every b without outgoing edges follow.
struct FlowNetwork {
  std::size_t vertex_count = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::size_t> sources;  // vertices with no incoming edge
  std::vector<std::size_t> sinks;    // vertices with no outgoing edge

  std::size_t node_count() const { return 2 * vertex_count + 2; }
  std::size_t source() const { return 2 * vertex_count; }
  std::size_t sink() const { return 2 * vertex_count + 1; }
  static std::size_t plus(std::size_t v) { return 2 * v; }
  static std::size_t minus(std::size_t v) { return 2 * v + 1; }
};

/// Throws InvalidInput on a cyclic edge set, a negative weight or a size
/// mismatch.
FlowNetwork build_network(std::size_t n, std::span<const Rational> weights,
                          std::span<const IndexPair> edges);

struct MinFlowResult {
  Rational value;                 // total flow leaving s
  std::vector<Rational> flow;     // per arc, same order as FlowNetwork::arcs
  std::vector<bool> source_side;  // nodes reachable from s in the final residual network
};

/// Minimum feasible s-t flow respecting every lower bound. Starts from the
/// flow that routes each lower bound along its own s-t path, then cancels as
/// much as possible with augmenting paths (Dinic) in the residual network,
/// where an arc can be decreased by flow - lower and increased up to upper.
MinFlowResult min_flow(const FlowNetwork& net);

struct WeightedSet {
  Rational value;
  std::vector<bool> members;
};

/// Maximum-weight independent set of a transitive acyclic part, read off the
/// minimum cut of the min-flow network: r is taken when r+ is on the source
/// side and r- is not. Its weight equals the minimum flow value.
/// Throws InvalidInput on negative weights.
WeightedSet max_wcut_is(std::size_t n, std::span<const Rational> weights,
                        std::span<const IndexPair> edges);

/// Boolean maximizer of sum c_v y_v over the path polytope of a transitive
/// acyclic part. Coordinates with c_v <= 0 are dropped, which is safe because
/// the polytope is closed under decreasing coordinates.
std::vector<Rational> linear_oracle(std::size_t n, std::span<const IndexPair> edges,
                                    std::span<const Rational> c);

struct LongestPath {
  Rational weight;
  std::vector<std::size_t> path;  // from a vertex without predecessors to one without successors
};

/// Heaviest vertex-weighted path by DP over a topological order. Weights are
/// expected to be nonnegative. Throws InvalidInput on a cyclic edge set.
LongestPath longest_path(std::size_t n, std::span<const IndexPair> edges,
                         std::span<const Rational> y);

struct Membership {
  bool inside = false;
  std::optional<std::size_t> negative_coordinate;
  std::vector<std::size_t> violated_path;  // its y-sum exceeds 1
  Rational path_weight;
};

/// Separation oracle for the path polytope {y >= 0, sum over every
/// source-to-sink path <= 1}.
Membership membership(std::size_t n, std::span<const IndexPair> edges,
                      std::span<const Rational> y);

}  // namespace maxcms
