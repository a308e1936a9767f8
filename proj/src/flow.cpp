#include "maxcms/flow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "maxcms/errors.hpp"
#include "maxcms/specgraph.hpp"

namespace maxcms {
namespace {

// Residual capacity: either a finite rational or unbounded.
struct Capacity {
  bool unbounded = false;
  Rational value = 0;

  bool positive() const { return unbounded || value > 0; }
};

Capacity min_cap(const Capacity& a, const Capacity& b) {
  if (a.unbounded) return b;
  if (b.unbounded) return a;
  return a.value <= b.value ? a : b;
}

// Residual edge 2e decreases arc e (same direction), 2e+1 increases it
// (traversed backwards).
class ReductionSolver {
 public:
  ReductionSolver(const FlowNetwork& net, std::vector<Rational>& flow)
      : net_(net), flow_(flow), out_(net.node_count()) {
    for (std::size_t e = 0; e < net.arcs.size(); ++e) {
      out_[net.arcs[e].from].push_back(2 * e);
      out_[net.arcs[e].to].push_back(2 * e + 1);
    }
  }

  Rational run() {
    Rational total = 0;
    while (build_levels()) {
      next_.assign(net_.node_count(), 0);
      while (true) {
        Rational pushed = augment(net_.source(), Capacity{true, 0});
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable_from_source() const {
    std::vector<bool> seen(net_.node_count(), false);
    std::deque<std::size_t> queue{net_.source()};
    seen[net_.source()] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t r : out_[u]) {
        std::size_t w = head(r);
        if (!seen[w] && residual(r).positive()) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t head(std::size_t r) const {
    const FlowArc& a = net_.arcs[r / 2];
    return r % 2 == 0 ? a.to : a.from;
  }

  Capacity residual(std::size_t r) const {
    const std::size_t e = r / 2;
    const FlowArc& a = net_.arcs[e];
    if (r % 2 == 0) return Capacity{false, flow_[e] - a.lower};
    if (!a.upper) return Capacity{true, 0};
    return Capacity{false, *a.upper - flow_[e]};
  }

  void apply(std::size_t r, const Rational& amount) {
    if (r % 2 == 0)
      flow_[r / 2] -= amount;
    else
      flow_[r / 2] += amount;
  }

  bool build_levels() {
    level_.assign(net_.node_count(), -1);
    std::deque<std::size_t> queue{net_.source()};
    level_[net_.source()] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t r : out_[u]) {
        std::size_t w = head(r);
        if (level_[w] < 0 && residual(r).positive()) {
          level_[w] = level_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  Rational augment(std::size_t u, const Capacity& limit) {
    if (u == net_.sink()) {
      // Every s-t residual path starts by decreasing a source arc, so the
      // bottleneck is always finite.
      if (limit.unbounded) throw std::logic_error("unbounded reduction path");
      return limit.value;
    }
    for (std::size_t& i = next_[u]; i < out_[u].size(); ++i) {
      const std::size_t r = out_[u][i];
      const std::size_t w = head(r);
      if (level_[w] != level_[u] + 1) continue;
      Capacity cap = residual(r);
      if (!cap.positive()) continue;
      Rational pushed = augment(w, min_cap(limit, cap));
      if (pushed > 0) {
        apply(r, pushed);
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<Rational>& flow_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// For every node, one arc on a BFS path towards it from `root`, following
// arcs forwards (or backwards when `reverse`).
std::vector<std::optional<std::size_t>> bfs_tree(const FlowNetwork& net, std::size_t root,
                                                 bool reverse) {
  std::vector<std::vector<std::size_t>> adj(net.node_count());
  for (std::size_t e = 0; e < net.arcs.size(); ++e)
    adj[reverse ? net.arcs[e].to : net.arcs[e].from].push_back(e);
  std::vector<std::optional<std::size_t>> via(net.node_count());
  std::vector<bool> seen(net.node_count(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : adj[u]) {
      std::size_t w = reverse ? net.arcs[e].from : net.arcs[e].to;
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  return via;
}

}  // namespace

FlowNetwork build_network(std::size_t n, std::span<const Rational> weights,
                          std::span<const IndexPair> edges) {
  if (weights.size() != n) throw InvalidInput("build_network: weight count does not match");
  for (const auto& c : weights)
    if (c < 0) throw InvalidInput("build_network: negative vertex weight");
  for (auto [a, b] : edges)
    if (a >= n || b >= n) throw InvalidInput("build_network: edge endpoint out of range");
  if (!is_acyclic(n, edges)) throw InvalidInput("build_network: edge set has a cycle");

  FlowNetwork net;
  net.vertex_count = n;
  std::vector<bool> has_in(n, false), has_out(n, false);
  for (auto [a, b] : edges) {
    has_out[a] = true;
    has_in[b] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    net.arcs.push_back({FlowNetwork::plus(v), FlowNetwork::minus(v), weights[v], std::nullopt});
  for (auto [a, b] : edges)
    net.arcs.push_back({FlowNetwork::minus(a), FlowNetwork::plus(b), 0, std::nullopt});
  for (std::size_t v = 0; v < n; ++v)
    if (!has_in[v]) {
      net.sources.push_back(v);
      net.arcs.push_back({net.source(), FlowNetwork::plus(v), 0, std::nullopt});
    }
  for (std::size_t v = 0; v < n; ++v)
    if (!has_out[v]) {
      net.sinks.push_back(v);
      net.arcs.push_back({FlowNetwork::minus(v), net.sink(), 0, std::nullopt});
    }
  return net;
}

MinFlowResult min_flow(const FlowNetwork& net) {
  MinFlowResult result;
  result.flow.assign(net.arcs.size(), Rational(0));

  const auto from_source = bfs_tree(net, net.source(), false);
  const auto to_sink = bfs_tree(net, net.sink(), true);
  for (std::size_t e = 0; e < net.arcs.size(); ++e) {
    const FlowArc& arc = net.arcs[e];
    if (arc.lower <= 0) continue;
    result.flow[e] += arc.lower;
    for (std::size_t u = arc.from; u != net.source();) {
      if (!from_source[u]) throw std::logic_error("arc not reachable from source");
      result.flow[*from_source[u]] += arc.lower;
      u = net.arcs[*from_source[u]].from;
    }
    for (std::size_t u = arc.to; u != net.sink();) {
      if (!to_sink[u]) throw std::logic_error("arc cannot reach sink");
      result.flow[*to_sink[u]] += arc.lower;
      u = net.arcs[*to_sink[u]].to;
    }
  }

  ReductionSolver solver(net, result.flow);
  solver.run();
  result.source_side = solver.reachable_from_source();

  result.value = 0;
  for (std::size_t e = 0; e < net.arcs.size(); ++e)
    if (net.arcs[e].from == net.source()) result.value += result.flow[e];
  return result;
}

WeightedSet max_wcut_is(std::size_t n, std::span<const Rational> weights,
                        std::span<const IndexPair> edges) {
  FlowNetwork net = build_network(n, weights, edges);
  MinFlowResult mf = min_flow(net);
  WeightedSet out;
  out.members.assign(n, false);
  out.value = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (mf.source_side[FlowNetwork::plus(v)] && !mf.source_side[FlowNetwork::minus(v)]) {
      out.members[v] = true;
      out.value += weights[v];
    }
  }
  if (out.value != mf.value) throw std::logic_error("cut weight differs from minimum flow");
  return out;
}

std::vector<Rational> linear_oracle(std::size_t n, std::span<const IndexPair> edges,
                                    std::span<const Rational> c) {
  if (c.size() != n) throw InvalidInput("linear_oracle: weight count does not match");
  std::vector<Rational> clamped(c.begin(), c.end());
  for (auto& v : clamped)
    if (v < 0) v = 0;
  WeightedSet best = max_wcut_is(n, clamped, edges);
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v)
    if (best.members[v] && clamped[v] > 0) y[v] = 1;
  return y;
}

LongestPath longest_path(std::size_t n, std::span<const IndexPair> edges,
                         std::span<const Rational> y) {
  if (y.size() != n) throw InvalidInput("longest_path: weight count does not match");
  auto order = topological_order(n, edges);
  if (!order) throw InvalidInput("longest_path: edge set has a cycle");
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<bool> has_out(n, false);
  for (auto [a, b] : edges) {
    preds[b].push_back(a);
    has_out[a] = true;
  }
  for (auto& p : preds) std::sort(p.begin(), p.end());

  std::vector<Rational> best(n);
  std::vector<std::optional<std::size_t>> via(n);
  for (std::size_t v : *order) {
    best[v] = y[v];
    for (std::size_t u : preds[v])
      if (!via[v] || best[u] > best[*via[v]]) via[v] = u;
    if (via[v]) best[v] += best[*via[v]];
  }

  LongestPath out;
  out.weight = 0;
  std::optional<std::size_t> end;
  for (std::size_t v = 0; v < n; ++v)
    if (!has_out[v] && (!end || best[v] > best[*end])) end = v;
  if (!end) return out;
  out.weight = best[*end];
  for (std::optional<std::size_t> v = end; v; v = via[*v]) out.path.push_back(*v);
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

Membership membership(std::size_t n, std::span<const IndexPair> edges,
                      std::span<const Rational> y) {
  if (y.size() != n) throw InvalidInput("membership: vector length does not match");
  Membership m;
  for (std::size_t v = 0; v < n; ++v)
    if (y[v] < 0) {
      m.negative_coordinate = v;
      return m;
    }
  LongestPath lp = longest_path(n, edges, y);
  m.path_weight = lp.weight;
  if (lp.weight > 1) {
    m.violated_path = std::move(lp.path);
    return m;
  }
  m.inside = true;
  return m;
}

}  // namespace maxcms
