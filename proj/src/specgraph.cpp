#include "maxcms/specgraph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "maxcms/errors.hpp"

namespace maxcms {

bool SpecialGraph::adjacent(std::size_t i, std::size_t j) const {
  return std::binary_search(edges.begin(), edges.end(), IndexPair{i, j});
}

Relation SpecialGraph::adjacency() const {
  Relation r(n);
  for (auto [a, b] : edges) r.set(a, b);
  return r;
}

Rational SpecialGraph::total_weight() const {
  return sum(weights);
}

std::vector<IndexPair> edges_of(const Relation& r) {
  return r.strict_pairs();
}

std::optional<std::vector<std::size_t>> topological_order(std::size_t n,
                                                          std::span<const IndexPair> edges) {
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t b : out[order[head]])
      if (--indegree[b] == 0) order.push_back(b);
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_acyclic(std::size_t n, std::span<const IndexPair> edges) {
  for (auto [a, b] : edges)
    if (a == b) return false;
  return topological_order(n, edges).has_value();
}

bool is_transitive(std::size_t n, std::span<const IndexPair> edges) {
  Relation r(n);
  for (auto [a, b] : edges) r.set(a, b);
  return r.is_transitive();
}

bool is_independent(const SpecialGraph& g, std::span<const std::size_t> vertices) {
  for (std::size_t a : vertices)
    for (std::size_t b : vertices)
      if (g.adjacent(a, b)) return false;
  return true;
}

SpecialGraph build_special_graph(const Instance& inst) {
  SpecialGraph g;
  g.n = inst.size();
  g.weights = inst.weights();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (inst.violates(i, j)) g.edges.emplace_back(i, j);
  return g;
}

SpecialGraph decompose_edges(const Instance& inst) {
  if (!inst.realizer()) throw InvalidInput("instance has no label-order realizer");
  const TotalOrderRealizer& realizer = *inst.realizer();
  SpecialGraph g = build_special_graph(inst);
  std::vector<std::vector<IndexPair>> parts(realizer.dimension());
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (i == j || !inst.object_order().geq(i, j)) continue;
      for (std::size_t s = 0; s < realizer.dimension(); ++s)
        if (!realizer.geq(s, inst.label_of(i), inst.label_of(j))) parts[s].emplace_back(i, j);
    }
  }
  g.parts = std::move(parts);
  return g;
}

Instance quotient_reduce(std::span<const Rational> weights, const Preorder& preorder,
                         const Poset& order) {
  const std::size_t n = weights.size();
  if (preorder.size() != n || order.size() != n)
    throw InvalidInput("quotient_reduce: sizes do not match");

  std::vector<std::size_t> class_of(n, n);
  std::vector<std::size_t> representative;
  for (std::size_t v = 0; v < n; ++v) {
    if (class_of[v] != n) continue;
    class_of[v] = representative.size();
    for (std::size_t u = v + 1; u < n; ++u)
      if (preorder.leq(u, v) && preorder.leq(v, u)) class_of[u] = representative.size();
    representative.push_back(v);
  }

  const std::size_t k = representative.size();
  Relation induced(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      induced.set(a, b, preorder.leq(representative[a], representative[b]));
  assert(induced.is_antisymmetric());

  std::vector<Object> objects;
  objects.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    objects.push_back({"v" + std::to_string(v), weights[v], class_of[v]});
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < k; ++c) labels.push_back("k" + std::to_string(c));
  return Instance::create(std::move(objects), order, std::move(labels),
                          Poset::from_relation(std::move(induced)));
}

}  // namespace maxcms
