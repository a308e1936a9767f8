#include "maxcms/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "maxcms/errors.hpp"

namespace maxcms {

Relation::Relation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (j % 64);
  auto& word = bits_[i * words_ + j / 64];
  word = value ? (word | mask) : (word & ~mask);
}

void Relation::close_transitively() {
  for (std::size_t k = 0; k < n_; ++k) {
    const std::uint64_t* row_k = &bits_[k * words_];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k || !test(i, k)) continue;
      std::uint64_t* row_i = &bits_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) row_i[w] |= row_k[w];
    }
  }
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!test(i, i)) return false;
  return true;
}

bool Relation::is_transitive() const {
  Relation closed = *this;
  closed.close_transitively();
  return closed == *this;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (test(i, j) && test(j, i)) return false;
  return true;
}

std::vector<IndexPair> Relation::strict_pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && test(i, j)) out.emplace_back(i, j);
  return out;
}

Preorder Preorder::from_relation(Relation leq) {
  if (!leq.is_reflexive()) throw InvalidInput("relation is not reflexive");
  if (!leq.is_transitive()) throw InvalidInput("relation is not transitive");
  return Preorder(std::move(leq));
}

Poset Poset::from_relation(Relation leq) {
  if (!leq.is_reflexive()) throw InvalidInput("relation is not reflexive");
  if (!leq.is_antisymmetric()) throw InvalidInput("relation is not antisymmetric");
  if (!leq.is_transitive()) throw InvalidInput("relation is not transitive");
  return Poset(std::move(leq));
}

Poset Poset::from_preorder(const Preorder& pre) {
  if (!pre.relation().is_antisymmetric()) throw InvalidInput("relation is not antisymmetric");
  return Poset(pre.relation());
}

Poset Poset::chain(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r.set(i, j);
  return Poset(std::move(r));
}

Poset Poset::antichain(std::size_t n) {
  return Poset(Relation::identity(n));
}

std::vector<IndexPair> Poset::cover_pairs() const {
  const std::size_t n = size();
  std::vector<IndexPair> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      if (covered) covers.emplace_back(a, b);
    }
  }
  return covers;
}

Preorder transitive_closure(std::span<const IndexPair> pairs, std::size_t n) {
  Relation r = Relation::identity(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw std::out_of_range("pair index out of range");
    r.set(a, b);
  }
  r.close_transitively();
  return Preorder::from_relation(std::move(r));
}

TotalOrderRealizer TotalOrderRealizer::create(std::vector<std::vector<std::size_t>> chains) {
  TotalOrderRealizer out;
  if (chains.empty()) throw InvalidInput("realizer needs at least one chain");
  const std::size_t n = chains.front().size();
  for (const auto& chain : chains) {
    if (chain.size() != n) throw InvalidInput("realizer chains have different lengths");
    std::vector<std::size_t> rank(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::size_t label = chain[pos];
      if (label >= n || rank[label] != n) throw InvalidInput("realizer chain is not a permutation");
      rank[label] = pos;
    }
    out.rank_.push_back(std::move(rank));
  }
  out.chains_ = std::move(chains);
  return out;
}

Poset TotalOrderRealizer::intersection() const {
  const std::size_t n = label_count();
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool all = true;
      for (std::size_t s = 0; s < dimension() && all; ++s) all = geq(s, b, a);
      r.set(a, b, all);
    }
  return Poset::from_relation(std::move(r));
}

bool TotalOrderRealizer::realizes(const Poset& order) const {
  if (order.size() != label_count()) return false;
  return intersection().relation() == order.relation();
}

Instance Instance::create(std::vector<Object> objects, Preorder object_order,
                          std::vector<std::string> labels, Poset label_order,
                          std::optional<TotalOrderRealizer> realizer) {
  if (object_order.size() != objects.size())
    throw InvalidInput("object order size does not match object count");
  if (label_order.size() != labels.size())
    throw InvalidInput("label order size does not match label count");
  std::unordered_set<std::string> seen;
  for (const auto& o : objects) {
    if (!seen.insert(o.id).second) throw InvalidInput("duplicate object id '" + o.id + "'");
    if (o.weight <= 0) throw InvalidInput("object '" + o.id + "' has non-positive weight");
    if (o.label >= labels.size()) throw InvalidInput("object '" + o.id + "' has unknown label");
  }
  std::unordered_set<std::string> seen_labels;
  for (const auto& l : labels)
    if (!seen_labels.insert(l).second) throw InvalidInput("duplicate label '" + l + "'");
  if (realizer && !realizer->realizes(label_order))
    throw InvalidInput("realizer does not realize the label order");

  Instance inst;
  inst.objects_ = std::move(objects);
  inst.object_order_ = std::move(object_order);
  inst.labels_ = std::move(labels);
  inst.label_order_ = std::move(label_order);
  inst.realizer_ = std::move(realizer);
  return inst;
}

std::vector<Rational> Instance::weights() const {
  std::vector<Rational> w;
  w.reserve(objects_.size());
  for (const auto& o : objects_) w.push_back(o.weight);
  return w;
}

Rational Instance::total_weight() const {
  Rational total = 0;
  for (const auto& o : objects_) total += o.weight;
  return total;
}

std::optional<std::size_t> Instance::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Instance::label_index(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

Lattice Lattice::from_poset(Poset order) {
  const std::size_t n = order.size();
  Lattice lat;
  lat.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < n; ++c) {
        if (!order.leq(a, c) || !order.leq(b, c)) continue;
        if (!least || order.leq(c, *least)) least = c;
      }
      if (!least) throw InvalidInput("poset is not a lattice: a pair has no upper bound");
      for (std::size_t c = 0; c < n; ++c)
        if (order.leq(a, c) && order.leq(b, c) && !order.leq(*least, c))
          throw InvalidInput("poset is not a lattice: a pair has no least upper bound");
      lat.join_[a * n + b] = *least;
    }
  }
  lat.order_ = std::move(order);
  return lat;
}

std::optional<IndexPair> find_violation(const Instance& inst, std::span<const std::size_t> subset) {
  for (std::size_t i : subset)
    if (i >= inst.size()) throw std::out_of_range("object index out of range");
  for (std::size_t i : subset)
    for (std::size_t j : subset)
      if (inst.violates(i, j)) return IndexPair{i, j};
  return std::nullopt;
}

bool is_acceptable(const Instance& inst, std::span<const std::size_t> subset) {
  return !find_violation(inst, subset).has_value();
}

std::vector<std::size_t> monotone_extension(const Instance& inst, const Lattice& lattice,
                                            std::span<const std::size_t> accepted,
                                            std::size_t default_label) {
  const Poset& labels = lattice.order();
  if (labels.relation() != inst.label_order().relation())
    throw InvalidInput("lattice does not match the instance label order");
  if (default_label >= inst.label_count()) throw InvalidInput("default label out of range");
  if (!is_acceptable(inst, accepted)) throw NotAcceptable("accepted set is not acceptable");
  for (std::size_t a : accepted)
    if (!labels.leq(default_label, inst.label_of(a)))
      throw InvalidInput("default label is not below every accepted label");

  std::vector<std::size_t> out(inst.size(), default_label);
  for (std::size_t x = 0; x < inst.size(); ++x) {
    std::optional<std::size_t> sup;
    for (std::size_t a : accepted) {
      if (!inst.object_order().leq(a, x)) continue;
      sup = sup ? lattice.join(*sup, inst.label_of(a)) : inst.label_of(a);
    }
    if (sup) out[x] = *sup;
  }
  return out;
}

}  // namespace maxcms
