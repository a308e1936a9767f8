#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxcms/rational.hpp"

namespace maxcms {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Dense n x n boolean relation, one bit row per element.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);

  std::size_t size() const { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  /// Warshall closure, in place. Does not add reflexive pairs.
  void close_transitively();

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  /// All (i, j) with i != j that hold, row-major.
  std::vector<IndexPair> strict_pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive, transitive relation. leq(i, j) reads "i <= j".
class Preorder {
 public:
  Preorder() = default;
  /// Throws InvalidInput if the relation is not reflexive and transitive.
  static Preorder from_relation(Relation leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_.test(i, j); }
  bool geq(std::size_t i, std::size_t j) const { return leq_.test(j, i); }
  const Relation& relation() const { return leq_; }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 protected:
  explicit Preorder(Relation leq) : leq_(std::move(leq)) {}
  Relation leq_;
};

/// Antisymmetric preorder.
class Poset : public Preorder {
 public:
  Poset() = default;
  /// Throws InvalidInput unless the relation is a partial order.
  static Poset from_relation(Relation leq);
  static Poset from_preorder(const Preorder& pre);
  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  /// Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<IndexPair> cover_pairs() const;

 private:
  explicit Poset(Relation leq) : Preorder(std::move(leq)) {}
};

/// Smallest preorder containing every (a, b) read as a <= b.
/// Throws std::out_of_range on an index >= n.
Preorder transitive_closure(std::span<const IndexPair> pairs, std::size_t n);

/// A list of linear orders on labels; each chain lists labels from least to
/// greatest. Their intersection is the label order.
class TotalOrderRealizer {
 public:
  TotalOrderRealizer() = default;
  /// Throws InvalidInput unless every chain is a permutation of 0..n-1.
  static TotalOrderRealizer create(std::vector<std::vector<std::size_t>> chains);

  std::size_t dimension() const { return chains_.size(); }
  std::size_t label_count() const { return rank_.empty() ? 0 : rank_.front().size(); }
  const std::vector<std::vector<std::size_t>>& chains() const { return chains_; }

  /// a >= b in chain s.
  bool geq(std::size_t s, std::size_t a, std::size_t b) const { return rank_[s][a] >= rank_[s][b]; }

  /// The intersection of the chains.
  Poset intersection() const;
  bool realizes(const Poset& order) const;

  friend bool operator==(const TotalOrderRealizer& a, const TotalOrderRealizer& b) {
    return a.chains_ == b.chains_;
  }

 private:
  std::vector<std::vector<std::size_t>> chains_;
  std::vector<std::vector<std::size_t>> rank_;
};

struct Object {
  std::string id;
  Rational weight;
  std::size_t label = 0;

  friend bool operator==(const Object&, const Object&) = default;
};

/// A weighted labeled dataset: objects ordered by a preorder, labels by a
/// partial order, plus the labeling map. Immutable once created.
class Instance {
 public:
  Instance() = default;

  /// Validates every invariant and throws InvalidInput on the first failure:
  /// unique ids, positive weights, labels in range, sizes matching, realizer
  /// (if any) realizing the label order exactly.
  static Instance create(std::vector<Object> objects, Preorder object_order,
                         std::vector<std::string> labels, Poset label_order,
                         std::optional<TotalOrderRealizer> realizer = std::nullopt);

  std::size_t size() const { return objects_.size(); }
  std::size_t label_count() const { return labels_.size(); }
  const std::vector<Object>& objects() const { return objects_; }
  const Object& object(std::size_t i) const { return objects_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Preorder& object_order() const { return object_order_; }
  const Poset& label_order() const { return label_order_; }
  const std::optional<TotalOrderRealizer>& realizer() const { return realizer_; }

  std::size_t label_of(std::size_t i) const { return objects_[i].label; }
  const Rational& weight(std::size_t i) const { return objects_[i].weight; }
  std::vector<Rational> weights() const;
  Rational total_weight() const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::optional<std::size_t> label_index(std::string_view name) const;

  /// Pair (i, j) that is forbidden in any acceptable set: i >= j on objects
  /// but label(i) is not >= label(j).
  bool violates(std::size_t i, std::size_t j) const {
    return i != j && object_order_.geq(i, j) && !label_order_.geq(label_of(i), label_of(j));
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Object> objects_;
  Preorder object_order_;
  std::vector<std::string> labels_;
  Poset label_order_;
  std::optional<TotalOrderRealizer> realizer_;
};

/// A poset in which every pair has a least upper bound.
class Lattice {
 public:
  /// Throws InvalidInput if some pair lacks a least upper bound.
  static Lattice from_poset(Poset order);

  const Poset& order() const { return order_; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * order_.size() + b]; }

 private:
  Poset order_;
  std::vector<std::size_t> join_;
};

/// First forbidden pair inside the subset, scanning in the given order.
/// Throws std::out_of_range on an unknown index.
std::optional<IndexPair> find_violation(const Instance& inst, std::span<const std::size_t> subset);

bool is_acceptable(const Instance& inst, std::span<const std::size_t> subset);

/// Extends the labeling on an acceptable subset to a monotone labeling of
/// every object: each object gets the join of the accepted labels at or
/// below it, or `default_label` when there are none.
///
/// `default_label` must lie below every accepted label, otherwise an object
/// without accepted predecessors could sit above one that has them and still
/// receive the larger default. Throws NotAcceptable if `accepted` is not
/// acceptable and InvalidInput if the lattice or default do not fit.
std::vector<std::size_t> monotone_extension(const Instance& inst, const Lattice& lattice,
                                            std::span<const std::size_t> accepted,
                                            std::size_t default_label);

}  // namespace maxcms
