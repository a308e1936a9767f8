#pragma once

// Random generators and independent brute-force oracles shared by the unit
// and acceptance suites. Nothing here goes through the solvers under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"

namespace maxcms::testing {

inline std::vector<std::size_t> mask_to_set(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

/// Canonical p/q; gmpxx leaves the two-argument constructor unreduced.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational random_weight(std::mt19937_64& rng, bool rational = true) {
  int p = std::uniform_int_distribution<int>(1, 9)(rng);
  int q = rational ? std::uniform_int_distribution<int>(1, 4)(rng) : 1;
  return frac(p, q);
}

/// Random partial order: a random DAG over a shuffled order, closed.
inline Poset random_poset(std::size_t n, std::mt19937_64& rng, double density = 0.3) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(perm[i], perm[j]);
  return Poset::from_preorder(transitive_closure(pairs, n));
}

/// Random preorder: arbitrary random pairs, closed (cycles collapse).
inline Preorder random_preorder(std::size_t n, std::mt19937_64& rng, double density = 0.2) {
  std::bernoulli_distribution edge(density);
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && edge(rng)) pairs.emplace_back(i, j);
  return transitive_closure(pairs, n);
}

inline std::vector<std::string> label_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t l = 0; l < m; ++l) out.push_back("L" + std::to_string(l));
  return out;
}

/// Random instance with a realizer of the requested dimension (1 or 2), or a
/// random label poset without realizer when dimension == 0.
inline Instance random_instance(std::size_t n, std::size_t labels, int dimension, std::mt19937_64& rng,
                                double density = 0.35, bool rational_weights = true) {
  std::optional<TotalOrderRealizer> realizer;
  Poset label_order;
  if (dimension == 0) {
    label_order = random_poset(labels, rng, 0.4);
  } else {
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> base(labels);
    std::iota(base.begin(), base.end(), 0);
    chains.push_back(base);
    for (int s = 1; s < dimension; ++s) {
      std::shuffle(base.begin(), base.end(), rng);
      chains.push_back(base);
    }
    realizer = TotalOrderRealizer::create(std::move(chains));
    label_order = realizer->intersection();
  }
  std::uniform_int_distribution<std::size_t> pick(0, labels - 1);
  std::vector<Object> objects;
  for (std::size_t i = 0; i < n; ++i)
    objects.push_back({"o" + std::to_string(i), random_weight(rng, rational_weights), pick(rng)});
  return Instance::create(std::move(objects), random_poset(n, rng, density), label_names(labels),
                          std::move(label_order), std::move(realizer));
}

/// Heaviest acceptable subset by plain enumeration of all 2^n subsets,
/// checking the pairwise monotonicity definition directly.
inline Rational brute_max_acceptable(const Instance& inst) {
  const std::size_t n = inst.size();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    Rational w = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      w += inst.weight(i);
      for (std::size_t j = 0; j < n && ok; ++j)
        if (((mask >> j) & 1u) && inst.object_order().geq(i, j) &&
            !inst.label_order().geq(inst.label_of(i), inst.label_of(j)))
          ok = false;
    }
    if (ok && w > best) best = w;
  }
  return best;
}

/// Heaviest independent set by enumeration.
inline Rational brute_max_independent(std::size_t n, const std::vector<Rational>& weights,
                                      const std::vector<IndexPair>& edges) {
  std::vector<std::uint64_t> conflict(n, 0);
  for (auto [a, b] : edges) {
    conflict[a] |= std::uint64_t{1} << b;
    conflict[b] |= std::uint64_t{1} << a;
  }
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    Rational w = 0;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((mask >> v) & 1u) {
        if (conflict[v] & mask) ok = false;
        w += weights[v];
      }
    if (ok && w > best) best = w;
  }
  return best;
}

/// Largest independent set size for unit weights: include/exclude recursion
/// over bitmasks, no bounding.
inline std::size_t unit_max_independent(std::size_t n, const std::vector<IndexPair>& edges) {
  std::vector<std::uint64_t> conflict(n, 0);
  for (auto [a, b] : edges) {
    conflict[a] |= std::uint64_t{1} << b;
    conflict[b] |= std::uint64_t{1} << a;
  }
  auto go = [&](auto&& self, std::size_t v, std::uint64_t blocked) -> std::size_t {
    if (v == n) return 0;
    std::size_t skip = self(self, v + 1, blocked);
    if ((blocked >> v) & 1u) return skip;
    return std::max(skip, 1 + self(self, v + 1, blocked | conflict[v]));
  };
  return go(go, 0, 0);
}

}  // namespace maxcms::testing
