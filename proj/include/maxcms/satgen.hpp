#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/specgraph.hpp"

namespace maxcms {

struct Literal {
  std::size_t variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause3 = std::array<Literal, 3>;

/// 3-CNF whose clauses each mention three distinct variables.
struct Cnf3 {
  std::size_t variables = 0;
  std::vector<Clause3> clauses;

  /// Throws InvalidInput on an out-of-range or repeated variable in a clause.
  static Cnf3 create(std::size_t variables, std::vector<Clause3> clauses);
};

/// DIMACS "p cnf" input; every clause must have exactly three literals.
/// Throws ParseError on malformed input and InvalidInput on repeated variables.
Cnf3 parse_dimacs(std::istream& in);
std::string to_dimacs(const Cnf3& f);

/// Uniform random 3-CNF with distinct variables per clause. Needs variables >= 3
/// whenever clauses > 0.
Cnf3 random_cnf3(std::size_t variables, std::size_t clauses, std::mt19937_64& rng);

/// Hardness gadget of a 3-CNF. Vertices: u_i = 2i, not-u_i = 2i + 1, then
/// c_j^s = 2n + 3j + s. literal_edges are u_i -> not-u_i, u_k -> c_j^s when
/// u_k sits at position s of clause j and c_j^s -> not-u_k when not-u_k does;
/// clause_edges make each clause triple a transitive tournament. Both sets are
/// transitive, and closure \ edges is transitive as well, so the gadget is a
/// conflict digraph (closure minus a preorder).
struct Gadget {
  std::size_t variables = 0;
  std::size_t clauses = 0;
  std::vector<std::string> names;
  std::vector<IndexPair> literal_edges;
  std::vector<IndexPair> clause_edges;
  std::vector<IndexPair> edges;           // union, sorted
  Relation closure;                       // strict transitive closure of edges
  std::vector<IndexPair> closure_extra;   // closure \ edges
  std::size_t cover_target = 0;           // n + 2m
  std::size_t independence_target = 0;    // n + m

  std::size_t vertex_count() const { return names.size(); }
  static std::size_t positive(std::size_t i) { return 2 * i; }
  static std::size_t negative(std::size_t i) { return 2 * i + 1; }
  std::size_t clause_vertex(std::size_t j, std::size_t s) const { return 2 * variables + 3 * j + s; }

  /// Unit weights, parts {literal_edges, clause_edges}.
  SpecialGraph graph() const;
};

/// Throws std::logic_error if closure \ edges comes out non-transitive.
Gadget build_gadget(const Cnf3& f);

/// Instance whose optimum equals the gadget's maximum independent set:
/// object order = closure (plus identity), labels = classes of the preorder
/// closure \ edges. Object ids are the gadget vertex names.
Instance gadget_to_instance(const Gadget& g);

/// Exhaustive satisfiability check. Throws SizeLimitExceeded above `limit`
/// variables.
bool sat_check_brute(const Cnf3& f, std::size_t limit = 20);

}  // namespace maxcms
