#include "maxcms/satgen.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "maxcms/errors.hpp"

namespace maxcms {

Cnf3 Cnf3::create(std::size_t variables, std::vector<Clause3> clauses) {
  for (const auto& c : clauses) {
    for (const auto& lit : c)
      if (lit.variable >= variables) throw InvalidInput("clause literal refers to an unknown variable");
    if (c[0].variable == c[1].variable || c[0].variable == c[2].variable ||
        c[1].variable == c[2].variable)
      throw InvalidInput("clause repeats a variable");
  }
  return Cnf3{variables, std::move(clauses)};
}

Cnf3 parse_dimacs(std::istream& in) {
  std::size_t variables = 0, declared = 0;
  bool have_header = false;
  std::vector<Clause3> clauses;
  std::vector<long long> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (have_header || !(ls >> fmt >> variables >> declared) || fmt != "cnf")
        throw ParseError("malformed DIMACS header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("DIMACS clause before header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) throw ParseError("DIMACS clause does not have exactly 3 literals");
      Clause3 clause;
      for (std::size_t s = 0; s < 3; ++s) {
        long long v = pending[s] < 0 ? -pending[s] : pending[s];
        if (v > static_cast<long long>(variables)) throw ParseError("DIMACS literal out of range");
        clause[s] = Literal{static_cast<std::size_t>(v - 1), pending[s] < 0};
      }
      clauses.push_back(clause);
      pending.clear();
    }
    if (!ls.eof()) throw ParseError("malformed DIMACS clause line");
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated DIMACS clause");
  if (clauses.size() != declared) throw ParseError("DIMACS clause count does not match header");
  return Cnf3::create(variables, std::move(clauses));
}

std::string to_dimacs(const Cnf3& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& lit : c)
      out << (lit.negated ? "-" : "") << lit.variable + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf3 random_cnf3(std::size_t variables, std::size_t clauses, std::mt19937_64& rng) {
  if (clauses > 0 && variables < 3) throw InvalidInput("random 3-CNF needs at least 3 variables");
  std::vector<Clause3> out;
  std::vector<std::size_t> vars(variables);
  for (std::size_t i = 0; i < variables; ++i) vars[i] = i;
  for (std::size_t j = 0; j < clauses; ++j) {
    Clause3 c;
    for (std::size_t s = 0; s < 3; ++s) {
      std::uniform_int_distribution<std::size_t> pick(s, variables - 1);
      std::swap(vars[s], vars[pick(rng)]);
      c[s] = Literal{vars[s], std::bernoulli_distribution(0.5)(rng)};
    }
    out.push_back(c);
  }
  return Cnf3::create(variables, std::move(out));
}

SpecialGraph Gadget::graph() const {
  SpecialGraph g;
  g.n = vertex_count();
  g.weights.assign(g.n, Rational(1));
  g.edges = edges;
  g.parts = std::vector<std::vector<IndexPair>>{literal_edges, clause_edges};
  return g;
}

Gadget build_gadget(const Cnf3& f) {
  Gadget g;
  g.variables = f.variables;
  g.clauses = f.clauses.size();
  for (std::size_t i = 0; i < f.variables; ++i) {
    g.names.push_back("u" + std::to_string(i + 1));
    g.names.push_back("~u" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < g.clauses; ++j)
    for (std::size_t s = 0; s < 3; ++s)
      g.names.push_back("c" + std::to_string(j + 1) + "_" + std::to_string(s + 1));

  for (std::size_t i = 0; i < f.variables; ++i)
    g.literal_edges.emplace_back(Gadget::positive(i), Gadget::negative(i));
  for (std::size_t j = 0; j < g.clauses; ++j) {
    for (std::size_t s = 0; s < 3; ++s) {
      const Literal& lit = f.clauses[j][s];
      if (lit.negated)
        g.literal_edges.emplace_back(g.clause_vertex(j, s), Gadget::negative(lit.variable));
      else
        g.literal_edges.emplace_back(Gadget::positive(lit.variable), g.clause_vertex(j, s));
    }
    g.clause_edges.emplace_back(g.clause_vertex(j, 0), g.clause_vertex(j, 1));
    g.clause_edges.emplace_back(g.clause_vertex(j, 1), g.clause_vertex(j, 2));
    g.clause_edges.emplace_back(g.clause_vertex(j, 0), g.clause_vertex(j, 2));
  }
  std::sort(g.literal_edges.begin(), g.literal_edges.end());
  std::sort(g.clause_edges.begin(), g.clause_edges.end());
  g.edges = g.literal_edges;
  g.edges.insert(g.edges.end(), g.clause_edges.begin(), g.clause_edges.end());
  std::sort(g.edges.begin(), g.edges.end());

  const std::size_t n = g.vertex_count();
  g.closure = Relation(n);
  for (auto [a, b] : g.edges) g.closure.set(a, b);
  g.closure.close_transitively();

  Relation extra(n);
  for (auto [a, b] : g.closure.strict_pairs())
    if (!std::binary_search(g.edges.begin(), g.edges.end(), IndexPair{a, b})) {
      extra.set(a, b);
      g.closure_extra.emplace_back(a, b);
    }
  if (!extra.is_transitive()) throw std::logic_error("gadget closure minus edges is not transitive");

  g.cover_target = f.variables + 2 * g.clauses;
  g.independence_target = f.variables + g.clauses;
  return g;
}

Instance gadget_to_instance(const Gadget& g) {
  const std::size_t n = g.vertex_count();
  Relation order = Relation::identity(n);
  Relation pre = Relation::identity(n);
  // Stored as <=: an edge (a, b) reads a >= b.
  for (auto [a, b] : g.closure.strict_pairs()) order.set(b, a);
  for (auto [a, b] : g.closure_extra) pre.set(b, a);

  std::vector<Rational> weights(n, Rational(1));
  Instance q = quotient_reduce(weights, Preorder::from_relation(std::move(pre)),
                               Poset::from_relation(std::move(order)));
  std::vector<Object> objects = q.objects();
  for (std::size_t v = 0; v < n; ++v) objects[v].id = g.names[v];
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < q.label_count(); ++c) labels.push_back("class" + std::to_string(c + 1));
  return Instance::create(std::move(objects), q.object_order(), std::move(labels), q.label_order());
}

bool sat_check_brute(const Cnf3& f, std::size_t limit) {
  if (f.variables > limit || f.variables > 62)
    throw SizeLimitExceeded("sat_check_brute limited to " + std::to_string(limit) + " variables");
  const std::uint64_t total = std::uint64_t{1} << f.variables;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (const auto& lit : c) sat = sat || (((assignment >> lit.variable) & 1u) != 0) != lit.negated;
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace maxcms
