#include <doctest.h>

#include <random>

#include "maxcms/approx2.hpp"
#include "maxcms/errors.hpp"
#include "maxcms/exact.hpp"
#include "maxcms/flow.hpp"
#include "support.hpp"

using namespace maxcms;
using maxcms::testing::frac;

namespace {

using Vec = std::vector<Rational>;

SpecialGraph two_part_graph(std::size_t n, Vec w, std::vector<IndexPair> p1, std::vector<IndexPair> p2) {
  SpecialGraph g;
  g.n = n;
  g.weights = std::move(w);
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  g.edges = p1;
  g.edges.insert(g.edges.end(), p2.begin(), p2.end());
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.parts = std::vector<std::vector<IndexPair>>{p1, p2};
  return g;
}

// k disjoint pairs a <= b whose labels are incomparable: every pair conflicts.
Instance half_family(std::size_t k) {
  std::vector<Object> objs;
  std::vector<IndexPair> order;
  for (std::size_t i = 0; i < k; ++i) {
    objs.push_back({"a" + std::to_string(i), 1, 1});
    objs.push_back({"b" + std::to_string(i), 1, 0});
    order.emplace_back(2 * i, 2 * i + 1);
  }
  return Instance::create(objs, Poset::from_preorder(transitive_closure(order, 2 * k)), {"x", "y"},
                          Poset::antichain(2), TotalOrderRealizer::create({{0, 1}, {1, 0}}));
}

}  // namespace

TEST_CASE("functional values") {
  Vec z4(4, 0), h4(4, frac(1, 2)), u4(4, 1);
  CHECK(psi(z4, z4, u4) == 0);
  CHECK(psi(h4, h4, u4) == 1);
  Vec s{1, 0, 1, 1}, w{2, 3, frac(1, 3), 5};
  CHECK(psi(s, s, w) == 2 + frac(1, 3) + 5);
  CHECK(gamma(z4, z4, u4) == 0);
  Vec x{1, 0}, y{0, 0}, w2{1, 1};
  CHECK(gamma(x, y, w2) == 0);
  CHECK(phi_concave(x, y, w2) == 0);
  Vec a{frac(1, 3), frac(3, 4)};
  CHECK(phi_concave(a, a, w2) == frac(1, 3) + frac(3, 4));
  CHECK(evaluate(s, s, w).phi == psi(s, s, w));
  Vec short_vec{1};
  CHECK_THROWS_AS(psi(short_vec, x, w2), InvalidInput);
  CHECK_THROWS_AS(phi_gradient(x, short_vec, w2), InvalidInput);
}

TEST_CASE("gradient") {
  Vec x{frac(1, 3), 1}, w{2, 6};
  Gradient g = phi_gradient(x, x, w);
  CHECK(g.gx == Vec{1, 3});
  CHECK(g.gy == Vec{1, 3});
  Vec y{0, frac(1, 2)};
  Gradient h = phi_gradient(x, y, Vec{0, 0});
  CHECK(h.gx == Vec{0, 0});
  CHECK(h.gy == Vec{0, 0});
  Gradient k = phi_gradient(x, y, w);
  CHECK(k.gx == Vec{2 * (0 - frac(1, 3) + frac(1, 2)), 6 * (frac(1, 2) - 1 + frac(1, 2))});
  CHECK(k.gy == Vec{2 * (frac(1, 3) + frac(1, 2)), 6 * (1 - frac(1, 2) + frac(1, 2))});
}

TEST_CASE("loss bound regimes") {
  CHECK(rounding_loss_bound(1, 10, frac(1, 16)) == frac(1, 16));
  CHECK(rounding_loss_bound(frac(1, 2), 8, frac(1, 16)) == 2 + frac(1, 16));
  CHECK(rounding_loss_bound(frac(1, 4), 8, 0) == frac(15, 8));
  CHECK(rounding_loss_bound(frac(3, 8), 8, 0) == 2);
  CHECK(rounding_loss_bound(frac(7, 16), 8, 0) == 2);
  CHECK(rounding_loss_bound(0, 64, 0) == 16 - 9);
  CHECK_THROWS_AS(rounding_loss_bound(frac(-1, 8), 8, 0), InvalidInput);
  CHECK_THROWS_AS(rounding_loss_bound(frac(9, 8), 8, 0), InvalidInput);
}

TEST_CASE("clamp_box") {
  Vec x{frac(1, 2), 1, 0}, y{frac(1, 4), 0, frac(9, 10)};
  auto [cx, cy] = clamp_box(x, y);
  CHECK(cx == Vec{frac(1, 2), frac(1, 2), 0});
  CHECK(cy == Vec{frac(1, 4), 0, frac(1, 2)});
  Vec w{1, 1, 1};
  CHECK(phi_concave(cx, cy, w) - phi_concave(x, y, w) == frac(1, 8) + frac(1, 2) * frac(4, 10) * frac(4, 10));
}

TEST_CASE("clamp never lowers phi and keeps feasibility") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = maxcms::testing::random_instance(6, 4, 2, rng, 0.4);
    SpecialGraph g = decompose_edges(inst);
    const auto& p = *g.parts;
    // Random convex combination of oracle vertices is feasible.
    Vec x(g.n, 0), y(g.n, 0);
    for (int k = 0; k < 3; ++k) {
      Vec c1, c2;
      for (std::size_t v = 0; v < g.n; ++v) {
        c1.push_back(frac(long(rng() % 7) - 2, 1));
        c2.push_back(frac(long(rng() % 7) - 2, 1));
      }
      auto s1 = linear_oracle(g.n, p[0], c1), s2 = linear_oracle(g.n, p[1], c2);
      for (std::size_t v = 0; v < g.n; ++v) {
        x[v] += s1[v] / 3;
        y[v] += s2[v] / 3;
      }
    }
    auto [cx, cy] = clamp_box(x, y);
    REQUIRE(membership(g.n, p[0], cx).inside);
    REQUIRE(membership(g.n, p[1], cy).inside);
    for (std::size_t v = 0; v < g.n; ++v) {
      Vec one{x[v]}, two{y[v]}, c1{cx[v]}, c2{cy[v]}, wv{g.weights[v]};
      REQUIRE(phi_concave(c1, c2, wv) >= phi_concave(one, two, wv));
      REQUIRE(abs(cx[v] - cy[v]) <= frac(1, 2));
    }
  }
}

TEST_CASE("epsilon_solve without edges reaches the all-ones point") {
  SpecialGraph g = two_part_graph(3, {1, 2, frac(1, 2)}, {}, {});
  EpsilonSolution s = epsilon_solve(g);
  CHECK(s.point.x == Vec{1, 1, 1});
  CHECK(s.point.y == Vec{1, 1, 1});
  CHECK(s.point.phi == frac(7, 2));
  CHECK(s.gap == 0);
  Rounding r = round_solution(g, s.point.x, s.point.y);
  CHECK(r.kept == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("epsilon_solve errors") {
  SpecialGraph g = two_part_graph(2, {1, 1}, {{0, 1}}, {});
  EpsilonSolveOptions o;
  o.epsilon = 0;
  CHECK_THROWS_AS(epsilon_solve(g, o), InvalidInput);
  SpecialGraph one_part = g;
  one_part.parts->pop_back();
  CHECK_THROWS_AS(epsilon_solve(one_part), InvalidInput);
  EpsilonSolveOptions tiny;
  tiny.epsilon = frac(1, 1000000);
  tiny.hard_cap = 1;
  SpecialGraph hard = two_part_graph(3, {1, 1, 1}, {{0, 1}}, {{1, 2}});
  CHECK_THROWS_AS(epsilon_solve(hard, tiny), BudgetExhausted);
}

TEST_CASE("relaxation dominates the optimum on single-edge graphs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 7;
    std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
    Vec w;
    for (std::size_t v = 0; v < n; ++v) w.push_back(maxcms::testing::random_weight(rng));
    std::vector<IndexPair> e{{a, b}}, none;
    SpecialGraph g = trial % 2 ? two_part_graph(n, w, e, none) : two_part_graph(n, w, none, e);
    EpsilonSolution s = epsilon_solve(g);
    CHECK(s.gap <= kDefaultEpsilon);
    REQUIRE(s.point.phi + kDefaultEpsilon >= maxcms::testing::brute_max_independent(n, w, g.edges));
  }
}

TEST_CASE("rounding is monotone and keeps an acceptable set") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng() % 9;
    Instance inst = maxcms::testing::random_instance(n, 2 + rng() % 4, 2, rng, 0.4);
    SpecialGraph g = decompose_edges(inst);
    Approx2Result r = solve_approx2(inst);
    const auto& pt = r.relaxation.point;
    REQUIRE(membership(n, (*g.parts)[0], pt.x).inside);
    REQUIRE(membership(n, (*g.parts)[1], pt.y).inside);
    REQUIRE(r.relaxation.gap <= kDefaultEpsilon);
    REQUIRE(r.relaxation.point.phi >= r.relaxation.phi_unclamped);
    REQUIRE(psi(r.rounding.x, pt.y, g.weights) >= pt.psi);
    REQUIRE(psi(r.rounding.x, r.rounding.y, g.weights) >= psi(r.rounding.x, pt.y, g.weights));
    REQUIRE(psi(r.rounding.x, r.rounding.y, g.weights) == r.rounding.kept_weight);
    REQUIRE(is_acceptable(inst, r.rounding.kept));
  }
}

TEST_CASE("rounding an independent set indicator keeps at least its weight") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = maxcms::testing::random_instance(8, 3, 2, rng, 0.4);
    SpecialGraph g = decompose_edges(inst);
    ExactResult best = brute_force_is(g);
    Vec ind(g.n, 0);
    for (auto v : best.best_set) ind[v] = 1;
    REQUIRE(round_solution(g, ind, ind).kept_weight >= best.best_weight);
  }
}

TEST_CASE("reports") {
  SUBCASE("monotone instance") {
    std::vector<Object> objs{{"a", 1, 0}, {"b", 2, 0}};
    Instance mono = Instance::create(objs, Poset::chain(2), {"x", "y"}, Poset::antichain(2),
                                     TotalOrderRealizer::create({{0, 1}, {1, 0}}));
    ApproxReport r = solve_approx2(mono, {}, Rational(3)).report;
    CHECK(*r.alpha_prime == 1);
    CHECK(*r.delta == 0);
    CHECK(r.removed_weight == 0);
    CHECK(r.alpha == 1);
    CHECK(*r.within_bound);
    CHECK(*r.within_ratio);
  }
  SUBCASE("half family") {
    for (std::size_t k = 1; k <= 4; ++k) {
      Instance inst = half_family(k);
      Rational opt = brute_force_maxcms(inst).best_weight;
      CHECK(opt == Rational(k));
      ApproxReport r = solve_approx2(inst, {}, opt).report;
      CHECK(*r.alpha_prime == frac(1, 2));
      CHECK(r.removed_weight <= frac(3, 2) * *r.delta + kDefaultEpsilon);
      CHECK(*r.within_ratio);
      CHECK(*r.within_quarter);
    }
  }
  SUBCASE("wrong dimension") {
    std::vector<Object> objs{{"a", 1, 0}};
    Instance inst = Instance::create(objs, Poset::chain(1), {"x"}, Poset::chain(1),
                                     TotalOrderRealizer::create({{0}}));
    CHECK_THROWS_AS(solve_approx2(inst), AlgorithmMismatch);
  }
}
