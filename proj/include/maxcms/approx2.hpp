#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"
#include "maxcms/specgraph.hpp"

namespace maxcms {

// Relaxation of the two-part independent set problem. A vertex set is
// encoded twice: x over the path polytope of part 1 and y over that of part 2.
//
//   psi(x, y)   = sum w (x y)                          bilinear objective
//   gamma(x, y) = 1/2 sum w ((x + y)^2 - (x + y))      convex reformulation
//   phi(x, y)   = 1/2 sum w ((x + y) - (x - y)^2)      concave surrogate
//
// All three agree on boolean vectors, and max phi >= max psi over the product
// of the two polytopes, so a near-maximizer of phi followed by two linear
// oracle calls yields an independent set with a provable loss bound.

Rational psi(std::span<const Rational> x, std::span<const Rational> y,
             std::span<const Rational> w);
Rational gamma(std::span<const Rational> x, std::span<const Rational> y,
               std::span<const Rational> w);
Rational phi_concave(std::span<const Rational> x, std::span<const Rational> y,
                     std::span<const Rational> w);

struct Gradient {
  std::vector<Rational> gx;  // w (y - x + 1/2)
  std::vector<Rational> gy;  // w (x - y + 1/2)
};
Gradient phi_gradient(std::span<const Rational> x, std::span<const Rational> y,
                      std::span<const Rational> w);

struct RelaxationPoint {
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational psi;
  Rational gamma;
  Rational phi;
};

RelaxationPoint evaluate(std::vector<Rational> x, std::vector<Rational> y,
                         std::span<const Rational> w);

inline const Rational kDefaultEpsilon{1, 16};

struct EpsilonSolveOptions {
  Rational epsilon = kDefaultEpsilon;
  // Iterates are rounded down to multiples of 2^-dyadic_bits to keep
  // denominators bounded; rounding down stays inside both polytopes.
  unsigned dyadic_bits = 40;
  std::size_t hard_cap = 2'000'000;
};

struct EpsilonSolution {
  RelaxationPoint point;     // after clamp_box
  Rational gap;              // certified: max phi - phi(point) <= gap <= epsilon
  Rational phi_unclamped;
  std::size_t iterations = 0;
  std::size_t budget = 0;
};

/// Conditional-gradient maximization of phi over the product of the path
/// polytopes of g's two parts, with exact line search. Stops as soon as the
/// duality gap max <grad, s - p> is at most epsilon; concavity makes that gap
/// an upper bound on the remaining suboptimality. The returned point is then
/// clamped to |x - y| <= 1/2, which cannot lower phi.
///
/// Throws InvalidInput unless g has exactly two parts and epsilon > 0, and
/// BudgetExhausted when ceil(8 C / epsilon) iterations (C = 2 n max w, capped
/// by options.hard_cap) do not reach the target.
EpsilonSolution epsilon_solve(const SpecialGraph& g, const EpsilonSolveOptions& options = {});

/// Wherever |x_v - y_v| > 1/2, lowers the larger coordinate to the smaller
/// plus 1/2. Both polytopes are closed under lowering coordinates, and phi
/// rises by w_v (|x_v - y_v| - 1/2)^2 / 2 at every touched vertex.
std::pair<std::vector<Rational>, std::vector<Rational>> clamp_box(std::span<const Rational> x,
                                                                  std::span<const Rational> y);

struct Rounding {
  std::vector<Rational> x;          // boolean, independent in part 1
  std::vector<Rational> y;          // boolean, independent in part 2
  std::vector<std::size_t> kept;    // x_v = y_v = 1
  Rational kept_weight;
};

/// x* maximizes psi(., y') over part 1, then y* maximizes psi(x*, .) over
/// part 2. psi(x*, y*) >= psi(x*, y') >= psi(x', y').
Rounding round_solution(const SpecialGraph& g, std::span<const Rational> x,
                        std::span<const Rational> y);

/// Worst-case gap between the optimum and the rounded set's weight, given
/// alpha = phi(x', y') / W:
///   alpha >= 1/2        : (1/4 - (alpha - 1/2)^2) W + eps
///   3/8 <= alpha <= 1/2 : W / 4 + eps
///   alpha <= 3/8        : (1/4 - (alpha - 3/8)^2) W + eps
/// Throws InvalidInput when alpha is outside [0, 1].
Rational rounding_loss_bound(const Rational& alpha, const Rational& total_weight,
                             const Rational& epsilon);

struct ApproxReport {
  Rational total_weight;
  Rational alpha;
  Rational epsilon;
  Rational gap;
  Rational bound;
  Rational kept_weight;
  Rational removed_weight;
  std::size_t iterations = 0;
  // Present only when an exact optimum was supplied.
  std::optional<Rational> optimum;
  std::optional<Rational> alpha_prime;  // optimum / W
  std::optional<Rational> delta;        // W - optimum
  std::optional<bool> within_bound;     // optimum - kept <= bound
  std::optional<bool> within_ratio;     // removed <= (1 + alpha') delta + eps, only if alpha' >= 1/2
  std::optional<bool> within_quarter;   // removed - delta <= W/4 + eps
};

/// Fills every field; the optional ones only when `optimum` is given.
ApproxReport report(const SpecialGraph& g, const EpsilonSolution& relaxation,
                    const Rounding& rounding, const Rational& epsilon,
                    const std::optional<Rational>& optimum);

struct Approx2Result {
  EpsilonSolution relaxation;
  Rounding rounding;
  ApproxReport report;
};

/// Whole pipeline on a two-part conflict graph.
Approx2Result solve_approx2(const SpecialGraph& g, const EpsilonSolveOptions& options = {},
                            const std::optional<Rational>& optimum = std::nullopt);

/// Whole pipeline on an instance whose label order carries a two-chain
/// realizer. Throws AlgorithmMismatch otherwise.
Approx2Result solve_approx2(const Instance& inst, const EpsilonSolveOptions& options = {},
                            const std::optional<Rational>& optimum = std::nullopt);

}  // namespace maxcms
