#include "maxcms/approx2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "maxcms/errors.hpp"
#include "maxcms/flow.hpp"

namespace maxcms {
namespace {

const Rational kHalf{1, 2};

void check_lengths(std::span<const Rational> x, std::span<const Rational> y,
                   std::span<const Rational> w) {
  if (x.size() != w.size() || y.size() != w.size())
    throw InvalidInput("relaxation vectors do not match the weight vector length");
}

const std::vector<IndexPair>& part(const SpecialGraph& g, std::size_t s) {
  return (*g.parts)[s];
}

}  // namespace

Rational psi(std::span<const Rational> x, std::span<const Rational> y,
             std::span<const Rational> w) {
  check_lengths(x, y, w);
  Rational total = 0;
  for (std::size_t v = 0; v < w.size(); ++v) total += w[v] * x[v] * y[v];
  return total;
}

Rational gamma(std::span<const Rational> x, std::span<const Rational> y,
               std::span<const Rational> w) {
  check_lengths(x, y, w);
  Rational total = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    Rational s = x[v] + y[v];
    total += w[v] * (s * s - s);
  }
  return total / 2;
}

Rational phi_concave(std::span<const Rational> x, std::span<const Rational> y,
                     std::span<const Rational> w) {
  check_lengths(x, y, w);
  Rational total = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    Rational d = x[v] - y[v];
    total += w[v] * (x[v] + y[v] - d * d);
  }
  return total / 2;
}

Gradient phi_gradient(std::span<const Rational> x, std::span<const Rational> y,
                      std::span<const Rational> w) {
  check_lengths(x, y, w);
  Gradient g;
  g.gx.reserve(w.size());
  g.gy.reserve(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    g.gx.push_back(w[v] * (y[v] - x[v] + kHalf));
    g.gy.push_back(w[v] * (x[v] - y[v] + kHalf));
  }
  return g;
}

RelaxationPoint evaluate(std::vector<Rational> x, std::vector<Rational> y,
                         std::span<const Rational> w) {
  RelaxationPoint p;
  p.psi = psi(x, y, w);
  p.gamma = gamma(x, y, w);
  p.phi = phi_concave(x, y, w);
  p.x = std::move(x);
  p.y = std::move(y);
  return p;
}

EpsilonSolution epsilon_solve(const SpecialGraph& g, const EpsilonSolveOptions& options) {
  if (!g.parts || g.parts->size() != 2) throw InvalidInput("epsilon_solve needs exactly two edge parts");
  if (options.epsilon <= 0) throw InvalidInput("epsilon must be positive");
  const std::size_t n = g.n;
  const auto& w = g.weights;

  Rational max_weight = 0;
  for (const auto& wv : w) max_weight = std::max(max_weight, wv);
  Rational curvature = 2 * max_weight * static_cast<unsigned long>(n);
  Rational raw_budget = 8 * curvature / options.epsilon;
  mpz_class ceil_budget;
  mpz_cdiv_q(ceil_budget.get_mpz_t(), raw_budget.get_num_mpz_t(), raw_budget.get_den_mpz_t());
  std::size_t budget = options.hard_cap;
  if (ceil_budget < options.hard_cap) budget = std::max<std::size_t>(ceil_budget.get_ui(), 1);

  std::vector<Rational> x(n, Rational(0)), y(n, Rational(0));
  Rational gap;
  std::size_t iteration = 0;
  while (true) {
    Gradient grad = phi_gradient(x, y, w);
    std::vector<Rational> sx = linear_oracle(n, part(g, 0), grad.gx);
    std::vector<Rational> sy = linear_oracle(n, part(g, 1), grad.gy);

    gap = 0;
    Rational curv = 0;
    std::vector<Rational> dx(n), dy(n);
    for (std::size_t v = 0; v < n; ++v) {
      dx[v] = sx[v] - x[v];
      dy[v] = sy[v] - y[v];
      gap += grad.gx[v] * dx[v] + grad.gy[v] * dy[v];
      Rational diff = dx[v] - dy[v];
      curv += w[v] * diff * diff;
    }
    if (gap <= options.epsilon) break;
    if (iteration >= budget)
      throw BudgetExhausted("epsilon_solve: iteration budget of " + std::to_string(budget) +
                                " exhausted with gap " + to_string(gap),
                            to_string(gap));
    ++iteration;

    // phi(p + t d) = phi(p) + t gap - t^2 curv / 2
    Rational step = 1;
    if (curv > 0 && gap < curv) step = gap / curv;
    for (std::size_t v = 0; v < n; ++v) {
      x[v] = floor_dyadic(x[v] + step * dx[v], options.dyadic_bits);
      y[v] = floor_dyadic(y[v] + step * dy[v], options.dyadic_bits);
    }
  }

  EpsilonSolution out;
  out.phi_unclamped = phi_concave(x, y, w);
  out.gap = gap;
  out.iterations = iteration;
  out.budget = budget;
  auto [cx, cy] = clamp_box(x, y);
  out.point = evaluate(std::move(cx), std::move(cy), w);
  return out;
}

std::pair<std::vector<Rational>, std::vector<Rational>> clamp_box(std::span<const Rational> x,
                                                                  std::span<const Rational> y) {
  if (x.size() != y.size()) throw InvalidInput("clamp_box: vector lengths differ");
  std::vector<Rational> cx(x.begin(), x.end()), cy(y.begin(), y.end());
  for (std::size_t v = 0; v < cx.size(); ++v) {
    if (cx[v] - cy[v] > kHalf)
      cx[v] = cy[v] + kHalf;
    else if (cy[v] - cx[v] > kHalf)
      cy[v] = cx[v] + kHalf;
  }
  return {std::move(cx), std::move(cy)};
}

Rounding round_solution(const SpecialGraph& g, std::span<const Rational> x,
                        std::span<const Rational> y) {
  if (!g.parts || g.parts->size() != 2) throw InvalidInput("round_solution needs exactly two edge parts");
  check_lengths(x, y, g.weights);
  const std::size_t n = g.n;
  std::vector<Rational> cx(n), cy(n);
  for (std::size_t v = 0; v < n; ++v) cx[v] = g.weights[v] * y[v];
  Rounding r;
  r.x = linear_oracle(n, part(g, 0), cx);
  for (std::size_t v = 0; v < n; ++v) cy[v] = g.weights[v] * r.x[v];
  r.y = linear_oracle(n, part(g, 1), cy);
  r.kept_weight = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (r.x[v] == 1 && r.y[v] == 1) {
      r.kept.push_back(v);
      r.kept_weight += g.weights[v];
    }
  return r;
}

Rational rounding_loss_bound(const Rational& alpha, const Rational& total_weight,
                             const Rational& epsilon) {
  if (alpha < 0 || alpha > 1) throw InvalidInput("alpha must lie in [0, 1]");
  const Rational quarter{1, 4};
  const Rational three_eighths{3, 8};
  Rational factor;
  if (alpha >= kHalf) {
    Rational d = alpha - kHalf;
    factor = quarter - d * d;
  } else if (alpha >= three_eighths) {
    factor = quarter;
  } else {
    Rational d = alpha - three_eighths;
    factor = quarter - d * d;
  }
  return factor * total_weight + epsilon;
}

ApproxReport report(const SpecialGraph& g, const EpsilonSolution& relaxation,
                    const Rounding& rounding, const Rational& epsilon,
                    const std::optional<Rational>& optimum) {
  ApproxReport r;
  r.total_weight = g.total_weight();
  r.alpha = r.total_weight > 0 ? Rational(relaxation.point.phi / r.total_weight) : Rational(1);
  if (r.alpha < 0 || r.alpha > 1) throw std::logic_error("relaxation value outside [0, W]");
  r.epsilon = epsilon;
  r.gap = relaxation.gap;
  r.bound = rounding_loss_bound(r.alpha, r.total_weight, epsilon);
  r.kept_weight = rounding.kept_weight;
  r.removed_weight = r.total_weight - rounding.kept_weight;
  r.iterations = relaxation.iterations;
  if (!optimum) return r;

  r.optimum = *optimum;
  r.delta = r.total_weight - *optimum;
  r.alpha_prime = r.total_weight > 0 ? Rational(*optimum / r.total_weight) : Rational(1);
  r.within_bound = *optimum - r.kept_weight <= r.bound;
  r.within_quarter = r.removed_weight - *r.delta <= r.total_weight / 4 + epsilon;
  if (*r.alpha_prime >= kHalf)
    r.within_ratio = r.removed_weight <= (1 + *r.alpha_prime) * *r.delta + epsilon;
  return r;
}

Approx2Result solve_approx2(const SpecialGraph& g, const EpsilonSolveOptions& options,
                            const std::optional<Rational>& optimum) {
  Approx2Result out;
  out.relaxation = epsilon_solve(g, options);
  out.rounding = round_solution(g, out.relaxation.point.x, out.relaxation.point.y);
  out.report = report(g, out.relaxation, out.rounding, options.epsilon, optimum);
  return out;
}

Approx2Result solve_approx2(const Instance& inst, const EpsilonSolveOptions& options,
                            const std::optional<Rational>& optimum) {
  if (!inst.realizer() || inst.realizer()->dimension() != 2)
    throw AlgorithmMismatch("approx2 requires a label order given by two chains");
  return solve_approx2(decompose_edges(inst), options, optimum);
}

}  // namespace maxcms
