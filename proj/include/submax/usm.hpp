// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "submax/distribution.hpp"
#include "submax/element_set.hpp"
#include "submax/errors.hpp"
#include "submax/extreme_point.hpp"
#include "submax/oracle.hpp"
#include "submax/run_stats.hpp"

// Deterministic unconstrained submodular maximization with a guaranteed
// factor 1/2. The algorithm is an element-by-element double greedy run on
// an explicit distribution of states instead of coin flips: each state is
// a pair of nested sets (lower grows from the empty set, upper shrinks
// from the full ground set), and each element's accept/reject split is an
// extreme point of a two-constraint linear program, so the number of
// states stays linear in n.
namespace submax::usm {

struct PairState {
  ElementSet lower;  // committed elements
  ElementSet upper;  // committed plus still-undecided elements

  friend constexpr bool operator==(const PairState&, const PairState&) =
      default;
  friend constexpr std::strong_ordering operator<=>(const PairState& a,
                                                    const PairState& b) {
    if (auto c = a.lower <=> b.lower; c != 0) return c;
    return a.upper <=> b.upper;
  }
};

using PairDistribution = WeightedDistribution<PairState>;

// Per-state one-element gains for the current element u:
//   add_gain[j]  = f(lower_j + u) - f(lower_j)
//   drop_gain[j] = f(upper_j - u) - f(upper_j)
// Submodularity of f gives add_gain + drop_gain >= 0 for every state.
struct StepGains {
  std::vector<double> add_gain;
  std::vector<double> drop_gain;
};

// At most 2 fresh queries per support state: f(lower) and f(upper) stay
// cached across iterations, only the modified sets are new.
inline StepGains compute_gains(const PairDistribution& dist, int u,
                               CachedEvaluator& cache) {
  StepGains gains;
  gains.add_gain.reserve(dist.tuples().size());
  gains.drop_gain.reserve(dist.tuples().size());
  for (const auto& t : dist.tuples()) {
    double f_lower = cache.value(t.state.lower);
    double f_upper = cache.value(t.state.upper);
    gains.add_gain.push_back(cache.value(t.state.lower.with(u)) - f_lower);
    gains.drop_gain.push_back(cache.value(t.state.upper.without(u)) - f_upper);
  }
  return gains;
}

// Rewrites the accept/reject program as a signed fractional knapsack over
// the accept fractions z: the first inequality becomes the objective, the
// second becomes the budget row, and w = 1 - z is substituted away.
// Per support tuple j with probability p and gains (a, b):
//   value_j = p * (a - 3b),  size_j = p * (b - 3a)
// and the budget is sum_j p_j * (b_j - 2a_j).
inline std::pair<std::vector<SignedKnapsackItem>, double> reduce_to_knapsack(
    const StepGains& gains, const PairDistribution& dist) {
  std::vector<SignedKnapsackItem> items;
  items.reserve(dist.tuples().size());
  double budget = 0.0;
  for (std::size_t j = 0; j < dist.tuples().size(); ++j) {
    double p = dist.tuples()[j].p;
    double a = gains.add_gain[j];
    double b = gains.drop_gain[j];
    items.push_back({p * (a - 3.0 * b), p * (b - 3.0 * a),
                     static_cast<int>(j)});
    budget += p * (b - 2.0 * a);
  }
  return {std::move(items), budget};
}

// The accept/reject program in full, for the generic solver route.
// Variables z_0..z_{m-1}, w_0..w_{m-1}; both original inequalities are
// kept as rows and the objective is the converted first inequality, so
// the optimum value coincides with the knapsack route's.
inline DenseLP build_generic_lp(const StepGains& gains,
                                const PairDistribution& dist) {
  const int m = dist.support_size();
  DenseLP lp;
  lp.num_vars = 2 * m;
  lp.objective.assign(2 * m, 0.0);
  std::vector<double> row1(2 * m, 0.0);
  std::vector<double> row2(2 * m, 0.0);
  for (int j = 0; j < m; ++j) {
    double p = dist.tuples()[j].p;
    double a = gains.add_gain[j];
    double b = gains.drop_gain[j];
    lp.objective[j] = p * (a - 3.0 * b);
    row1[j] = p * (2.0 * b - a);
    row1[m + j] = -p * b;
    row2[j] = -p * a;
    row2[m + j] = p * (2.0 * a - b);
  }
  lp.add_inequality(std::move(row1), 0.0);
  lp.add_inequality(std::move(row2), 0.0);
  for (int j = 0; j < m; ++j) {
    std::vector<double> eq(2 * m, 0.0);
    eq[j] = 1.0;
    eq[m + j] = 1.0;
    lp.add_equality(std::move(eq), 1.0);
  }
  return lp;
}

enum class SolverMode { kKnapsack, kGeneric };

namespace detail {

// Both inequalities of the accept/reject program, evaluated at (z, w).
// A violation means the solver is broken, not the instance.
inline void check_program_point(const PairDistribution& dist,
                                const StepGains& gains,
                                const std::vector<double>& z,
                                const std::vector<double>& w) {
  double gain = 0.0, accept_drop = 0.0, reject_add = 0.0, scale = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    double p = dist.tuples()[j].p;
    double a = gains.add_gain[j];
    double b = gains.drop_gain[j];
    gain += p * (z[j] * a + w[j] * b);
    accept_drop += p * z[j] * b;
    reject_add += p * w[j] * a;
    scale += p * (std::fabs(a) + std::fabs(b));
  }
  double tol = kLpTolerance * scale;
  if (gain < 2.0 * accept_drop - tol || gain < 2.0 * reject_add - tol) {
    throw InternalError("accept/reject split violates the update program");
  }
}

}  // namespace detail

// One element update: splits every state's probability between accepting
// u into lower and dropping u from upper, using an extreme-point solution
// of the update program. Support grows by at most 1 on the knapsack route
// and at most 2 on the generic route.
inline PairDistribution step(const PairDistribution& dist, int u,
                             CachedEvaluator& cache, SolverMode mode,
                             bool unify = true) {
  const StepGains gains = compute_gains(dist, u, cache);
  const int m = dist.support_size();

  std::vector<double> z(m), w(m);
  if (mode == SolverMode::kKnapsack) {
    auto [items, budget] = reduce_to_knapsack(gains, dist);
    KnapsackSolution sol = solve_signed_knapsack(items, budget);
    for (int j = 0; j < m; ++j) {
      z[j] = sol.z[j];
      w[j] = 1.0 - sol.z[j];
    }
  } else {
    DenseLP lp = build_generic_lp(gains, dist);
    BasicSolution sol = solve_basic_optimal(lp);
    for (int j = 0; j < m; ++j) {
      z[j] = sol.x[j];
      w[j] = sol.x[m + j];
    }
  }
  detail::check_program_point(dist, gains, z, w);

  PairDistribution next;
  for (int j = 0; j < m; ++j) {
    const auto& t = dist.tuples()[j];
    if (z[j] > kProbabilityFloor) {
      next.add(z[j] * t.p, PairState{t.state.lower.with(u), t.state.upper});
    }
    if (w[j] > kProbabilityFloor) {
      next.add(w[j] * t.p, PairState{t.state.lower, t.state.upper.without(u)});
    }
  }
  return unify ? next.unified() : next;
}

struct Options {
  std::vector<int> order;  // empty: ascending element order
  SolverMode solver = SolverMode::kKnapsack;
  bool unify = true;
  // Called with (0, D_0) before the first iteration, then (i, D_i).
  std::function<void(int, const PairDistribution&)> observer;
};

struct Result {
  ElementSet best;
  double value = 0.0;
  RunStats stats;
};

inline Result run(ValueOracle& oracle, const Options& opts = {}) {
  const int n = oracle.ground_size();
  std::vector<int> order = opts.order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  } else {
    if (static_cast<int>(order.size()) != n) {
      throw InvalidInputError("element order must be a permutation of 0..n-1");
    }
    std::vector<bool> seen(n, false);
    for (int u : order) {
      require_element_in_range(u, n);
      if (seen[u]) {
        throw InvalidInputError("element order repeats element " +
                                std::to_string(u));
      }
      seen[u] = true;
    }
  }

  CachedEvaluator cache(oracle);
  const std::uint64_t queries_before = oracle.query_count();

  PairDistribution dist =
      PairDistribution::singleton(PairState{ElementSet{}, ElementSet::full(n)});
  cache.value(ElementSet{});
  cache.value(ElementSet::full(n));

  Result result;
  result.stats.max_support = 1;
  if (opts.observer) opts.observer(0, dist);

  for (int i = 1; i <= n; ++i) {
    std::uint64_t before = oracle.query_count();
    dist = step(dist, order[i - 1], cache, opts.solver, opts.unify);
    dist.check_valid();

    IterationRecord rec;
    rec.index = i;
    rec.support = dist.support_size();
    rec.fresh_queries = oracle.query_count() - before;
    rec.expected_value = dist.expectation([&](const PairState& s) {
      return cache.value(s.lower) + cache.value(s.upper);
    });
    result.stats.iterations.push_back(rec);
    if (rec.support > result.stats.max_support) {
      result.stats.max_support = rec.support;
    }
    if (opts.observer) opts.observer(i, dist);
  }

  bool first = true;
  for (const auto& t : dist.tuples()) {
    double v = cache.value(t.state.lower);
    if (first || v > result.value ||
        (v == result.value && t.state.lower < result.best)) {
      result.best = t.state.lower;
      result.value = v;
      first = false;
    }
  }
  result.stats.query_count = oracle.query_count() - queries_before;
  return result;
}

}  // namespace submax::usm
