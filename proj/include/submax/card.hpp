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

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "submax/distribution.hpp"
#include "submax/element_set.hpp"
#include "submax/errors.hpp"
#include "submax/extreme_point.hpp"
#include "submax/oracle.hpp"
#include "submax/run_stats.hpp"

// Deterministic maximization under a cardinality constraint |S| <= k with
// a guaranteed factor (1 - 1/k)^(k-1) >= 1/e. A derandomized random
// greedy: the distribution over candidate solutions is kept explicit, and
// each round reassigns probability mass to grown sets through an optimal
// extreme point of a small transportation-style linear program, keeping
// the support at most k^2 + 1.
namespace submax::card {

using SetDistribution = WeightedDistribution<ElementSet>;

// All one-element marginals against a support, plus their expectations.
// This is the only query-issuing part of an iteration: at most n fresh
// evaluations per support state (f(S) itself stays cached between rounds,
// and f(u|S) = 0 for u already in S needs no query).
struct MarginalTable {
  std::vector<std::vector<double>> per_state;  // [tuple][element]
  std::vector<double> expected;                // [element]
};

inline MarginalTable compute_marginals(const SetDistribution& dist,
                                       CachedEvaluator& cache) {
  const int n = cache.oracle().ground_size();
  MarginalTable table;
  table.per_state.resize(dist.tuples().size());
  table.expected.assign(n, 0.0);
  for (std::size_t t = 0; t < dist.tuples().size(); ++t) {
    const auto& tuple = dist.tuples()[t];
    double base = cache.value(tuple.state);
    table.per_state[t].assign(n, 0.0);
    for (int u = 0; u < n; ++u) {
      if (tuple.state.contains(u)) continue;
      double gain = cache.value(tuple.state.with(u)) - base;
      table.per_state[t][u] = gain;
      table.expected[u] += tuple.p * gain;
    }
  }
  return table;
}

// Up to k elements with the largest expected marginals; non-positive
// expectations are excluded, which is exactly the maximizing choice for a
// "at most k elements" budget. Ties broken by element index.
struct CandidateSet {
  std::vector<int> elements;            // marginal descending, index ascending
  std::vector<double> expected_marginals;
};

inline CandidateSet select_candidates(const MarginalTable& table, int k) {
  std::vector<int> order;
  for (int u = 0; u < static_cast<int>(table.expected.size()); ++u) {
    if (table.expected[u] > 0.0) order.push_back(u);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (table.expected[a] != table.expected[b])
      return table.expected[a] > table.expected[b];
    return a < b;
  });
  if (static_cast<int>(order.size()) > k) order.resize(k);
  CandidateSet cs;
  cs.elements = std::move(order);
  for (int u : cs.elements) cs.expected_marginals.push_back(table.expected[u]);
  return cs;
}

inline CandidateSet select_candidates(const SetDistribution& dist,
                                      CachedEvaluator& cache, int k) {
  return select_candidates(compute_marginals(dist, cache), k);
}

// The per-round program. Variables x(u, S) for candidate u and support
// state S plus a keep variable l(S) per state:
//   max  sum E[x(u, S) f(u|S)]
//        E[x(u, S)] <= (1/k) Pr[u not in S]   for each candidate u
//        sum_u x(u, S) + l(S) = 1             for each state S
//        x, l >= 0
// Column order: x variables state-major with candidates ascending, then
// the keep variables.
inline DenseLP build_lp(const SetDistribution& dist, const CandidateSet& cs,
                        int k, const MarginalTable& table) {
  std::vector<int> cands = cs.elements;
  std::sort(cands.begin(), cands.end());
  const int c = static_cast<int>(cands.size());
  const int m = dist.support_size();

  DenseLP lp;
  lp.num_vars = m * c + m;
  lp.objective.assign(lp.num_vars, 0.0);
  for (int t = 0; t < m; ++t) {
    double p = dist.tuples()[t].p;
    for (int j = 0; j < c; ++j) {
      lp.objective[t * c + j] = p * table.per_state[t][cands[j]];
    }
  }
  for (int j = 0; j < c; ++j) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (int t = 0; t < m; ++t) row[t * c + j] = dist.tuples()[t].p;
    lp.add_inequality(std::move(row),
                      prob_not_containing(dist, cands[j]) / k);
  }
  for (int t = 0; t < m; ++t) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (int j = 0; j < c; ++j) row[t * c + j] = 1.0;
    row[m * c + t] = 1.0;
    lp.add_equality(std::move(row), 1.0);
  }
  return lp;
}

// Objective value of the always-feasible uniform assignment
// x(u, S) = (1/k) [u not in S]; the solved program must do at least this
// well, which is what drives the approximation guarantee.
inline double fallback_objective(const SetDistribution& dist,
                                 const CandidateSet& cs, int k,
                                 const MarginalTable& table) {
  double total = 0.0;
  for (std::size_t t = 0; t < dist.tuples().size(); ++t) {
    for (int u : cs.elements) {
      if (!dist.tuples()[t].state.contains(u)) {
        total += dist.tuples()[t].p * table.per_state[t][u] / k;
      }
    }
  }
  return total;
}

// One round: solve the program at a basic optimal point and move mass
// x(u, S) p(S) to S + u, keeping l(S) p(S) in place. A basic solution has
// at most (#candidates + #states) nonzeros, so the support grows by at
// most k per round.
inline SetDistribution step(const SetDistribution& dist, CachedEvaluator& cache,
                            int k, bool unify = true) {
  MarginalTable table = compute_marginals(dist, cache);
  CandidateSet cs = select_candidates(table, k);
  if (cs.elements.empty()) return dist;

  std::vector<int> cands = cs.elements;
  std::sort(cands.begin(), cands.end());
  const int c = static_cast<int>(cands.size());
  const int m = dist.support_size();

  DenseLP lp = build_lp(dist, cs, k, table);
  BasicSolution sol = solve_basic_optimal(lp);

  double fallback = fallback_objective(dist, cs, k, table);
  if (sol.objective < fallback - 1e-7) {
    throw InternalError("round program solved below its feasible fallback");
  }

  SetDistribution next;
  for (int t = 0; t < m; ++t) {
    const auto& tuple = dist.tuples()[t];
    for (int j = 0; j < c; ++j) {
      double x = sol.x[t * c + j];
      if (x > kProbabilityFloor) {
        next.add(x * tuple.p, tuple.state.with(cands[j]));
      }
    }
    double keep = sol.x[m * c + t];
    if (keep > kProbabilityFloor) next.add(keep * tuple.p, tuple.state);
  }
  return unify ? next.unified() : next;
}

struct Options {
  bool unify = true;
  // Called with (0, D_0) before the first round, then (i, D_i).
  std::function<void(int, const SetDistribution&)> observer;
};

struct Result {
  ElementSet best;
  double value = 0.0;
  RunStats stats;
};

inline Result run(ValueOracle& oracle, int k, const Options& opts = {}) {
  const int n = oracle.ground_size();
  if (k < 0 || k > n) {
    throw InvalidInputError("cardinality bound must be in [0, n]");
  }

  CachedEvaluator cache(oracle);
  const std::uint64_t queries_before = oracle.query_count();

  SetDistribution dist = SetDistribution::singleton(ElementSet{});
  cache.value(ElementSet{});

  Result result;
  result.stats.max_support = 1;
  if (opts.observer) opts.observer(0, dist);

  for (int i = 1; i <= k; ++i) {
    std::uint64_t before = oracle.query_count();
    dist = step(dist, cache, k, opts.unify);
    dist.check_valid();

    IterationRecord rec;
    rec.index = i;
    rec.support = dist.support_size();
    rec.fresh_queries = oracle.query_count() - before;
    rec.expected_value =
        dist.expectation([&](const ElementSet& s) { return cache.value(s); });
    result.stats.iterations.push_back(rec);
    if (rec.support > result.stats.max_support) {
      result.stats.max_support = rec.support;
    }
    if (opts.observer) opts.observer(i, dist);
  }

  bool first = true;
  for (const auto& t : dist.tuples()) {
    double v = cache.value(t.state);
    if (first || v > result.value ||
        (v == result.value && t.state < result.best)) {
      result.best = t.state;
      result.value = v;
      first = false;
    }
  }
  result.stats.query_count = oracle.query_count() - queries_before;
  return result;
}

// E_{S~D}[f(T u S)] >= f(T) * min_u Pr_{S~D}[u not in S], for any explicit
// distribution over sets and any subset T of the ground set.
inline bool check_decrease_lemma(const SetDistribution& dist,
                                 const ElementSet& T, ValueOracle& oracle,
                                 double tol = kValueTolerance) {
  double expected = 0.0;
  for (const auto& t : dist.tuples()) {
    expected += t.p * oracle.eval(T | t.state);
  }
  double min_prob = 1.0;
  for (int u = 0; u < oracle.ground_size(); ++u) {
    min_prob = std::min(min_prob, prob_not_containing(dist, u));
  }
  return expected >= oracle.eval(T) * min_prob - tol;
}

}  // namespace submax::card
