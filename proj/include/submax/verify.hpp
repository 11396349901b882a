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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "submax/baselines.hpp"
#include "submax/card.hpp"
#include "submax/extreme_point.hpp"
#include "submax/generators.hpp"
#include "submax/instance_io.hpp"
#include "submax/oracle.hpp"
#include "submax/tightcase.hpp"
#include "submax/usm.hpp"

// Property suites that back both the `verify` CLI command and the
// acceptance runner. Each suite draws seeded instances, replays the
// guarantees the algorithms must satisfy, and stops at the first
// violation with a serialized counterexample.
namespace submax::verify {

// ---------------------------------------------------------------------------
// Solver suite: specialized and simplex solvers against vertex enumeration
// ---------------------------------------------------------------------------

struct LpSuiteOptions {
  int knapsack_instances = 1000;
  int lp_instances = 1000;
  std::uint64_t seed = 0x5eed0001;
  // Injection points so a broken solver can be shown to trip the suite.
  std::function<KnapsackSolution(const std::vector<SignedKnapsackItem>&,
                                 double)>
      knapsack_solver = [](const auto& items, double b) {
        return solve_signed_knapsack(items, b);
      };
  std::function<BasicSolution(const DenseLP&)> lp_solver =
      [](const DenseLP& lp) { return solve_basic_optimal(lp); };
};

struct LpSuiteResult {
  bool knapsack_optimal = true;
  bool knapsack_single_fractional = true;
  bool knapsack_feasible = true;
  bool knapsack_deterministic = true;
  bool knapsack_scaling = true;
  bool simplex_optimal = true;
  bool nonzero_bound = true;
  std::string failure;

  bool ok() const {
    return knapsack_optimal && knapsack_single_fractional &&
           knapsack_feasible && knapsack_deterministic && knapsack_scaling &&
           simplex_optimal && nonzero_bound;
  }
};

namespace detail {

inline std::vector<SignedKnapsackItem> random_knapsack_items(Prng& prng,
                                                             int max_items) {
  int m = 1 + static_cast<int>(prng.next_below(max_items));
  std::vector<SignedKnapsackItem> items(m);
  for (int j = 0; j < m; ++j) {
    items[j].value = prng.next_double() < 0.1 ? 0.0 : prng.next_in(-2.0, 2.0);
    items[j].size = prng.next_double() < 0.1 ? 0.0 : prng.next_in(-2.0, 2.0);
    items[j].id = j;
  }
  return items;
}

inline double random_feasible_budget(const std::vector<SignedKnapsackItem>& items,
                                     Prng& prng) {
  double lo = 0.0, hi = 0.0;
  for (const auto& it : items) {
    lo += std::min(it.size, 0.0);
    hi += std::max(it.size, 0.0);
  }
  if (prng.next_double() < 0.1) return lo;  // only just feasible
  return lo + prng.next_double() * (hi - lo + 1.0);
}

// Feasible and bounded by construction: a random non-negative point is
// chosen first, every variable gets a box row, and all other rows are
// given enough right-hand side to admit the point. At most 6 variables
// and 6 rows.
inline DenseLP random_small_lp(Prng& prng) {
  int nv = 1 + static_cast<int>(prng.next_below(4));
  std::vector<double> point(nv);
  for (double& v : point) {
    v = prng.next_double() < 0.3 ? 0.0 : prng.next_in(0.0, 2.0);
  }

  DenseLP lp;
  lp.num_vars = nv;
  lp.objective.resize(nv);
  bool zero_objective = prng.next_double() < 0.15;
  for (double& c : lp.objective) {
    c = zero_objective ? 0.0 : prng.next_in(-2.0, 2.0);
  }

  for (int j = 0; j < nv; ++j) {
    std::vector<double> row(nv, 0.0);
    row[j] = 1.0;
    lp.add_inequality(std::move(row), point[j] + prng.next_in(0.0, 2.0));
  }

  int budget = 6 - nv;
  int extra_ineq = static_cast<int>(prng.next_below(std::min(budget, 2) + 1));
  budget -= extra_ineq;
  int extra_eq = static_cast<int>(prng.next_below(std::min(budget, 1) + 1));

  for (int r = 0; r < extra_ineq; ++r) {
    std::vector<double> row(nv);
    double lhs = 0.0;
    for (int j = 0; j < nv; ++j) {
      row[j] = prng.next_in(-1.0, 1.0);
      lhs += row[j] * point[j];
    }
    double rhs = lhs + prng.next_in(0.0, 1.0);
    lp.add_inequality(std::move(row), rhs);
    if (prng.next_double() < 0.2 && static_cast<int>(lp.ineq_coeffs.size()) +
                                            extra_eq <
                                        6) {
      lp.add_inequality(lp.ineq_coeffs.back(), lp.ineq_rhs.back());
      break;  // duplicated degenerate row used up the remaining budget
    }
  }
  for (int r = 0; r < extra_eq; ++r) {
    std::vector<double> row(nv);
    double lhs = 0.0;
    for (int j = 0; j < nv; ++j) {
      row[j] = prng.next_in(-1.0, 1.0);
      lhs += row[j] * point[j];
    }
    lp.add_equality(std::move(row), lhs);
  }
  return lp;
}

inline int count_fractional(const std::vector<double>& z, double tol) {
  int c = 0;
  for (double v : z) {
    if (v > tol && v < 1.0 - tol) ++c;
  }
  return c;
}

inline bool has_density_tie(const std::vector<SignedKnapsackItem>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i].value * items[j].size == items[j].value * items[i].size) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

inline LpSuiteResult run_lp_suite(const LpSuiteOptions& opts = {}) {
  LpSuiteResult result;
  Prng prng(opts.seed);

  for (int trial = 0; trial < opts.knapsack_instances && result.ok(); ++trial) {
    auto items = detail::random_knapsack_items(prng, 8);
    double budget = detail::random_feasible_budget(items, prng);
    auto tag = [&] {
      return "knapsack trial " + std::to_string(trial);
    };

    KnapsackSolution sol;
    try {
      sol = opts.knapsack_solver(items, budget);
    } catch (const std::exception& e) {
      result.knapsack_feasible = false;
      result.failure = tag() + ": solver raised: " + e.what();
      break;
    }

    double used = 0.0;
    for (std::size_t j = 0; j < items.size(); ++j) {
      used += items[j].size * sol.z[j];
      if (sol.z[j] < -kLpTolerance || sol.z[j] > 1.0 + kLpTolerance) {
        result.knapsack_feasible = false;
        result.failure = tag() + ": z outside [0, 1]";
      }
    }
    if (used > budget + kLpTolerance) {
      result.knapsack_feasible = false;
      result.failure = tag() + ": budget exceeded";
    }
    if (detail::count_fractional(sol.z, kLpTolerance) > 1) {
      result.knapsack_single_fractional = false;
      result.failure = tag() + ": more than one fractional item";
    }

    BasicSolution ref = enumerate_vertices(knapsack_to_lp(items, budget));
    if (std::fabs(sol.objective - ref.objective) > kLpTolerance) {
      result.knapsack_optimal = false;
      result.failure = tag() + ": objective " +
                       std::to_string(sol.objective) + " vs enumerated " +
                       std::to_string(ref.objective);
    }

    KnapsackSolution again = opts.knapsack_solver(items, budget);
    if (again.z != sol.z || again.objective != sol.objective) {
      result.knapsack_deterministic = false;
      result.failure = tag() + ": outputs differ between identical calls";
    }

    if (!detail::has_density_tie(items)) {
      auto scaled = items;
      const double factor = 2.5;
      for (auto& it : scaled) it.value *= factor;
      KnapsackSolution s2 = opts.knapsack_solver(scaled, budget);
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (std::fabs(s2.z[j] - sol.z[j]) > 1e-9) {
          result.knapsack_scaling = false;
          result.failure = tag() + ": z changed under objective scaling";
        }
      }
      if (std::fabs(s2.objective - factor * sol.objective) >
          kLpTolerance * (1.0 + std::fabs(sol.objective))) {
        result.knapsack_scaling = false;
        result.failure = tag() + ": objective did not scale linearly";
      }
    }
  }

  for (int trial = 0; trial < opts.lp_instances && result.ok(); ++trial) {
    DenseLP lp = detail::random_small_lp(prng);
    auto tag = [&] { return "lp trial " + std::to_string(trial); };

    BasicSolution sol;
    try {
      sol = opts.lp_solver(lp);
    } catch (const std::exception& e) {
      result.simplex_optimal = false;
      result.failure = tag() + ": solver raised: " + e.what();
      break;
    }
    BasicSolution ref = enumerate_vertices(lp);
    if (std::fabs(sol.objective - ref.objective) > kLpTolerance) {
      result.simplex_optimal = false;
      result.failure = tag() + ": objective " + std::to_string(sol.objective) +
                       " vs enumerated " + std::to_string(ref.objective);
    }
    if (sol.nonzero_count > lp.num_rows() ||
        ref.nonzero_count > lp.num_rows()) {
      result.nonzero_bound = false;
      result.failure = tag() + ": basic solution has too many nonzeros";
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Unconstrained-algorithm suite
// ---------------------------------------------------------------------------

struct UsmSuiteOptions {
  int instances = 200;
  int n_min = 2;
  int n_max = 10;
  std::uint64_t seed = 0x5eed0002;
};

struct UsmSuiteResult {
  bool ratio_ok = true;        // f(out) >= OPT/2 - 1e-9, both solver routes
  bool support_ok = true;      // |D_i| <= i+1 (knapsack) / 2i+1 (generic)
  bool lemma_ok = true;        // per-iteration potential inequality
  bool invariants_ok = true;   // nested states, prefix agreement, X=Y at end
  bool queries_ok = true;      // <= 4i-2 per iteration, <= 2n^2+2n total
  std::string failure;
  std::string counterexample;

  bool ok() const {
    return ratio_ok && support_ok && lemma_ok && invariants_ok && queries_ok;
  }
};

inline UsmSuiteResult run_usm_suite(const UsmSuiteOptions& opts = {}) {
  UsmSuiteResult result;
  Prng prng(opts.seed);

  for (int trial = 0; trial < opts.instances && result.ok(); ++trial) {
    int n = opts.n_min +
            static_cast<int>(prng.next_below(opts.n_max - opts.n_min + 1));
    io::Instance inst =
        io::Instance::from_table(gen::random_submodular_table(n, prng));
    auto fail = [&](bool UsmSuiteResult::* flag, const std::string& why) {
      result.*flag = false;
      result.failure = "usm trial " + std::to_string(trial) + ": " + why;
      result.counterexample = inst.to_json().dump();
    };

    ValueOracle shadow = inst.make_oracle();
    CachedEvaluator shadow_cache(shadow);
    auto [opt_set, opt_value] = brute_force_opt(shadow);

    for (usm::SolverMode mode :
         {usm::SolverMode::kKnapsack, usm::SolverMode::kGeneric}) {
      ValueOracle oracle = inst.make_oracle();
      usm::Options run_opts;
      run_opts.solver = mode;

      usm::PairDistribution prev;
      bool lemma_violated = false;
      bool invariant_violated = false;
      run_opts.observer = [&](int i, const usm::PairDistribution& dist) {
        auto coerced = [&](const usm::PairState& s) {
          return shadow_cache.value((opt_set | s.lower) & s.upper);
        };
        auto potential = [&](const usm::PairState& s) {
          return shadow_cache.value(s.lower) + shadow_cache.value(s.upper);
        };
        if (i > 0) {
          double gain = dist.expectation(potential) -
                        prev.expectation(potential);
          double payment = 2.0 * (prev.expectation(coerced) -
                                  dist.expectation(coerced));
          if (gain < payment - 1e-7) lemma_violated = true;
        }
        for (const auto& t : dist.tuples()) {
          if (!t.state.lower.is_subset_of(t.state.upper)) {
            invariant_violated = true;
          }
          for (int u = 0; u < n; ++u) {
            bool processed = u < i;  // default ascending order
            if (!processed && (t.state.lower.contains(u) ||
                               !t.state.upper.contains(u))) {
              invariant_violated = true;
            }
            if (processed &&
                t.state.lower.contains(u) != t.state.upper.contains(u)) {
              invariant_violated = true;
            }
          }
          if (i == n && !(t.state.lower == t.state.upper)) {
            invariant_violated = true;
          }
        }
        prev = dist;
      };

      usm::Result run = usm::run(oracle, run_opts);
      bool knap = mode == usm::SolverMode::kKnapsack;

      if (lemma_violated) fail(&UsmSuiteResult::lemma_ok, "potential lemma");
      if (invariant_violated) {
        fail(&UsmSuiteResult::invariants_ok, "pair-state invariants");
      }
      if (run.value < 0.5 * opt_value - kValueTolerance) {
        fail(&UsmSuiteResult::ratio_ok,
             (knap ? std::string("knapsack") : std::string("generic")) +
                 " route value " + std::to_string(run.value) + " vs OPT " +
                 std::to_string(opt_value));
      }
      std::uint64_t total = 0;
      for (const auto& it : run.stats.iterations) {
        int bound = knap ? it.index + 1 : 2 * it.index + 1;
        if (it.support > bound) {
          fail(&UsmSuiteResult::support_ok,
               "support " + std::to_string(it.support) + " at iteration " +
                   std::to_string(it.index));
        }
        if (it.fresh_queries > static_cast<std::uint64_t>(4 * it.index - 2)) {
          fail(&UsmSuiteResult::queries_ok,
               "iteration " + std::to_string(it.index) + " issued " +
                   std::to_string(it.fresh_queries) + " queries");
        }
        total += it.fresh_queries;
      }
      if (run.stats.query_count >
          static_cast<std::uint64_t>(2 * n * n + 2 * n)) {
        fail(&UsmSuiteResult::queries_ok, "total query bound");
      }
      if (!result.ok()) break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cardinality-algorithm suite
// ---------------------------------------------------------------------------

struct CardSuiteOptions {
  int instances = 200;
  int n_min = 4;
  int n_max = 10;
  std::vector<int> ks = {1, 2, 3, 4};
  std::uint64_t seed = 0x5eed0003;
};

struct CardSuiteResult {
  bool ratio_ok = true;          // f(out) >= (1-1/k)^(k-1) OPT - 1e-9
  bool decay_ok = true;          // Pr[u not in S] >= (1-1/k)^i - 1e-7
  bool improve_ok = true;        // per-iteration improvement inequality
  bool running_bound_ok = true;  // E[f] >= (i/k)(1-1/k)^(i-1) OPT - 1e-7
  bool support_ok = true;        // |D_i| <= ik+1, |D_k| <= k^2+1
  bool queries_ok = true;        // <= n|D_{i-1}| fresh per iteration, 4k^2n total
  std::string failure;
  std::string counterexample;

  bool ok() const {
    return ratio_ok && decay_ok && improve_ok && running_bound_ok &&
           support_ok && queries_ok;
  }
};

inline CardSuiteResult run_card_suite(const CardSuiteOptions& opts = {}) {
  CardSuiteResult result;
  Prng prng(opts.seed);

  for (int trial = 0; trial < opts.instances && result.ok(); ++trial) {
    int n = opts.n_min +
            static_cast<int>(prng.next_below(opts.n_max - opts.n_min + 1));
    int k = opts.ks[trial % opts.ks.size()];
    io::Instance inst =
        io::Instance::from_table(gen::random_submodular_table(n, prng));
    auto fail = [&](bool CardSuiteResult::* flag, const std::string& why) {
      result.*flag = false;
      result.failure = "card trial " + std::to_string(trial) + " (k=" +
                       std::to_string(k) + "): " + why;
      result.counterexample = inst.to_json().dump();
    };

    ValueOracle shadow = inst.make_oracle();
    CachedEvaluator shadow_cache(shadow);
    auto [opt_set, opt_value] = brute_force_opt(shadow, k);

    ValueOracle oracle = inst.make_oracle();
    card::Options run_opts;
    card::SetDistribution prev;
    bool decay_violated = false, improve_violated = false,
         running_violated = false;
    run_opts.observer = [&](int i, const card::SetDistribution& dist) {
      auto value_of = [&](const ElementSet& s) { return shadow_cache.value(s); };
      if (i > 0) {
        double cur = dist.expectation(value_of);
        double before = prev.expectation(value_of);
        double opt_gap = prev.expectation([&](const ElementSet& s) {
          return shadow_cache.value(opt_set | s) - shadow_cache.value(s);
        });
        if (cur - before < opt_gap / k - 1e-7) improve_violated = true;
        if (cur < (static_cast<double>(i) / k) *
                          std::pow(1.0 - 1.0 / k, i - 1) * opt_value -
                      1e-7) {
          running_violated = true;
        }
      }
      double decay = std::pow(1.0 - 1.0 / k, i);
      for (int u = 0; u < n; ++u) {
        if (prob_not_containing(dist, u) < decay - 1e-7) decay_violated = true;
      }
      prev = dist;
    };

    card::Result run = card::run(oracle, k, run_opts);

    if (decay_violated) fail(&CardSuiteResult::decay_ok, "probability decay");
    if (improve_violated) {
      fail(&CardSuiteResult::improve_ok, "improvement lemma");
    }
    if (running_violated) {
      fail(&CardSuiteResult::running_bound_ok, "running lower bound");
    }
    double guarantee = std::pow(1.0 - 1.0 / k, k - 1);
    if (run.value < guarantee * opt_value - kValueTolerance) {
      fail(&CardSuiteResult::ratio_ok,
           "value " + std::to_string(run.value) + " vs OPT " +
               std::to_string(opt_value));
    }
    int prev_support = 1;
    for (const auto& it : run.stats.iterations) {
      if (it.support > it.index * k + 1) {
        fail(&CardSuiteResult::support_ok,
             "support " + std::to_string(it.support) + " at iteration " +
                 std::to_string(it.index));
      }
      if (it.fresh_queries > static_cast<std::uint64_t>(n) * prev_support) {
        fail(&CardSuiteResult::queries_ok,
             "iteration " + std::to_string(it.index) + " issued " +
                 std::to_string(it.fresh_queries) + " queries");
      }
      prev_support = it.support;
    }
    if (run.stats.max_support > k * k + 1) {
      fail(&CardSuiteResult::support_ok, "final support bound");
    }
    if (k > 0 && run.stats.query_count >
                     static_cast<std::uint64_t>(4) * k * k * n) {
      fail(&CardSuiteResult::queries_ok, "total query bound");
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Decrease-lemma suite
// ---------------------------------------------------------------------------

struct DecreaseSuiteOptions {
  int pairs = 500;
  int n_min = 2;
  int n_max = 8;
  std::uint64_t seed = 0x5eed0004;
};

struct DecreaseSuiteResult {
  bool ok = true;
  std::string failure;
  std::string counterexample;
};

inline DecreaseSuiteResult run_decrease_suite(
    const DecreaseSuiteOptions& opts = {}) {
  DecreaseSuiteResult result;
  Prng prng(opts.seed);
  for (int trial = 0; trial < opts.pairs && result.ok; ++trial) {
    int n = opts.n_min +
            static_cast<int>(prng.next_below(opts.n_max - opts.n_min + 1));
    io::Instance inst =
        io::Instance::from_table(gen::random_submodular_table(n, prng));
    ValueOracle oracle = inst.make_oracle();
    auto dist = gen::random_set_distribution(n, 6, prng);
    ElementSet subset = gen::random_subset(n, prng);
    if (!card::check_decrease_lemma(dist, subset, oracle, kValueTolerance)) {
      result.ok = false;
      result.failure = "decrease lemma failed on trial " + std::to_string(trial);
      result.counterexample = inst.to_json().dump();
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tight-instance suite
// ---------------------------------------------------------------------------

struct TightSuiteOptions {
  std::vector<int> ks = {32, 64, 128};
  double ell = 17.0;
};

struct TightSuiteResult {
  bool trajectory_ok = true;  // D_i matches D(z_i) tuple for tuple
  bool bound_ok = true;       // final value <= 1/e + ell/k
  bool opt_ok = true;         // f(O) = 1
  double elapsed_seconds = 0.0;
  std::string failure;

  bool ok() const { return trajectory_ok && bound_ok && opt_ok; }
};

inline TightSuiteResult run_tight_suite(const TightSuiteOptions& opts = {}) {
  TightSuiteResult result;
  auto start = std::chrono::steady_clock::now();
  for (int k : opts.ks) {
    try {
      tightcase::AdversarialResult run = tightcase::adversarial_run(k, opts.ell);
      if (run.best_value > std::exp(-1.0) + opts.ell / k + kValueTolerance) {
        result.bound_ok = false;
        result.failure = "k=" + std::to_string(k) + ": final value " +
                         std::to_string(run.best_value) + " above 1/e + ell/k";
      }
    } catch (const std::exception& e) {
      result.trajectory_ok = false;
      result.failure = "k=" + std::to_string(k) + ": " + e.what();
    }
    tightcase::TightInstance inst{k, opts.ell};
    if (std::fabs(inst.value(inst.planted_opt()) - 1.0) > 1e-12) {
      result.opt_ok = false;
      result.failure = "k=" + std::to_string(k) + ": f(O) != 1";
    }
    if (!result.ok()) break;
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

// ---------------------------------------------------------------------------
// Randomized-baseline suite (statistical)
// ---------------------------------------------------------------------------

struct BaselineSuiteOptions {
  int seeds = 2000;
  int n = 8;
  int k = 3;
  std::uint64_t instance_seed = 0x5eed0005;
};

struct BaselineSuiteResult {
  bool double_greedy_ok = true;  // mean >= OPT/2 - 3 stderr
  bool random_greedy_ok = true;  // mean >= (1-1/k)^(k-1) OPT - 3 stderr
  bool deterministic_at_least_mean = true;
  bool determinism_ok = true;
  bool queries_ok = true;
  double double_greedy_mean = 0.0;
  double random_greedy_mean = 0.0;
  std::string failure;

  bool ok() const {
    return double_greedy_ok && random_greedy_ok &&
           deterministic_at_least_mean && determinism_ok && queries_ok;
  }
};

inline BaselineSuiteResult run_baseline_suite(
    const BaselineSuiteOptions& opts = {}) {
  BaselineSuiteResult result;
  Prng prng(opts.instance_seed);
  io::Instance inst =
      io::Instance::from_table(gen::random_submodular_table(opts.n, prng));
  const int n = opts.n;

  ValueOracle shadow = inst.make_oracle();
  auto [opt_set, opt_value] = brute_force_opt(shadow);
  ValueOracle shadow_k = inst.make_oracle();
  auto [opt_set_k, opt_value_k] = brute_force_opt(shadow_k, opts.k);

  auto mean_and_stderr = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= (xs.size() - 1);
    return std::pair<double, double>(mean, std::sqrt(var / xs.size()));
  };

  std::vector<double> dg_values, rg_values;
  dg_values.reserve(opts.seeds);
  rg_values.reserve(opts.seeds);
  for (int seed = 0; seed < opts.seeds; ++seed) {
    ValueOracle o1 = inst.make_oracle();
    auto [set1, val1] = baselines::randomized_double_greedy(o1, seed);
    dg_values.push_back(val1);
    if (o1.query_count() > static_cast<std::uint64_t>(2 * n + 2)) {
      result.queries_ok = false;
      result.failure = "double greedy exceeded 2n+2 queries";
    }
    ValueOracle o2 = inst.make_oracle();
    auto [set2, val2] = baselines::random_greedy_cardinality(o2, opts.k, seed);
    rg_values.push_back(val2);
    if (o2.query_count() > static_cast<std::uint64_t>(opts.k) * n + 1) {
      result.queries_ok = false;
      result.failure = "random greedy exceeded kn+1 queries";
    }
  }

  {
    ValueOracle o1 = inst.make_oracle();
    auto [set_a, val_a] = baselines::randomized_double_greedy(o1, 7);
    ValueOracle o2 = inst.make_oracle();
    auto [set_b, val_b] = baselines::randomized_double_greedy(o2, 7);
    ValueOracle o3 = inst.make_oracle();
    auto [set_c, val_c] =
        baselines::random_greedy_cardinality(o3, opts.k, 7);
    ValueOracle o4 = inst.make_oracle();
    auto [set_d, val_d] =
        baselines::random_greedy_cardinality(o4, opts.k, 7);
    if (!(set_a == set_b) || val_a != val_b || !(set_c == set_d) ||
        val_c != val_d) {
      result.determinism_ok = false;
      result.failure = "seeded baselines are not reproducible";
    }
  }

  auto [dg_mean, dg_err] = mean_and_stderr(dg_values);
  auto [rg_mean, rg_err] = mean_and_stderr(rg_values);
  result.double_greedy_mean = dg_mean;
  result.random_greedy_mean = rg_mean;

  if (dg_mean < 0.5 * opt_value - 3.0 * dg_err) {
    result.double_greedy_ok = false;
    result.failure = "double greedy mean " + std::to_string(dg_mean) +
                     " below OPT/2 - 3 stderr";
  }
  double guarantee = std::pow(1.0 - 1.0 / opts.k, opts.k - 1);
  if (rg_mean < guarantee * opt_value_k - 3.0 * rg_err) {
    result.random_greedy_ok = false;
    result.failure = "random greedy mean " + std::to_string(rg_mean) +
                     " below guarantee - 3 stderr";
  }

  ValueOracle det_oracle = inst.make_oracle();
  usm::Result det = usm::run(det_oracle);
  if (det.value < dg_mean - 3.0 * dg_err) {
    result.deterministic_at_least_mean = false;
    result.failure = "deterministic value below randomized mean - 3 stderr";
  }
  return result;
}

}  // namespace submax::verify
