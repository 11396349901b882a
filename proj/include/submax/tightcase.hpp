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

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "submax/card.hpp"
#include "submax/distribution.hpp"
#include "submax/element_set.hpp"
#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/run_stats.hpp"

// Worst-case instance family for the cardinality algorithm. The ground
// set splits into two halves O and Y of size k; the objective rewards O
// with value 1 but offers Y-elements marginals that are just barely
// better, so a legal (adversarially tie-broken) sequence of extreme-point
// choices keeps all probability mass on subsets of Y and finishes at
// value 1/e + ell/k while the optimum f(O) = 1. This module builds the
// instance, the cyclic-interval distributions the bad run walks through,
// and a replay that verifies each scripted step really is feasible for
// the round program before applying it.
namespace submax::tightcase {

// Concave gain curve for the Y side: -(1-x) ln(1-x), clamped to its
// maximum 1/e from x = 1 - 1/e on. Non-decreasing, concave, g(0) = 0.
inline double concave_gain(double x) {
  if (x < 0.0 || x > 1.0) {
    throw InvalidInputError("concave_gain domain is [0, 1]");
  }
  const double knee = 1.0 - std::exp(-1.0);
  if (x >= knee) return std::exp(-1.0);
  return (x - 1.0) * std::log1p(-x);
}

struct TightInstance {
  int k = 0;
  double ell = 17.0;  // needs ell >= 6e for the adversarial replay

  int ground_size() const { return 2 * k; }

  // Elements 0..k-1 form O (the planted optimum), k..2k-1 form Y.
  bool in_planted_opt(int u) const { return u < k; }
  // t-th element of Y with cyclic wraparound.
  int y_element(int t) const { return k + ((t % k) + k) % k; }

  ElementSet planted_opt() const {
    ElementSet s;
    for (int u = 0; u < k; ++u) s.add(u);
    return s;
  }

  double value(const ElementSet& s) const {
    int count_o = 0, count_y = 0;
    s.for_each([&](int u) { (u < k ? count_o : count_y) += 1; });
    double x = static_cast<double>(count_o) / k;
    double y = static_cast<double>(count_y) / k;
    return x * (1.0 - y) +
           (concave_gain(y) + ell * y / k) * (1.0 - x);
  }

  // Closed-form marginals, with x = |S n O|/k and y = |S n Y|/k taken
  // before the element is added. These must agree with direct value
  // differences for every set (checked exhaustively in tests).
  double marginal_to_y(double y, double x) const {
    return -x / k +
           (1.0 - x) *
               (concave_gain(y + 1.0 / k) - concave_gain(y) + ell / (k * k));
  }
  double marginal_to_o(double y, double x) const {
    return (1.0 / k) * ((1.0 - y) - (concave_gain(y) + ell * y / k));
  }

  ValueOracle make_oracle() const {
    TightInstance copy = *this;
    return ValueOracle(ground_size(),
                       [copy](const ElementSet& s) { return copy.value(s); });
  }
};

// The distribution D(z): cyclic runs of Y-indices of length floor(kz)+1
// with probability z - floor(kz)/k each, and of length floor(kz) with
// probability (floor(kz)+1)/k - z each, unified. Every element of Y is
// covered with probability exactly z, every element of O never.
inline card::SetDistribution cyclic_distribution(double z,
                                                 const TightInstance& inst) {
  if (z < 0.0 || z > 1.0) {
    throw InvalidInputError("cyclic_distribution needs z in [0, 1]");
  }
  const int k = inst.k;
  const int runs = static_cast<int>(std::floor(k * z));
  const double p_long = z - static_cast<double>(runs) / k;
  const double p_short = static_cast<double>(runs + 1) / k - z;

  card::SetDistribution dist;
  for (int start = 0; start < k; ++start) {
    ElementSet longer, shorter;
    for (int t = 0; t <= runs; ++t) {
      longer.add(inst.y_element(start + t));
      if (t < runs) shorter.add(inst.y_element(start + t));
    }
    dist.add(p_long, longer);
    dist.add(p_short, shorter);
  }
  return dist.unified();
}

struct TraceRow {
  int iteration = 0;
  double z = 0.0;
  int support = 0;
  double expected_value = 0.0;
  double best_value = 0.0;
  double max_tuple_error = 0.0;
};

struct AdversarialResult {
  card::SetDistribution final_dist;
  double best_value = 0.0;
  std::vector<TraceRow> trace;
  RunStats stats;
};

namespace detail {

// Largest |p difference| between two unified distributions, treating a
// state missing on one side as probability zero there.
inline double max_tuple_difference(const card::SetDistribution& a,
                                   const card::SetDistribution& b) {
  double worst = 0.0;
  std::size_t ia = 0, ib = 0;
  const auto& ta = a.tuples();
  const auto& tb = b.tuples();
  while (ia < ta.size() || ib < tb.size()) {
    if (ib == tb.size() || (ia < ta.size() && ta[ia].state < tb[ib].state)) {
      worst = std::max(worst, ta[ia].p);
      ++ia;
    } else if (ia == ta.size() || tb[ib].state < ta[ia].state) {
      worst = std::max(worst, tb[ib].p);
      ++ib;
    } else {
      worst = std::max(worst, std::fabs(ta[ia].p - tb[ib].p));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

}  // namespace detail

// Replays the cardinality algorithm against the tight instance, forcing
// at every iteration the specific basic optimal solution from the bad
// trajectory: move mass from each short cyclic run to the run extended by
// its next Y-element (plus, when the grid cell advances, the fractional
// spill from the long runs). Each scripted step is verified to be a
// legal program solution (candidate set is exactly Y; per-element budget
// matches (1/k)(1 - z) exactly) and the resulting distribution must match
// D(z_i) tuple for tuple; any deviation raises AdversarialTraceError.
inline AdversarialResult adversarial_run(int k, double ell = 17.0) {
  const double six_e = 6.0 * std::exp(1.0);
  if (ell < six_e) {
    throw InvalidInputError("adversarial_run needs ell >= 6e");
  }
  if (k < ell) {
    throw InvalidInputError("adversarial_run needs k >= ell");
  }
  TightInstance inst{k, ell};
  ValueOracle oracle = inst.make_oracle();
  CachedEvaluator cache(oracle);
  const std::uint64_t queries_before = oracle.query_count();
  const int n = inst.ground_size();

  auto z_at = [&](int i) {
    return 1.0 - std::pow(1.0 - 1.0 / k, i);
  };

  card::SetDistribution dist = cyclic_distribution(0.0, inst);
  AdversarialResult result;
  result.stats.max_support = dist.support_size();

  auto record = [&](int i, double z, double tuple_err) {
    TraceRow row;
    row.iteration = i;
    row.z = z;
    row.support = dist.support_size();
    row.expected_value =
        dist.expectation([&](const ElementSet& s) { return cache.value(s); });
    double best = 0.0;
    bool first = true;
    for (const auto& t : dist.tuples()) {
      double v = cache.value(t.state);
      if (first || v > best) best = v, first = false;
    }
    row.best_value = best;
    row.max_tuple_error = tuple_err;
    result.trace.push_back(row);
    result.stats.max_support = std::max(result.stats.max_support, row.support);
  };
  record(0, 0.0, 0.0);

  for (int i = 1; i <= k; ++i) {
    const double z_prev = z_at(i - 1);
    const double z_next = z_at(i);
    const int cell_prev = static_cast<int>(std::floor(k * z_prev));
    const int cell_next = static_cast<int>(std::floor(k * z_next));

    std::uint64_t before = oracle.query_count();

    // The algorithm's candidate selection must pick exactly Y.
    card::MarginalTable table = card::compute_marginals(dist, cache);
    card::CandidateSet cs = card::select_candidates(table, k);
    if (static_cast<int>(cs.elements.size()) != k) {
      throw AdversarialTraceError("iteration " + std::to_string(i) +
                                  ": candidate set size " +
                                  std::to_string(cs.elements.size()));
    }
    for (int u : cs.elements) {
      if (inst.in_planted_opt(u)) {
        throw AdversarialTraceError(
            "iteration " + std::to_string(i) +
            ": candidate set contains a planted-optimum element");
      }
    }
    double min_y_marginal = 0.0, max_o_marginal = 0.0;
    for (int u = 0; u < n; ++u) {
      double e = table.expected[u];
      if (inst.in_planted_opt(u)) {
        max_o_marginal = u == 0 ? e : std::max(max_o_marginal, e);
      } else {
        min_y_marginal = u == k ? e : std::min(min_y_marginal, e);
      }
    }
    if (min_y_marginal < max_o_marginal - kValueTolerance) {
      throw AdversarialTraceError(
          "iteration " + std::to_string(i) +
          ": Y-side marginals fell below the planted optimum side");
    }

    // Scripted mass transfers of this iteration.
    struct Transfer {
      ElementSet from;
      int element;
      double mass;
    };
    std::vector<Transfer> transfers;
    const double p_short = static_cast<double>(cell_prev + 1) / k - z_prev;
    if (cell_next == cell_prev) {
      for (int j = 0; j < k; ++j) {
        ElementSet run;
        for (int t = 0; t < cell_prev; ++t) run.add(inst.y_element(j + t));
        transfers.push_back(
            {run, inst.y_element(j + cell_prev), z_next - z_prev});
      }
    } else if (cell_next == cell_prev + 1) {
      const double spill =
          (k * z_prev - z_prev - static_cast<double>(cell_prev)) / k;
      for (int j = 0; j < k; ++j) {
        ElementSet run, longer;
        for (int t = 0; t < cell_prev; ++t) run.add(inst.y_element(j + t));
        longer = run;
        longer.add(inst.y_element(j + cell_prev));
        transfers.push_back({run, inst.y_element(j + cell_prev), p_short});
        if (spill > kProbabilityFloor) {
          transfers.push_back(
              {longer, inst.y_element(j + cell_prev + 1), spill});
        }
      }
    } else {
      throw AdversarialTraceError("iteration " + std::to_string(i) +
                                  ": z advanced by more than one grid cell");
    }

    // Feasibility of the implied program solution: per-source mass never
    // exceeds the state's probability, and each element receives exactly
    // (1/k)(1 - z_prev) in expectation, the binding budget of the round.
    std::map<ElementSet, double> mass;
    for (const auto& t : dist.tuples()) mass[t.state] = t.p;
    std::map<ElementSet, double> outgoing;
    std::vector<double> per_element(n, 0.0);
    for (const auto& tr : transfers) {
      if (tr.mass <= kProbabilityFloor) continue;
      auto it = mass.find(tr.from);
      if (it == mass.end()) {
        throw AdversarialTraceError(
            "iteration " + std::to_string(i) +
            ": scripted transfer from a state outside the support");
      }
      outgoing[tr.from] += tr.mass;
      per_element[tr.element] += tr.mass;
    }
    for (const auto& [state, total] : outgoing) {
      if (total > mass[state] + 1e-7) {
        throw AdversarialTraceError("iteration " + std::to_string(i) +
                                    ": transfers exceed a state's probability");
      }
    }
    const double budget = (1.0 - z_prev) / k;
    for (int u = k; u < n; ++u) {
      if (std::fabs(per_element[u] - budget) > 1e-7) {
        throw AdversarialTraceError(
            "iteration " + std::to_string(i) +
            ": element budget deviates from (1/k)(1 - z)");
      }
    }

    for (const auto& tr : transfers) {
      if (tr.mass <= kProbabilityFloor) continue;
      mass[tr.from] -= tr.mass;
      mass[tr.from.with(tr.element)] += tr.mass;
    }
    card::SetDistribution next;
    for (const auto& [state, p] : mass) next.add(p, state);
    dist = next.unified();
    dist.check_valid();

    double tuple_err =
        detail::max_tuple_difference(dist, cyclic_distribution(z_next, inst));
    if (tuple_err > 1e-7) {
      throw AdversarialTraceError(
          "iteration " + std::to_string(i) +
          ": distribution drifted from D(z) by " + std::to_string(tuple_err));
    }

    IterationRecord rec;
    rec.index = i;
    rec.support = dist.support_size();
    rec.fresh_queries = oracle.query_count() - before;
    rec.expected_value =
        dist.expectation([&](const ElementSet& s) { return cache.value(s); });
    result.stats.iterations.push_back(rec);
    record(i, z_next, tuple_err);
  }

  result.stats.query_count = oracle.query_count() - queries_before;
  result.final_dist = dist;
  result.best_value = result.trace.back().best_value;
  return result;
}

}  // namespace submax::tightcase
