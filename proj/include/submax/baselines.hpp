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
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/prng.hpp"

// Seeded randomized reference algorithms. These are the single-trajectory
// counterparts of the deterministic algorithms: same guarantees in
// expectation, a factor k (resp. n) fewer queries, and a coin stream in
// place of an explicit distribution. Used for benchmark comparisons and
// statistical cross-checks; identical (instance, seed) always reproduces
// the identical output.
namespace submax::baselines {

// Double greedy with biased coins: keep element u with probability
// max{0,a} / (max{0,a} + max{0,b}) (probability 1 when both gains are
// zero), where a and b are the add/drop gains of the deterministic
// algorithm. At most 2n + 2 queries.
inline std::pair<ElementSet, double> randomized_double_greedy(
    ValueOracle& oracle, std::uint64_t seed) {
  const int n = oracle.ground_size();
  Prng prng(seed);

  ElementSet lower;
  ElementSet upper = ElementSet::full(n);
  double f_lower = oracle.eval(lower);
  double f_upper = oracle.eval(upper);

  for (int u = 0; u < n; ++u) {
    double f_add = oracle.eval(lower.with(u));
    double f_drop = oracle.eval(upper.without(u));
    double a = f_add - f_lower;
    double b = f_drop - f_upper;
    double a_pos = std::max(0.0, a);
    double b_pos = std::max(0.0, b);
    double keep_prob = a_pos + b_pos <= 0.0 ? 1.0 : a_pos / (a_pos + b_pos);
    if (prng.next_double() < keep_prob) {
      lower.add(u);
      f_lower = f_add;
    } else {
      upper.remove(u);
      f_upper = f_drop;
    }
  }
  return {lower, f_lower};
}

// Random greedy: k rounds, each adding a uniformly random element from the
// up-to-k best positive marginals against the single current set (round
// skipped when no marginal is positive). At most kn + 1 queries.
inline std::pair<ElementSet, double> random_greedy_cardinality(
    ValueOracle& oracle, int k, std::uint64_t seed) {
  const int n = oracle.ground_size();
  if (k < 0 || k > n) {
    throw InvalidInputError("cardinality bound must be in [0, n]");
  }
  Prng prng(seed);

  ElementSet current;
  double value = oracle.eval(current);

  for (int round = 0; round < k; ++round) {
    std::vector<std::pair<double, int>> gains;
    for (int u = 0; u < n; ++u) {
      if (current.contains(u)) continue;
      double gain = oracle.eval(current.with(u)) - value;
      if (gain > 0.0) gains.push_back({gain, u});
    }
    if (gains.empty()) continue;
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    if (static_cast<int>(gains.size()) > k) gains.resize(k);
    const auto& picked = gains[prng.next_below(gains.size())];
    current.add(picked.second);
    value += picked.first;
  }
  return {current, value};
}

}  // namespace submax::baselines
