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
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/errors.hpp"

namespace submax {

inline constexpr double kValueTolerance = 1e-9;

// Black-box set-function evaluator with query accounting. The function
// itself is immutable after construction; the query counter belongs to
// whoever owns this object, so concurrent runs each construct their own
// oracle from the same underlying function.
class ValueOracle {
 public:
  using EvalFn = std::function<double(const ElementSet&)>;

  ValueOracle(int n, EvalFn fn)
      : n_(n), full_(ElementSet::full(n < 0 ? 0 : n)), fn_(std::move(fn)) {
    if (n < 0 || n > ElementSet::kMaxElements) {
      throw InvalidInputError("ground set size out of range: " +
                              std::to_string(n));
    }
  }

  int ground_size() const { return n_; }

  // f(S). Every call counts as one query; there is no memoization at this
  // layer (algorithms cache per run, see CachedEvaluator).
  double eval(const ElementSet& s) {
    if (!s.is_subset_of(full_)) {
      throw InvalidInputError("set contains elements outside the ground set");
    }
    ++queries_;
    return fn_(s);
  }

  // f(S + u) - f(S). Exactly two queries; callers evaluating many marginals
  // against a fixed S should cache f(S) themselves.
  double marginal(int u, const ElementSet& s) {
    require_element_in_range(u, n_);
    return eval(s.with(u)) - eval(s);
  }

  std::uint64_t query_count() const { return queries_; }

 private:
  int n_;
  ElementSet full_;
  EvalFn fn_;
  std::uint64_t queries_ = 0;
};

// Per-run memo on top of an oracle. Cache hits are free; misses hit the
// oracle and count. This is how the algorithm modules meet their stated
// per-iteration query bounds.
class CachedEvaluator {
 public:
  explicit CachedEvaluator(ValueOracle& oracle) : oracle_(&oracle) {}

  double value(const ElementSet& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    double v = oracle_->eval(s);
    memo_.emplace(s, v);
    return v;
  }

  // Records a value learned by arithmetic (e.g. f(S+u) = f(S) + marginal)
  // so later lookups stay query-free.
  void remember(const ElementSet& s, double v) { memo_.emplace(s, v); }

  ValueOracle& oracle() { return *oracle_; }

 private:
  ValueOracle* oracle_;
  std::unordered_map<ElementSet, double, ElementSet::Hash> memo_;
};

// ---------------------------------------------------------------------------
// Concrete function families
// ---------------------------------------------------------------------------

// modular(S) = sum of w_u over u in S. Weights may be negative, in which
// case the function is not non-negative and approximation guarantees do
// not apply (the algorithms still run).
inline ValueOracle make_modular(const std::vector<double>& weights) {
  int n = static_cast<int>(weights.size());
  return ValueOracle(n, [weights](const ElementSet& s) {
    double total = 0.0;
    s.for_each([&](int u) { total += weights[u]; });
    return total;
  });
}

// Table oracle: eval(S) = values[bitmask(S)]. Length must be 2^n, n <= 24.
inline ValueOracle make_table_function(const std::vector<double>& values) {
  std::size_t len = values.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw InvalidInputError("table length must be a power of two");
  }
  int n = std::countr_zero(len);
  if (n > 24) throw InvalidInputError("table oracle limited to n <= 24");
  return ValueOracle(n, [values](const ElementSet& s) {
    return values[s.low_mask()];
  });
}

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// cut(S) = total weight of edges with exactly one endpoint in S.
inline ValueOracle make_cut_function(int n,
                                     const std::vector<WeightedEdge>& edges) {
  for (const auto& e : edges) {
    require_element_in_range(e.u, n);
    require_element_in_range(e.v, n);
    if (e.u == e.v) throw InvalidInputError("cut edge endpoints must differ");
    if (e.weight < 0) throw InvalidInputError("cut edge weight must be >= 0");
  }
  return ValueOracle(n, [edges](const ElementSet& s) {
    double total = 0.0;
    for (const auto& e : edges) {
      if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
    }
    return total;
  });
}

// coverage(S) = total weight of universe items covered by the union of the
// chosen sets. `sets[u]` lists the universe items element u covers.
inline ValueOracle make_coverage_function(
    const std::vector<std::vector<int>>& sets,
    const std::vector<double>& item_weights) {
  int n = static_cast<int>(sets.size());
  int universe = static_cast<int>(item_weights.size());
  for (const auto& set : sets) {
    for (int item : set) {
      if (item < 0 || item >= universe) {
        throw InvalidInputError("coverage set references item " +
                                std::to_string(item) +
                                " outside universe of size " +
                                std::to_string(universe));
      }
    }
  }
  for (double w : item_weights) {
    if (w < 0) throw InvalidInputError("coverage item weight must be >= 0");
  }
  return ValueOracle(n, [sets, item_weights](const ElementSet& s) {
    std::vector<bool> covered(item_weights.size(), false);
    s.for_each([&](int u) {
      for (int item : sets[u]) covered[item] = true;
    });
    double total = 0.0;
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (covered[i]) total += item_weights[i];
    }
    return total;
  });
}

// ---------------------------------------------------------------------------
// Exhaustive verification oracles
// ---------------------------------------------------------------------------

inline constexpr int kCheckLimit = 16;       // 2^16 tabulated values
inline constexpr int kBruteForceLimit = 20;  // 2^20 enumerated sets

namespace detail {
inline std::vector<double> tabulate(ValueOracle& oracle, int max_n,
                                    const char* op) {
  int n = oracle.ground_size();
  if (n > max_n) {
    throw CapacityError(std::string(op) + " limited to n <= " +
                        std::to_string(max_n));
  }
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = oracle.eval(ElementSet::from_mask(mask));
  }
  return table;
}
}  // namespace detail

// Checks f(A+u) - f(A) >= f(B+u) - f(B) for all A subseteq B, u notin B,
// within tolerance. Exhaustive; n <= 16.
inline bool check_submodular(ValueOracle& oracle,
                             double tol = kValueTolerance) {
  int n = oracle.ground_size();
  std::vector<double> f = detail::tabulate(oracle, kCheckLimit, "check_submodular");
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < total; ++b) {
    for (int u = 0; u < n; ++u) {
      if ((b >> u) & 1) continue;
      std::uint64_t ubit = std::uint64_t{1} << u;
      double gain_b = f[b | ubit] - f[b];
      // All A subseteq B via the standard submask walk (includes A = B).
      std::uint64_t a = b;
      while (true) {
        if (f[a | ubit] - f[a] < gain_b - tol) return false;
        if (a == 0) break;
        a = (a - 1) & b;
      }
    }
  }
  return true;
}

// Checks f(S) >= -tol for all S. Exhaustive; n <= 16.
inline bool check_nonnegative(ValueOracle& oracle,
                              double tol = kValueTolerance) {
  std::vector<double> f =
      detail::tabulate(oracle, kCheckLimit, "check_nonnegative");
  for (double v : f) {
    if (v < -tol) return false;
  }
  return true;
}

// Enumerates every feasible set (all subsets, or |S| <= cardinality_bound
// when given) and returns a maximizer, ties broken by smallest bitmask.
// n <= 20.
inline std::pair<ElementSet, double> brute_force_opt(
    ValueOracle& oracle, int cardinality_bound = -1) {
  int n = oracle.ground_size();
  if (n > kBruteForceLimit) {
    throw CapacityError("brute_force_opt limited to n <= " +
                        std::to_string(kBruteForceLimit));
  }
  std::uint64_t total = std::uint64_t{1} << n;
  ElementSet best;
  double best_value = oracle.eval(ElementSet{});
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (cardinality_bound >= 0 && std::popcount(mask) > cardinality_bound)
      continue;
    double v = oracle.eval(ElementSet::from_mask(mask));
    // Strict improvement only, so exact ties keep the smallest bitmask.
    if (v > best_value) {
      best = ElementSet::from_mask(mask);
      best_value = v;
    }
  }
  return {best, best_value};
}

}  // namespace submax
