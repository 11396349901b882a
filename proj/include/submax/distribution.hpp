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
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/errors.hpp"

namespace submax {

// Solver outputs below this magnitude are treated as exact zeros before a
// tuple is created; stored probabilities always exceed it.
inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kMassTolerance = 1e-9;

template <typename State>
struct WeightedState {
  double p = 0.0;
  State state{};
};

// Explicit distribution over algorithm states: an ordered multiset of
// (probability, state) tuples. Tuples with the same state may coexist
// until unify() merges them; after unify() tuples are distinct and sorted
// by state, which makes runs reproducible byte for byte.
template <typename State>
class WeightedDistribution {
 public:
  using Tuple = WeightedState<State>;

  WeightedDistribution() = default;

  static WeightedDistribution singleton(State s) {
    WeightedDistribution d;
    d.tuples_.push_back({1.0, std::move(s)});
    return d;
  }

  // Appends a tuple. Zero-probability tuples are never stored.
  void add(double p, State s) {
    if (p <= kProbabilityFloor) return;
    tuples_.push_back({p, std::move(s)});
  }

  const std::vector<Tuple>& tuples() const { return tuples_; }
  int support_size() const { return static_cast<int>(tuples_.size()); }
  bool empty() const { return tuples_.empty(); }

  double total_mass() const {
    double m = 0.0;
    for (const Tuple& t : tuples_) m += t.p;
    return m;
  }

  // Merges tuples with identical states, drops dust below the probability
  // floor, and rescales so the masses add up to exactly 1. Idempotent.
  WeightedDistribution unified() const {
    WeightedDistribution out;
    out.tuples_ = tuples_;
    std::sort(out.tuples_.begin(), out.tuples_.end(),
              [](const Tuple& a, const Tuple& b) { return a.state < b.state; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < out.tuples_.size(); ++r) {
      if (w > 0 && out.tuples_[w - 1].state == out.tuples_[r].state) {
        out.tuples_[w - 1].p += out.tuples_[r].p;
      } else {
        out.tuples_[w] = out.tuples_[r];
        ++w;
      }
    }
    out.tuples_.resize(w);
    std::erase_if(out.tuples_,
                  [](const Tuple& t) { return t.p <= kProbabilityFloor; });
    double mass = out.total_mass();
    if (mass <= 0.0) {
      throw InternalError("distribution lost all probability mass");
    }
    for (Tuple& t : out.tuples_) t.p /= mass;
    return out;
  }

  template <typename Fn>
  double expectation(Fn&& phi) const {
    double acc = 0.0;
    for (const Tuple& t : tuples_) acc += t.p * phi(t.state);
    return acc;
  }

  void check_valid(double tol = kMassTolerance) const {
    double mass = total_mass();
    if (std::fabs(mass - 1.0) > tol) {
      throw InternalError("distribution mass " + std::to_string(mass) +
                          " is not 1");
    }
    for (const Tuple& t : tuples_) {
      if (t.p <= 0.0) throw InternalError("non-positive tuple probability");
    }
  }

 private:
  std::vector<Tuple> tuples_;
};

// Pr_{S~D}[u notin S] for distributions over element sets (or any state
// with a contains() member).
template <typename State>
double prob_not_containing(const WeightedDistribution<State>& dist, int u) {
  double p = 0.0;
  for (const auto& t : dist.tuples()) {
    if (!t.state.contains(u)) p += t.p;
  }
  return p;
}

// Debug dump: one "p<TAB>bitmask-hex" line per tuple, in canonical order.
inline std::string debug_dump(const WeightedDistribution<ElementSet>& dist) {
  auto canon = dist.unified();
  std::string out;
  char buf[64];
  for (const auto& t : canon.tuples()) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.p);
    out += buf;
    out += '\t';
    out += t.state.to_hex();
    out += '\n';
  }
  return out;
}

}  // namespace submax
