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
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "submax/distribution.hpp"
#include "submax/element_set.hpp"
#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/prng.hpp"

// Seeded random-instance generation for tests and property suites. All
// outputs are tables of 2^n values that are non-negative and submodular
// by construction, then re-checked; a failing check rejects the draw and
// moves to the next substream.
namespace submax::gen {

namespace detail {

// Pairwise diminishing-returns check on a raw table; equivalent to full
// submodularity and cheap enough to run inside the rejection loop.
inline bool table_is_submodular(const std::vector<double>& f, double tol) {
  int n = std::countr_zero(f.size());
  std::uint64_t total = f.size();
  for (std::uint64_t base = 0; base < total; ++base) {
    for (int u = 0; u < n; ++u) {
      if ((base >> u) & 1) continue;
      for (int v = u + 1; v < n; ++v) {
        if ((base >> v) & 1) continue;
        std::uint64_t bu = base | (std::uint64_t{1} << u);
        std::uint64_t bv = base | (std::uint64_t{1} << v);
        if (f[bu | bv] - f[bv] > f[bu] - f[base] + tol) return false;
      }
    }
  }
  return true;
}

inline bool table_is_nonnegative(const std::vector<double>& f, double tol) {
  for (double v : f) {
    if (v < -tol) return false;
  }
  return true;
}

}  // namespace detail

// Random non-negative submodular table. Small ground sets (n <= 3) use
// plain rejection over uniform tables, which keeps the draws generic;
// larger ones mix three submodular atoms (a random weighted graph cut, a
// random weighted coverage, and a concave profile of the cardinality)
// whose non-negative combination is submodular again.
inline std::vector<double> random_submodular_table(int n, Prng& prng) {
  if (n < 0 || n > 16) {
    throw InvalidInputError("random_submodular_table supports n in [0, 16]");
  }
  std::uint64_t size = std::uint64_t{1} << n;

  if (n <= 3) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::vector<double> f(size);
      for (double& v : f) v = prng.next_double();
      f[0] = prng.next_double() * 0.2;  // small f(empty) keeps ratios tight
      if (detail::table_is_submodular(f, 0.0)) return f;
    }
    throw InternalError("rejection sampling failed to find a submodular table");
  }

  while (true) {
    std::vector<double> f(size, 0.0);

    // Weighted cut of a random graph.
    double w_cut = prng.next_in(0.2, 1.0);
    std::vector<std::pair<std::pair<int, int>, double>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (prng.next_double() < 0.5) {
          edges.push_back({{u, v}, prng.next_in(0.2, 1.0)});
        }
      }
    }

    // Weighted coverage with a small universe.
    double w_cov = prng.next_in(0.2, 1.0);
    int universe = n + 2;
    std::vector<std::uint64_t> covers(n, 0);
    std::vector<double> item_weight(universe);
    for (int u = 0; u < n; ++u) {
      for (int item = 0; item < universe; ++item) {
        if (prng.next_double() < 0.4) covers[u] |= std::uint64_t{1} << item;
      }
    }
    for (double& w : item_weight) w = prng.next_in(0.2, 1.0);

    // Concave profile of |S|: min of three non-negative affine pieces,
    // the last decreasing so the mix is genuinely non-monotone.
    double w_card = prng.next_in(0.2, 1.0);
    double up = prng.next_in(0.3, 1.2);
    double cap = prng.next_in(0.5, 0.5 + 0.4 * n);
    double down = prng.next_in(0.1, 0.9);
    double tail = prng.next_in(0.0, 1.0);

    for (std::uint64_t mask = 0; mask < size; ++mask) {
      double cut = 0.0;
      for (const auto& [uv, w] : edges) {
        bool in_u = (mask >> uv.first) & 1;
        bool in_v = (mask >> uv.second) & 1;
        if (in_u != in_v) cut += w;
      }
      std::uint64_t covered = 0;
      for (int u = 0; u < n; ++u) {
        if ((mask >> u) & 1) covered |= covers[u];
      }
      double cov = 0.0;
      for (int item = 0; item < universe; ++item) {
        if ((covered >> item) & 1) cov += item_weight[item];
      }
      double j = static_cast<double>(std::popcount(mask));
      double card = std::min({j * up, cap, down * (n - j) + tail});
      f[mask] = w_cut * cut + w_cov * cov + w_card * card;
    }

    if (detail::table_is_submodular(f, kValueTolerance) &&
        detail::table_is_nonnegative(f, 0.0)) {
      return f;
    }
  }
}

inline ElementSet random_subset(int n, Prng& prng) {
  ElementSet s;
  for (int u = 0; u < n; ++u) {
    if (prng.next_double() < 0.5) s.add(u);
  }
  return s;
}

// Random explicit distribution over subsets of {0..n-1} with the given
// maximum support, unified and normalized.
inline WeightedDistribution<ElementSet> random_set_distribution(int n,
                                                                int max_support,
                                                                Prng& prng) {
  WeightedDistribution<ElementSet> dist;
  int support = 1 + static_cast<int>(prng.next_below(max_support));
  for (int i = 0; i < support; ++i) {
    dist.add(prng.next_in(0.05, 1.0), random_subset(n, prng));
  }
  return dist.unified();
}

}  // namespace submax::gen
