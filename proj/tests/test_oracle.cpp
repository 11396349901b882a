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

#include <catch2/catch_amalgamated.hpp>

#include "submax/generators.hpp"
#include "submax/oracle.hpp"
#include "submax/prng.hpp"

using namespace submax;

namespace {

ValueOracle triangle_cut() {
  return make_cut_function(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

}  // namespace

TEST_CASE("modular oracle evaluates weight sums") {
  ValueOracle f = make_modular({2.0, -1.0, 3.0});
  CHECK(f.eval(ElementSet{0, 2}) == 5.0);
  CHECK(f.eval(ElementSet{}) == 0.0);
  CHECK(f.query_count() == 2);
}

TEST_CASE("query counting has no hidden memoization") {
  ValueOracle f = make_modular({1.0, 1.0});
  ElementSet s{0};
  f.eval(s);
  f.eval(s);
  CHECK(f.query_count() == 2);
}

TEST_CASE("table oracle indexes by bitmask") {
  ValueOracle f = make_table_function({0.0, 1.0, 1.0, 3.0});
  CHECK(f.ground_size() == 2);
  CHECK(f.eval(ElementSet{0, 1}) == 3.0);
  CHECK(f.eval(ElementSet{1}) == 1.0);

  ValueOracle zero = make_table_function({0.0, 0.0, 0.0, 0.0});
  CHECK(zero.eval(ElementSet{0, 1}) == 0.0);

  CHECK_THROWS_AS(make_table_function({1.0, 2.0, 3.0}), InvalidInputError);
}

TEST_CASE("marginal contributions") {
  ValueOracle f = make_modular({2.0, -1.0, 3.0});
  CHECK(f.marginal(1, ElementSet{0}) == -1.0);
  CHECK(f.query_count() == 2);
  CHECK(f.marginal(0, ElementSet{0}) == 0.0);  // u already in S

  ValueOracle cut = triangle_cut();
  CHECK(cut.marginal(0, ElementSet{}) == 2.0);
}

TEST_CASE("out-of-range sets are rejected") {
  ValueOracle f = make_modular({1.0});
  CHECK_THROWS_AS(f.eval(ElementSet{3}), InvalidInputError);
  CHECK_THROWS_AS(f.marginal(1, ElementSet{}), InvalidInputError);
}

TEST_CASE("cut and coverage definitions") {
  ValueOracle cut = triangle_cut();
  CHECK(cut.eval(ElementSet{0}) == 2.0);
  CHECK(cut.eval(ElementSet{0, 1, 2}) == 0.0);
  CHECK_THROWS_AS(make_cut_function(2, {{0, 0, 1.0}}), InvalidInputError);
  CHECK_THROWS_AS(make_cut_function(2, {{0, 5, 1.0}}), InvalidInputError);
  CHECK_THROWS_AS(make_cut_function(2, {{0, 1, -1.0}}), InvalidInputError);

  ValueOracle cov = make_coverage_function({{0, 1}, {1, 2}}, {1.0, 1.0, 1.0});
  CHECK(cov.eval(ElementSet{0, 1}) == 3.0);
  CHECK(cov.eval(ElementSet{1}) == 2.0);
  CHECK_THROWS_AS(make_coverage_function({{7}}, {1.0}), InvalidInputError);
}

TEST_CASE("submodularity and non-negativity checks") {
  ValueOracle modular = make_modular({2.0, -1.0, 3.0});
  CHECK(check_submodular(modular));

  ValueOracle super = make_table_function({0.0, 1.0, 1.0, 3.0});
  CHECK_FALSE(check_submodular(super));

  ValueOracle cut = triangle_cut();
  CHECK(check_submodular(cut));
  CHECK(check_nonnegative(cut));

  ValueOracle neg = make_modular({2.0, -1.0, 3.0});
  CHECK_FALSE(check_nonnegative(neg));

  ValueOracle big = make_modular(std::vector<double>(17, 1.0));
  CHECK_THROWS_AS(check_submodular(big), CapacityError);
}

TEST_CASE("brute-force optimum") {
  ValueOracle f = make_modular({2.0, -1.0, 3.0});
  auto [best, value] = brute_force_opt(f);
  CHECK(best == ElementSet{0, 2});
  CHECK(value == 5.0);

  ValueOracle g = make_modular({2.0, -1.0, 3.0});
  auto [best1, value1] = brute_force_opt(g, 1);
  CHECK(best1 == ElementSet{2});
  CHECK(value1 == 3.0);

  ValueOracle cut = triangle_cut();
  auto [cut_best, cut_value] = brute_force_opt(cut);
  CHECK(cut_value == 2.0);

  ValueOracle big = make_modular(std::vector<double>(21, 1.0));
  CHECK_THROWS_AS(brute_force_opt(big), CapacityError);
}

TEST_CASE("family oracles agree with direct recomputation on all subsets") {
  Prng prng(42);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 4 + static_cast<int>(prng.next_below(4));

    std::vector<double> weights(n);
    for (double& w : weights) w = prng.next_in(-2.0, 2.0);
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (prng.next_double() < 0.5) edges.push_back({u, v, prng.next_in(0.1, 1.0)});
      }
    }

    ValueOracle modular = make_modular(weights);
    ValueOracle cut = make_cut_function(n, edges);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      double direct_mod = 0.0;
      for (int u = 0; u < n; ++u) {
        if ((mask >> u) & 1) direct_mod += weights[u];
      }
      double direct_cut = 0.0;
      for (const auto& e : edges) {
        if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) direct_cut += e.weight;
      }
      REQUIRE_THAT(modular.eval(s),
                   Catch::Matchers::WithinAbs(direct_mod, 1e-12));
      REQUIRE_THAT(cut.eval(s), Catch::Matchers::WithinAbs(direct_cut, 1e-12));
    }
  }
}

TEST_CASE("cached evaluator only queries on misses") {
  ValueOracle f = make_modular({1.0, 2.0});
  CachedEvaluator cache(f);
  CHECK(cache.value(ElementSet{0}) == 1.0);
  CHECK(cache.value(ElementSet{0}) == 1.0);
  CHECK(f.query_count() == 1);
  cache.remember(ElementSet{1}, 2.0);
  CHECK(cache.value(ElementSet{1}) == 2.0);
  CHECK(f.query_count() == 1);
}
