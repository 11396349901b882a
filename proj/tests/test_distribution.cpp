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

#include "submax/distribution.hpp"
#include "submax/generators.hpp"
#include "submax/prng.hpp"

using namespace submax;
using Dist = WeightedDistribution<ElementSet>;

TEST_CASE("total mass") {
  Dist d = Dist::singleton(ElementSet{});
  CHECK(d.total_mass() == 1.0);

  Dist m;
  m.add(0.5, ElementSet{0});
  m.add(0.25, ElementSet{1});
  m.add(0.25, ElementSet{0});
  CHECK_THAT(m.total_mass(), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("unify merges, prunes and keeps canonical order") {
  Dist d;
  d.add(0.5, ElementSet{1});
  d.add(0.5, ElementSet{1});
  Dist u = d.unified();
  REQUIRE(u.support_size() == 1);
  CHECK(u.tuples()[0].p == 1.0);

  Dist single = Dist::singleton(ElementSet{0});
  Dist same = single.unified();
  REQUIRE(same.support_size() == 1);
  CHECK(same.tuples()[0].p == 1.0);
  CHECK(same.tuples()[0].state == ElementSet{0});

  Dist mixed;
  mixed.add(0.25, ElementSet{2});
  mixed.add(0.5, ElementSet{});
  mixed.add(0.25, ElementSet{2});
  Dist canon = mixed.unified();
  REQUIRE(canon.support_size() == 2);
  CHECK(canon.tuples()[0].state == ElementSet{});
  CHECK(canon.tuples()[1].state == ElementSet{2});
  CHECK_THAT(canon.tuples()[1].p, Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("unify is idempotent on random distributions") {
  Prng prng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Dist d = gen::random_set_distribution(6, 8, prng);
    Dist once = d.unified();
    Dist twice = once.unified();
    REQUIRE(once.support_size() == twice.support_size());
    for (int i = 0; i < once.support_size(); ++i) {
      CHECK(once.tuples()[i].state == twice.tuples()[i].state);
      CHECK(once.tuples()[i].p == twice.tuples()[i].p);
    }
  }
}

TEST_CASE("dust below the probability floor is dropped") {
  Dist d;
  d.add(1.0, ElementSet{0});
  d.add(1e-13, ElementSet{1});  // silently skipped by add
  CHECK(d.support_size() == 1);

  Dist e;
  e.add(0.5, ElementSet{0});
  e.add(0.5, ElementSet{1});
  e.add(2e-12, ElementSet{2});
  Dist u = e.unified();
  CHECK(u.support_size() == 3);
}

TEST_CASE("expectation and linearity") {
  ValueOracle f = make_table_function({0.0, 1.0, 2.0, 4.0});
  Dist d;
  d.add(0.5, ElementSet{0});
  d.add(0.5, ElementSet{1});
  auto phi = [&](const ElementSet& s) { return f.eval(s); };
  CHECK_THAT(d.expectation(phi), Catch::Matchers::WithinAbs(1.5, 1e-12));

  Prng prng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Dist r = gen::random_set_distribution(5, 6, prng);
    double a = prng.next_in(-2.0, 2.0);
    double b = prng.next_in(-2.0, 2.0);
    auto phi1 = [](const ElementSet& s) { return 1.0 * s.size(); };
    auto phi2 = [](const ElementSet& s) { return s.contains(0) ? 3.0 : -1.0; };
    double combined = r.expectation(
        [&](const ElementSet& s) { return a * phi1(s) + b * phi2(s); });
    double split = a * r.expectation(phi1) + b * r.expectation(phi2);
    REQUIRE_THAT(combined, Catch::Matchers::WithinAbs(split, 1e-9));
  }
}

TEST_CASE("probability of not containing an element") {
  Dist d = Dist::singleton(ElementSet{});
  CHECK(prob_not_containing(d, 3) == 1.0);

  Dist e;
  e.add(0.5, ElementSet{2});
  e.add(0.5, ElementSet{});
  CHECK_THAT(prob_not_containing(e, 2), Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("debug dump format") {
  Dist d;
  d.add(0.75, ElementSet{0, 1});
  d.add(0.25, ElementSet{4});
  CHECK(debug_dump(d) == "0.75\t3\n0.25\t10\n");
}
