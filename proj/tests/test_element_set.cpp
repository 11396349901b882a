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

#include "submax/element_set.hpp"

using submax::ElementSet;

TEST_CASE("basic membership and size") {
  ElementSet s{0, 2};
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.contains(2));
  CHECK(s.size() == 2);
  CHECK(s.with(1).size() == 3);
  CHECK(s.without(0) == ElementSet{2});
  CHECK(ElementSet{}.empty());
}

TEST_CASE("full set across word boundaries") {
  CHECK(ElementSet::full(0).empty());
  CHECK(ElementSet::full(64).size() == 64);
  CHECK(ElementSet::full(65).size() == 65);
  CHECK(ElementSet::full(256).size() == 256);

  ElementSet big = ElementSet::full(130);
  CHECK(big.contains(129));
  CHECK_FALSE(big.contains(130));
  big.remove(100);
  CHECK(big.size() == 129);
  CHECK(big.is_subset_of(ElementSet::full(130)));
}

TEST_CASE("ordering follows the numeric mask") {
  CHECK(ElementSet{0} < ElementSet{1});
  CHECK(ElementSet{0, 1} < ElementSet{2});
  CHECK(ElementSet{} < ElementSet{0});
  // Elements in high words dominate.
  ElementSet high{200};
  ElementSet low = ElementSet::full(64);
  CHECK(low < high);
}

TEST_CASE("set algebra and iteration") {
  ElementSet a{0, 1, 70};
  ElementSet b{1, 70, 200};
  CHECK((a & b) == ElementSet{1, 70});
  CHECK((a | b) == ElementSet{0, 1, 70, 200});

  std::vector<int> seen;
  (a | b).for_each([&](int u) { seen.push_back(u); });
  CHECK(seen == std::vector<int>{0, 1, 70, 200});
}

TEST_CASE("hex rendering") {
  CHECK(ElementSet{}.to_hex() == "0");
  CHECK(ElementSet{0, 1}.to_hex() == "3");
  CHECK(ElementSet{4}.to_hex() == "10");
  CHECK(ElementSet{64}.to_hex() == "10000000000000000");
}
