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

#include <cstdint>
#include <vector>

namespace submax {

struct IterationRecord {
  int index = 0;    // 1-based iteration number
  int support = 0;  // |D_i| after the iteration
  std::uint64_t fresh_queries = 0;
  // E[f(X) + f(Y)] for the unconstrained algorithm, E[f(S)] for the
  // cardinality one; computed from cached values, costing no queries.
  double expected_value = 0.0;
};

struct RunStats {
  std::uint64_t query_count = 0;
  int max_support = 1;
  std::vector<IterationRecord> iterations;
};

}  // namespace submax
