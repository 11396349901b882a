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
#include <cstdio>
#include <optional>
#include <string>

namespace submax::report {

// Fixed CSV schema; optional fields render as empty cells. The ratio
// column is value/opt and appears exactly when opt does.
inline constexpr const char* kCsvHeader =
    "instance,algo,k,seed,value,opt,ratio,queries,max_support,ms";

struct RunReport {
  std::string instance;
  std::string algo;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  double value = 0.0;
  std::optional<double> opt;
  std::uint64_t queries = 0;
  int max_support = 0;
  std::optional<double> wall_time_ms;
};

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string to_csv_row(const RunReport& r) {
  std::string row = r.instance;
  row += ',';
  row += r.algo;
  row += ',';
  if (r.k) row += std::to_string(*r.k);
  row += ',';
  if (r.seed) row += std::to_string(*r.seed);
  row += ',';
  row += format_double(r.value);
  row += ',';
  if (r.opt) row += format_double(*r.opt);
  row += ',';
  if (r.opt) row += format_double(r.value / *r.opt);
  row += ',';
  row += std::to_string(r.queries);
  row += ',';
  row += std::to_string(r.max_support);
  row += ',';
  if (r.wall_time_ms) row += format_double(*r.wall_time_ms);
  return row;
}

}  // namespace submax::report
