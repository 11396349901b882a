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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"

// Instance files: a JSON object with a "type" discriminator and
// family-specific fields (see README for the exact schema). An Instance
// is a plain description; make_oracle() builds a fresh counted oracle
// from it, so concurrent runs never share a query counter.
namespace submax::io {

struct Instance {
  std::string type;  // "table" | "cut" | "coverage" | "modular"
  int n = 0;

  std::vector<double> values;          // table
  std::vector<WeightedEdge> edges;     // cut
  std::vector<std::vector<int>> sets;  // coverage
  std::vector<double> item_weights;    // coverage
  std::vector<double> weights;         // modular

  ValueOracle make_oracle() const {
    if (type == "table") {
      if (values.size() != (std::size_t{1} << n)) {
        throw InvalidInputError("table instance needs 2^n values");
      }
      return make_table_function(values);
    }
    if (type == "cut") return make_cut_function(n, edges);
    if (type == "coverage") {
      if (static_cast<int>(sets.size()) != n) {
        throw InvalidInputError("coverage instance needs one set per element");
      }
      return make_coverage_function(sets, item_weights);
    }
    if (type == "modular") {
      if (static_cast<int>(weights.size()) != n) {
        throw InvalidInputError("modular instance needs one weight per element");
      }
      return make_modular(weights);
    }
    throw InvalidInputError("unknown instance type '" + type + "'");
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["type"] = type;
    j["n"] = n;
    if (type == "table") {
      j["values"] = values;
    } else if (type == "cut") {
      auto arr = nlohmann::json::array();
      for (const auto& e : edges) arr.push_back({e.u, e.v, e.weight});
      j["edges"] = arr;
    } else if (type == "coverage") {
      j["universe"] = static_cast<int>(item_weights.size());
      j["sets"] = sets;
      j["item_weights"] = item_weights;
    } else if (type == "modular") {
      j["weights"] = weights;
    }
    return j;
  }

  static Instance from_json(const nlohmann::json& j) {
    Instance inst;
    try {
      inst.type = j.at("type").get<std::string>();
      inst.n = j.at("n").get<int>();
      if (inst.n < 0) throw InvalidInputError("instance n must be >= 0");
      if (inst.type == "table") {
        inst.values = j.at("values").get<std::vector<double>>();
      } else if (inst.type == "cut") {
        for (const auto& e : j.at("edges")) {
          if (!e.is_array() || e.size() < 2 || e.size() > 3) {
            throw InvalidInputError("cut edge must be [u, v] or [u, v, w]");
          }
          WeightedEdge edge;
          edge.u = e.at(0).get<int>();
          edge.v = e.at(1).get<int>();
          edge.weight = e.size() == 3 ? e.at(2).get<double>() : 1.0;
          inst.edges.push_back(edge);
        }
      } else if (inst.type == "coverage") {
        inst.sets = j.at("sets").get<std::vector<std::vector<int>>>();
        int universe = j.at("universe").get<int>();
        if (universe < 0) throw InvalidInputError("universe must be >= 0");
        if (j.contains("item_weights")) {
          inst.item_weights = j.at("item_weights").get<std::vector<double>>();
          if (static_cast<int>(inst.item_weights.size()) != universe) {
            throw InvalidInputError("item_weights length must equal universe");
          }
        } else {
          inst.item_weights.assign(universe, 1.0);
        }
      } else if (inst.type == "modular") {
        inst.weights = j.at("weights").get<std::vector<double>>();
      } else {
        throw InvalidInputError("unknown instance type '" + inst.type + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInputError(std::string("malformed instance JSON: ") +
                              e.what());
    }
    inst.make_oracle();  // validate family fields eagerly
    return inst;
  }

  static Instance from_table(std::vector<double> table) {
    Instance inst;
    inst.type = "table";
    inst.n = std::countr_zero(table.size());
    inst.values = std::move(table);
    return inst;
  }

  static Instance load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open instance file " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInputError("cannot parse " + path + ": " + e.what());
    }
    return from_json(j);
  }
};

}  // namespace submax::io
