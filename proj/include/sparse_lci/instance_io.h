// Copyright 2026 The sparse-lci Authors
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

#ifndef SPARSE_LCI_INSTANCE_IO_H_
#define SPARSE_LCI_INSTANCE_IO_H_

// JSON instance and point files. Every index in a file is 1-based.
//
//   {"weights": [3, 3, 5, 5], "capacity": 8,
//    "gubs": [[1, 2], [3], [4]],                      (optional)
//    "points": [[0.9, 0.4, 0.8, 0.7]],                (optional)
//    "network": {"wires": 4, "comparators": [[1, 2], [3, 4]]},   (optional)
//    "input": [4, 2, 1, 3],                           (optional)
//    "expected_output": [1, 2, 3, 4],                 (optional)
//    "expected_trace": {"2": [2, 1, 1, 3, 3, 2]},     (optional, entry -> wires)
//    "coefficients": [0, 1, 2, 3]}                    (optional)

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparse_lci/knapsack.h"
#include "sparse_lci/separation.h"
#include "sparse_lci/sorting_network.h"

namespace sparse_lci {

struct Instance {
  std::optional<Knapsack> knapsack;
  std::optional<GubPartition> gubs;  // 0-based inside
  std::vector<std::vector<double>> points;
  std::optional<ComparisonNetwork> network;
  std::vector<double> input;
  std::optional<std::vector<double>> expected_output;
  std::map<int, std::vector<int>> expected_trace;  // 0-based entry -> wires
  std::vector<double> coefficients;
};

// Throws kParseError for malformed JSON or wrong field types; knapsack and
// network validation errors propagate with their own codes.
Instance ParseInstance(const std::string& text);
// Also kParseError when the file cannot be read.
Instance LoadInstance(const std::string& path);

// A JSON array of numbers.
std::vector<double> ParsePoint(const std::string& text);
std::vector<double> LoadPoint(const std::string& path);

std::string ReadFile(const std::string& path);

nlohmann::ordered_json TupleToJson(const ClassTuple& t);
nlohmann::ordered_json CutToJson(const LiftedCut& cut);
nlohmann::ordered_json NetworkToJson(const ComparisonNetwork& net);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_INSTANCE_IO_H_
