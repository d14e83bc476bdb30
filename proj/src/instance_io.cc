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

#include "sparse_lci/instance_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "sparse_lci/status.h"

namespace sparse_lci {

using nlohmann::json;

namespace {

[[noreturn]] void Bad(const std::string& message) {
  throw LciError(ErrorCode::kParseError, message);
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Bad(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<double> NumberArray(const json& value, const char* field) {
  if (!value.is_array()) Bad(std::string(field) + " must be an array");
  std::vector<double> out;
  for (const json& e : value) {
    if (!e.is_number()) Bad(std::string(field) + " must contain numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int64_t> IntegerArray(const json& value, const char* field) {
  if (!value.is_array()) Bad(std::string(field) + " must be an array");
  std::vector<int64_t> out;
  for (const json& e : value) {
    if (!e.is_number_integer()) Bad(std::string(field) + " must contain integers");
    out.push_back(e.get<int64_t>());
  }
  return out;
}

// 1-based index in [1, limit] to 0-based.
int Index(int64_t one_based, int64_t limit, const char* field) {
  if (one_based < 1 || one_based > limit) {
    Bad(std::string(field) + " index " + std::to_string(one_based) +
        " out of range 1.." + std::to_string(limit));
  }
  return static_cast<int>(one_based - 1);
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Bad("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance ParseInstance(const std::string& text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) Bad("instance must be a JSON object");
  Instance instance;
  if (doc.contains("weights") || doc.contains("capacity")) {
    if (!doc.contains("weights") || !doc.contains("capacity")) {
      Bad("weights and capacity must be given together");
    }
    if (!doc["capacity"].is_number_integer()) Bad("capacity must be an integer");
    instance.knapsack = Knapsack::Normalize(IntegerArray(doc["weights"], "weights"),
                                            doc["capacity"].get<int64_t>());
    const int n = instance.knapsack->n();
    if (doc.contains("gubs")) {
      if (!doc["gubs"].is_array()) Bad("gubs must be an array of arrays");
      GubPartition gubs;
      for (const json& group : doc["gubs"]) {
        std::vector<int> members;
        for (int64_t i : IntegerArray(group, "gubs")) {
          members.push_back(Index(i, n, "gubs"));
        }
        gubs.groups.push_back(std::move(members));
      }
      ValidateGubs(gubs, n);
      instance.gubs = std::move(gubs);
    }
    if (doc.contains("points")) {
      if (!doc["points"].is_array()) Bad("points must be an array of arrays");
      for (const json& p : doc["points"]) {
        instance.points.push_back(NumberArray(p, "points"));
        ValidatePoint(instance.points.back(), n);
      }
    }
  }
  if (doc.contains("network")) {
    const json& net = doc["network"];
    if (!net.is_object() || !net.contains("wires") || !net.contains("comparators") ||
        !net["wires"].is_number_integer() || !net["comparators"].is_array()) {
      Bad("network needs integer wires and a comparators array");
    }
    const int64_t wires = net["wires"].get<int64_t>();
    if (wires < 1 || wires > 1 << 20) Bad("network wire count out of range");
    std::vector<std::pair<int, int>> pairs;
    for (const json& c : net["comparators"]) {
      const std::vector<int64_t> ij = IntegerArray(c, "comparators");
      if (ij.size() != 2) Bad("comparators are pairs");
      pairs.emplace_back(Index(ij[0], wires, "comparator"),
                         Index(ij[1], wires, "comparator"));
    }
    instance.network =
        ComparisonNetwork::FromPairs(static_cast<int>(wires), pairs);
    if (doc.contains("input")) instance.input = NumberArray(doc["input"], "input");
    if (doc.contains("expected_output")) {
      instance.expected_output =
          NumberArray(doc["expected_output"], "expected_output");
    }
    if (doc.contains("expected_trace")) {
      const json& trace = doc["expected_trace"];
      if (!trace.is_object()) Bad("expected_trace must be an object");
      for (const auto& [key, value] : trace.items()) {
        int64_t entry = 0;
        try {
          entry = std::stoll(key);
        } catch (const std::exception&) {
          Bad("expected_trace keys are 1-based entry numbers");
        }
        std::vector<int> wires_seen;
        for (int64_t w : IntegerArray(value, "expected_trace")) {
          wires_seen.push_back(Index(w, wires, "expected_trace"));
        }
        instance.expected_trace[Index(entry, wires, "expected_trace")] =
            std::move(wires_seen);
      }
    }
    if (doc.contains("coefficients")) {
      instance.coefficients = NumberArray(doc["coefficients"], "coefficients");
    }
  }
  if (!instance.knapsack.has_value() && !instance.network.has_value()) {
    Bad("instance needs weights/capacity or a network");
  }
  return instance;
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

std::vector<double> ParsePoint(const std::string& text) {
  return NumberArray(ParseJson(text), "point");
}

std::vector<double> LoadPoint(const std::string& path) {
  return ParsePoint(ReadFile(path));
}

nlohmann::ordered_json TupleToJson(const ClassTuple& t) {
  return nlohmann::ordered_json(t.counts());
}

nlohmann::ordered_json CutToJson(const LiftedCut& cut) {
  nlohmann::ordered_json j;
  j["coeffs"] = cut.coeffs;
  j["rhs"] = cut.rhs;
  j["violation"] = ToDouble(cut.violation);
  j["cover"] = TupleToJson(cut.cover);
  j["indep"] = TupleToJson(cut.indep);
  j["gub"] = cut.gub_strengthened;
  j["exact"] = cut.exact_lifting;
  return j;
}

nlohmann::ordered_json NetworkToJson(const ComparisonNetwork& net) {
  nlohmann::ordered_json j;
  j["wires"] = net.n();
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const Comparator& c : net.comparators()) {
    pairs.push_back({c.i + 1, c.j + 1});
  }
  j["comparators"] = std::move(pairs);
  return j;
}

}  // namespace sparse_lci
