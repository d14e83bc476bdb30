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

#include "sparse_lci/knapsack.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "sparse_lci/checked_math.h"
#include "sparse_lci/status.h"

namespace sparse_lci {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kWeightExceedsCapacity: return "WeightExceedsCapacity";
    case ErrorCode::kTrivialKnapsack: return "TrivialKnapsack";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kOverlappingGroups: return "OverlappingGroups";
    case ErrorCode::kUncoveredIndex: return "UncoveredIndex";
    case ErrorCode::kTupleOutOfBounds: return "TupleOutOfBounds";
    case ErrorCode::kTupleExceedsClass: return "TupleExceedsClass";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kInvalidNetwork: return "InvalidNetwork";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCertificateInfeasible: return "CertificateInfeasible";
    case ErrorCode::kNameCollision: return "NameCollision";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

int ClassTuple::Cardinality() const {
  int total = 0;
  for (int c : counts_) total += c;
  return total;
}

bool ClassTuple::IsZero() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c == 0; });
}

bool ClassTuple::LessEqual(const ClassTuple& other) const {
  if (other.sigma() != sigma()) return false;
  for (int j = 0; j < sigma(); ++j) {
    if (counts_[j] > other.counts_[j]) return false;
  }
  return true;
}

ClassTuple ClassTuple::operator+(const ClassTuple& other) const {
  if (other.sigma() != sigma()) {
    throw LciError(ErrorCode::kDimensionMismatch, "tuple lengths differ");
  }
  ClassTuple sum(*this);
  for (int j = 0; j < sigma(); ++j) sum.counts_[j] += other.counts_[j];
  return sum;
}

std::string ClassTuple::ToString() const {
  std::ostringstream out;
  out << '(';
  for (int j = 0; j < sigma(); ++j) {
    if (j > 0) out << ',';
    out << counts_[j];
  }
  out << ')';
  return out.str();
}

WeightClasses WeightClasses::FromWeights(std::span<const int64_t> weights) {
  std::map<int64_t, std::vector<int>> by_weight;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    if (weights[i] <= 0) {
      throw LciError(ErrorCode::kNonPositiveWeight,
                     "weight of item " + std::to_string(i + 1) +
                         " is not positive");
    }
    by_weight[weights[i]].push_back(i);
  }
  WeightClasses classes;
  classes.class_of_.assign(weights.size(), -1);
  for (auto& [w, members] : by_weight) {
    const int j = static_cast<int>(classes.class_weights_.size());
    for (int i : members) classes.class_of_[i] = j;
    classes.class_weights_.push_back(w);
    classes.members_.push_back(std::move(members));
  }
  return classes;
}

ClassTuple WeightClasses::Sizes() const {
  ClassTuple sizes(sigma());
  for (int j = 0; j < sigma(); ++j) sizes[j] = size(j);
  return sizes;
}

void WeightClasses::CheckWithinBounds(const ClassTuple& t) const {
  if (t.sigma() != sigma()) {
    throw LciError(ErrorCode::kTupleOutOfBounds,
                   "tuple " + t.ToString() + " has length " +
                       std::to_string(t.sigma()) + ", expected " +
                       std::to_string(sigma()));
  }
  for (int j = 0; j < sigma(); ++j) {
    if (t[j] < 0 || t[j] > size(j)) {
      throw LciError(ErrorCode::kTupleOutOfBounds,
                     "tuple " + t.ToString() + " exceeds class " +
                         std::to_string(j + 1) + " of size " +
                         std::to_string(size(j)));
    }
  }
}

Knapsack Knapsack::Normalize(std::vector<int64_t> weights, int64_t capacity) {
  if (weights.empty()) {
    throw LciError(ErrorCode::kInvalidArgument, "knapsack has no items");
  }
  int64_t total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) {
      throw LciError(ErrorCode::kNonPositiveWeight,
                     "weight of item " + std::to_string(i + 1) +
                         " is not positive");
    }
    if (weights[i] > capacity) {
      throw LciError(ErrorCode::kWeightExceedsCapacity,
                     "weight of item " + std::to_string(i + 1) +
                         " exceeds the capacity");
    }
    total = CheckedAdd(total, weights[i]);
  }
  if (total <= capacity) {
    throw LciError(ErrorCode::kTrivialKnapsack,
                   "total weight " + std::to_string(total) +
                       " does not exceed the capacity " +
                       std::to_string(capacity));
  }
  return Knapsack(std::move(weights), capacity, total);
}

WeightClasses ClassProfile(const Knapsack& knapsack) {
  return WeightClasses::FromWeights(knapsack.weights());
}

ClassedKnapsack ClassedKnapsack::FromKnapsack(const Knapsack& knapsack) {
  return ClassedKnapsack{ClassProfile(knapsack), knapsack.capacity()};
}

ClassedKnapsack ClassedKnapsack::FromRawRow(std::span<const int64_t> weights,
                                            int64_t capacity) {
  if (capacity < 0) {
    throw LciError(ErrorCode::kInvalidArgument, "negative capacity");
  }
  return ClassedKnapsack{WeightClasses::FromWeights(weights), capacity};
}

int64_t TupleWeight(const ClassTuple& t, const WeightClasses& classes) {
  classes.CheckWithinBounds(t);
  int64_t total = 0;
  for (int j = 0; j < t.sigma(); ++j) {
    total = CheckedAdd(total, CheckedMul(t[j], classes.weight(j)));
  }
  return total;
}

GubPartition GubPartition::Trivial(int n) {
  GubPartition gubs;
  for (int i = 0; i < n; ++i) gubs.groups.push_back({i});
  return gubs;
}

std::vector<int> ValidateGubs(const GubPartition& gubs, int n) {
  std::vector<int> group_of(n, -1);
  for (int g = 0; g < static_cast<int>(gubs.groups.size()); ++g) {
    for (int i : gubs.groups[g]) {
      if (i < 0 || i >= n) {
        throw LciError(ErrorCode::kInvalidArgument,
                       "GUB index " + std::to_string(i + 1) +
                           " outside [1, " + std::to_string(n) + "]");
      }
      if (group_of[i] != -1) {
        throw LciError(ErrorCode::kOverlappingGroups,
                       "item " + std::to_string(i + 1) +
                           " appears in more than one GUB");
      }
      group_of[i] = g;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (group_of[i] == -1) {
      throw LciError(ErrorCode::kUncoveredIndex,
                     "item " + std::to_string(i + 1) + " is in no GUB");
    }
  }
  return group_of;
}

void ValidatePoint(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "point has " + std::to_string(x.size()) +
                       " entries, expected " + std::to_string(n));
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || x[i] < -kPointTolerance ||
        x[i] > 1.0 + kPointTolerance) {
      throw LciError(ErrorCode::kInvalidPoint,
                     "entry " + std::to_string(i + 1) + " is outside [0,1]");
    }
  }
}

}  // namespace sparse_lci
