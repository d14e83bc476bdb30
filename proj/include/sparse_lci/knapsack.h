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

#ifndef SPARSE_LCI_KNAPSACK_H_
#define SPARSE_LCI_KNAPSACK_H_

// Canonical representation of a sparse knapsack row a.x <= capacity over
// binary variables, grouped into classes of equal weight.
//
// All indices are 0-based inside the library; file and CLI I/O is 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sparse_lci {

// Per-class cardinalities (c_1, ..., c_sigma) describing an equivalence class
// of item subsets: two subsets are equivalent iff they pick the same number of
// items from every weight class.
class ClassTuple {
 public:
  ClassTuple() = default;
  explicit ClassTuple(int sigma) : counts_(sigma, 0) {}
  explicit ClassTuple(std::vector<int> counts) : counts_(std::move(counts)) {}
  ClassTuple(std::initializer_list<int> counts) : counts_(counts) {}

  int sigma() const { return static_cast<int>(counts_.size()); }
  int operator[](int j) const { return counts_[j]; }
  int& operator[](int j) { return counts_[j]; }
  const std::vector<int>& counts() const { return counts_; }
  int Cardinality() const;
  bool IsZero() const;

  // Componentwise comparison; the total order below is only for containers.
  bool LessEqual(const ClassTuple& other) const;
  ClassTuple operator+(const ClassTuple& other) const;

  std::string ToString() const;  // "(c1,c2,...)"

  friend bool operator==(const ClassTuple&, const ClassTuple&) = default;
  friend auto operator<=>(const ClassTuple&, const ClassTuple&) = default;

 private:
  std::vector<int> counts_;
};

// Partition of the items into classes W_1..W_sigma of equal weight, ordered by
// strictly increasing weight. Members of each class are ascending indices.
class WeightClasses {
 public:
  // Groups positive weights by value. Only positivity is checked here; the
  // knapsack assumptions are validated by Knapsack::Normalize.
  static WeightClasses FromWeights(std::span<const int64_t> weights);

  int sigma() const { return static_cast<int>(class_weights_.size()); }
  int num_items() const { return static_cast<int>(class_of_.size()); }
  int64_t weight(int j) const { return class_weights_[j]; }
  const std::vector<int64_t>& class_weights() const { return class_weights_; }
  int size(int j) const { return static_cast<int>(members_[j].size()); }
  const std::vector<int>& members(int j) const { return members_[j]; }
  int class_of(int item) const { return class_of_[item]; }

  // (|W_1|, ..., |W_sigma|).
  ClassTuple Sizes() const;
  // Throws kTupleOutOfBounds unless 0 <= t[j] <= |W_j| for all j.
  void CheckWithinBounds(const ClassTuple& t) const;

 private:
  std::vector<int64_t> class_weights_;
  std::vector<std::vector<int>> members_;
  std::vector<int> class_of_;
};

// A validated knapsack: 0 < a_i <= capacity for all i and sum(a) > capacity.
// Items keep the caller's order.
class Knapsack {
 public:
  static Knapsack Normalize(std::vector<int64_t> weights, int64_t capacity);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<int64_t>& weights() const { return weights_; }
  int64_t weight(int i) const { return weights_[i]; }
  int64_t capacity() const { return capacity_; }
  int64_t total_weight() const { return total_weight_; }

 private:
  Knapsack(std::vector<int64_t> weights, int64_t capacity, int64_t total)
      : weights_(std::move(weights)), capacity_(capacity), total_weight_(total) {}

  std::vector<int64_t> weights_;
  int64_t capacity_ = 0;
  int64_t total_weight_ = 0;
};

WeightClasses ClassProfile(const Knapsack& knapsack);

// The class-level view consumed by the enumeration and lifting code.
struct ClassedKnapsack {
  WeightClasses classes;
  int64_t capacity = 0;

  static ClassedKnapsack FromKnapsack(const Knapsack& knapsack);
  // Skips the non-triviality assumptions (a_i <= capacity, sum(a) > capacity).
  // Useful for studying lifting geometry on rows a solver would have
  // preprocessed away; cut validity claims do not apply to such rows.
  static ClassedKnapsack FromRawRow(std::span<const int64_t> weights,
                                    int64_t capacity);
};

// sum_j t[j] * w_j, with overflow checking.
int64_t TupleWeight(const ClassTuple& t, const WeightClasses& classes);

// Disjoint groups L_1..L_m of item indices covering all items.
struct GubPartition {
  std::vector<std::vector<int>> groups;

  // All singletons.
  static GubPartition Trivial(int n);
};

// Throws kOverlappingGroups / kUncoveredIndex (or kInvalidArgument for an
// index outside [0, n)). Returns the group index of every item.
std::vector<int> ValidateGubs(const GubPartition& gubs, int n);

inline constexpr double kPointTolerance = 1e-9;

// Throws kDimensionMismatch or kInvalidPoint (NaN or outside [0,1] beyond
// kPointTolerance).
void ValidatePoint(std::span<const double> x, int n);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_KNAPSACK_H_
