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

#ifndef SPARSE_LCI_COVER_ENUM_H_
#define SPARSE_LCI_COVER_ENUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sparse_lci/knapsack.h"

namespace sparse_lci {

struct CoverClass {
  ClassTuple tuple;
  int64_t weight = 0;
  int cardinality = 0;
  int rhs = 0;  // cardinality - 1

  static CoverClass FromTuple(ClassTuple tuple, const WeightClasses& classes);
};

bool IsCover(const ClassTuple& t, const ClassedKnapsack& knapsack);

// A cover class is minimal iff dropping one item of the lightest occupied
// class brings the weight back to at most the capacity.
bool IsMinimalCover(const ClassTuple& t, const ClassedKnapsack& knapsack);

// The first minimal cover class in reverse-lexicographic order (c_sigma most
// significant), found with one ceiling division per class from the heaviest
// class down. Returns nullopt only when the whole row is not a cover.
std::optional<CoverClass> FirstMinimalCover(const ClassedKnapsack& knapsack);

enum class CoverOrder {
  kForward,  // increasing reverse-lexicographic order
  kReverse,  // decreasing reverse-lexicographic order
  kAuto,     // kReverse iff sum(a) <= 2 * capacity, else kForward
};

// Resumable enumeration of all minimal cover classes, each exactly once.
//
// The cursor walks the prefix (c_2, ..., c_sigma) like an odometer and settles
// c_1 arithmetically: for a fixed prefix at most one value of c_1 gives a
// minimal cover, namely the smallest one that covers. This realises the three
// skips of the plain reverse-lexicographic scan: after a minimal cover the
// remaining c_1 values of the prefix are skipped; a prefix that does not
// cover even with c_1 = |W_1| is skipped entirely; and any other value of c_1
// is jumped over. Minimality of the candidate is tested before the jump.
//
// The knapsack must outlive the cursor.
class CoverCursor {
 public:
  explicit CoverCursor(const ClassedKnapsack& knapsack,
                       CoverOrder order = CoverOrder::kForward);

  std::optional<CoverClass> Next();
  bool reversed() const { return reversed_; }
  // Number of prefixes inspected so far.
  int64_t steps() const { return steps_; }

 private:
  bool Advance();

  const ClassedKnapsack* knapsack_;
  bool reversed_ = false;
  bool done_ = false;
  std::vector<int> prefix_;  // counts for classes 1..sigma-1 (0-based)
  int64_t steps_ = 0;
};

std::vector<CoverClass> AllMinimalCovers(
    const ClassedKnapsack& knapsack, CoverOrder order = CoverOrder::kForward);

struct LiftingData {
  // mu[h] = sum of the h heaviest cover weights, h = 0..num_items; constant
  // once h reaches the cover size.
  std::vector<int64_t> mu;
  int cover_size = 0;
  // Cover weight minus capacity.
  int64_t delta = 0;
  // pi[j] = max{h : w_j >= mu(h)} for every class j.
  std::vector<int> pi;

  // mu for any h >= 0, including h beyond the table.
  int64_t Mu(int64_t h) const;
};

// O(n) table construction, heaviest cover items first.
LiftingData ComputeLifting(const ClassTuple& cover,
                           const ClassedKnapsack& knapsack);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_COVER_ENUM_H_
