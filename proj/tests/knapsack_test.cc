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

#include <vector>

#include "doctest.h"
#include "test_util.h"
#include "sparse_lci/checked_math.h"
#include "sparse_lci/knapsack.h"
#include "sparse_lci/status.h"

using namespace sparse_lci;
using sparse_lci::testing::CodeOf;

namespace {


}  // namespace

TEST_SUITE("knapsack") {

TEST_CASE("normalize accepts valid rows and keeps item order") {
  const Knapsack k = Knapsack::Normalize({1, 1, 1, 1, 1, 2, 2, 2, 2, 2}, 10);
  CHECK(k.n() == 10);
  CHECK(k.total_weight() == 15);
  const Knapsack k2 = Knapsack::Normalize({5, 3, 5, 3}, 8);
  CHECK(k2.weights() == std::vector<int64_t>{5, 3, 5, 3});
}

TEST_CASE("normalize rejects degenerate rows") {
  CHECK(CodeOf([] { Knapsack::Normalize({1}, 1); }) == ErrorCode::kTrivialKnapsack);
  CHECK(CodeOf([] { Knapsack::Normalize({0, 2}, 1); }) ==
        ErrorCode::kNonPositiveWeight);
  CHECK(CodeOf([] { Knapsack::Normalize({-1, 2}, 3); }) ==
        ErrorCode::kNonPositiveWeight);
  CHECK(CodeOf([] { Knapsack::Normalize({4, 2}, 3); }) ==
        ErrorCode::kWeightExceedsCapacity);
  CHECK(CodeOf([] { Knapsack::Normalize({}, 3); }) == ErrorCode::kInvalidArgument);
  const int64_t big = INT64_MAX / 2 + 1;
  CHECK(CodeOf([&] { Knapsack::Normalize({big, big, big}, INT64_MAX); }) ==
        ErrorCode::kOverflow);
}

TEST_CASE("normalize is idempotent") {
  const Knapsack k = Knapsack::Normalize({3, 3, 5, 5}, 8);
  const Knapsack again = Knapsack::Normalize(k.weights(), k.capacity());
  CHECK(again.weights() == k.weights());
  CHECK(again.capacity() == k.capacity());
}

TEST_CASE("class profile groups by weight") {
  const WeightClasses wc =
      ClassProfile(Knapsack::Normalize({1, 1, 1, 1, 1, 2, 2, 2, 2, 2}, 10));
  REQUIRE(wc.sigma() == 2);
  CHECK(wc.class_weights() == std::vector<int64_t>{1, 2});
  CHECK(wc.members(0) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(wc.members(1) == std::vector<int>{5, 6, 7, 8, 9});

  const WeightClasses w35 = ClassProfile(Knapsack::Normalize({3, 3, 5, 5}, 8));
  CHECK(w35.class_weights() == std::vector<int64_t>{3, 5});
  CHECK(w35.members(0) == std::vector<int>{0, 1});
  CHECK(w35.members(1) == std::vector<int>{2, 3});

  const WeightClasses mixed = ClassProfile(Knapsack::Normalize({5, 3, 5, 3, 4}, 9));
  CHECK(mixed.class_weights() == std::vector<int64_t>{3, 4, 5});
  CHECK(mixed.members(0) == std::vector<int>{1, 3});
  CHECK(mixed.class_of(4) == 1);
  // Flattening the members gives every item exactly once.
  std::vector<int> all;
  for (int j = 0; j < mixed.sigma(); ++j) {
    all.insert(all.end(), mixed.members(j).begin(), mixed.members(j).end());
  }
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<int>{0, 1, 2, 3, 4});

  const WeightClasses single = ClassProfile(Knapsack::Normalize({7, 7, 7}, 14));
  CHECK(single.sigma() == 1);
  CHECK(single.size(0) == 3);
}

TEST_CASE("tuple weight and arithmetic") {
  const WeightClasses a = ClassProfile(Knapsack::Normalize({1, 1, 1, 1, 2, 2, 2, 2}, 10));
  CHECK(TupleWeight({3, 4}, a) == 11);
  CHECK(TupleWeight({0, 0}, a) == 0);
  const WeightClasses b = ClassProfile(Knapsack::Normalize({3, 3, 5, 5}, 8));
  CHECK(TupleWeight({0, 2}, b) == 10);
  const ClassTuple t1{1, 2}, t2{1, 0};
  CHECK(TupleWeight(t1 + t2, b) == TupleWeight(t1, b) + TupleWeight(t2, b));
  CHECK(t2.LessEqual(t1));
  CHECK_FALSE(t1.LessEqual(t2));
  CHECK(t1.ToString() == "(1,2)");
  CHECK(CodeOf([&] { TupleWeight({3, 0}, b); }) == ErrorCode::kTupleOutOfBounds);
}

TEST_CASE("checked math") {
  CHECK(CheckedAdd(2, 3) == 5);
  CHECK(CeilDiv(7, 2) == 4);
  CHECK(CeilDiv(6, 2) == 3);
  CHECK(CeilDiv(0, 5) == 0);
  CHECK(CodeOf([] { CheckedMul(INT64_MAX, 2); }) == ErrorCode::kOverflow);
}

TEST_CASE("gub partition validation") {
  GubPartition ok{{{0, 1}, {2}, {3}}};
  CHECK(ValidateGubs(ok, 4) == std::vector<int>{0, 0, 1, 2});
  GubPartition overlap{{{0, 1}, {1, 2}, {3}}};
  CHECK(CodeOf([&] { ValidateGubs(overlap, 4); }) == ErrorCode::kOverlappingGroups);
  GubPartition uncovered{{{0}, {1}}};
  CHECK(CodeOf([&] { ValidateGubs(uncovered, 3); }) == ErrorCode::kUncoveredIndex);
  CHECK(ValidateGubs(GubPartition::Trivial(3), 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("fractional point validation") {
  ValidatePoint(std::vector<double>{0.0, 1.0, 0.5}, 3);
  ValidatePoint(std::vector<double>{-1e-10, 1.0 + 1e-10}, 2);
  CHECK(CodeOf([] { ValidatePoint(std::vector<double>{0.5}, 2); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([] { ValidatePoint(std::vector<double>{1.5}, 1); }) ==
        ErrorCode::kInvalidPoint);
}

}  // TEST_SUITE
