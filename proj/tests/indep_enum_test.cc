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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "sparse_lci/cover_enum.h"
#include "sparse_lci/indep_enum.h"
#include "sparse_lci/oracle.h"
#include "test_util.h"

using namespace sparse_lci;

namespace {

// Capacity 3 with weights 1, 3, 3, 3, 4: the cover of two weight-3 items
// leaves one item per class, and both useful jumps touch the boundary.
struct TouchingRow {
  std::vector<int64_t> weights = {1, 3, 3, 3, 4};
  ClassedKnapsack row = ClassedKnapsack::FromRawRow(weights, 3);
  ClassTuple cover{0, 2, 0};
  LiftingData lifting = ComputeLifting(cover, row);
  JumpGeometry geometry = JumpGeometry::Build(cover, row.classes, lifting);
};

}  // namespace

TEST_SUITE("indep_enum") {

TEST_CASE("jump geometry orders by slope") {
  TouchingRow t;
  CHECK(t.geometry.order == std::vector<int>{0, 1, 2});
  CHECK(t.geometry.jump_x == std::vector<int64_t>{1, 2, 2});
  CHECK(t.geometry.available == std::vector<int>{1, 1, 1});
  CHECK(t.geometry.SlopeLess(0, 1));
  CHECK_FALSE(t.geometry.SlopeLess(1, 0));
}

TEST_CASE("ties in slope prefer the longer jump") {
  // Weights 2 and 4 with pi = 0 and 1 give slopes 2/1 and 4/2.
  const Knapsack k = Knapsack::Normalize({2, 2, 4, 4, 4}, 9);
  const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(k);
  const ClassTuple cover{0, 3};
  const LiftingData l = ComputeLifting(cover, ck);
  REQUIRE(l.pi == std::vector<int>{0, 1});
  const JumpGeometry g = JumpGeometry::Build(cover, ck.classes, l);
  CHECK(g.order == std::vector<int>{1, 0});
}

TEST_CASE("boundary test on touching jumps") {
  TouchingRow t;
  const PathPoint after_light{1, 1};
  CHECK(ClassifyJump({0, 0}, 0, t.geometry, t.lifting) == JumpVerdict::kAccepted);
  // Height 2.5 against boundary 3 at the midpoint.
  CHECK_FALSE(BoundaryOkJump(after_light, 1, t.geometry, t.lifting));
  CHECK(ClassifyJump(after_light, 1, t.geometry, t.lifting) ==
        JumpVerdict::kRejectedInterior);
  // Height exactly 3 at the midpoint: touching is rejected.
  CHECK_FALSE(BoundaryOkJump(after_light, 2, t.geometry, t.lifting));
  CHECK(ClassifyJump(after_light, 2, t.geometry, t.lifting) ==
        JumpVerdict::kRejectedInterior);
  CHECK(Endpoint({1, 0, 1}, t.geometry) == PathPoint{3, 5});
}

TEST_CASE("greedy completion and the conservative search") {
  TouchingRow t;
  SearchStats stats;
  const ClassTuple first =
      GreedyComplete(ClassTuple(3), 0, t.geometry, t.lifting, &stats);
  CHECK(first == ClassTuple{1, 0, 0});
  CHECK(stats.interior_rejection);
  const IndepEnumeration e = EnumerateIndepClasses(t.cover, t.row.classes, t.lifting);
  CHECK_FALSE(e.exact);
  std::vector<ClassTuple> yielded;
  for (const IndepClass& leaf : e.leaves) yielded.push_back(leaf.tuple);
  CHECK(std::find(yielded.begin(), yielded.end(), ClassTuple{1, 1, 0}) == yielded.end());
  CHECK(std::find(yielded.begin(), yielded.end(), ClassTuple{1, 0, 1}) == yielded.end());
  REQUIRE(!e.Maximal().empty());
  CHECK(e.Maximal().front().tuple == ClassTuple{1, 0, 0});
  // Ground truth disagrees, which is what the flag reports.
  CHECK(oracle::IsIndependentExact(t.cover, {1, 0, 1}, t.row.classes, t.lifting));
  CHECK_FALSE(oracle::IsIndependentExact(t.cover, {1, 1, 0}, t.row.classes, t.lifting));
  CHECK(oracle::MaximalIndepBruteforce(t.cover, t.row.classes, t.lifting) ==
        std::vector<ClassTuple>{{1, 0, 1}});
  // The exact dynamic check recovers it.
  const std::optional<IndepEnumeration> dyn =
      EnumerateIndepClassesDynamic(t.cover, t.row.classes, t.lifting, 1000);
  REQUIRE(dyn.has_value());
  REQUIRE(dyn->leaves.size() == 1);
  CHECK(dyn->leaves[0].tuple == ClassTuple{1, 0, 1});
  CHECK(IsIndependentTuple(t.cover, {1, 0, 1}, t.row.classes, t.lifting));
  CHECK_FALSE(IsIndependentTuple(t.cover, {1, 1, 0}, t.row.classes, t.lifting));
  CHECK_FALSE(EnumerateIndepClassesDynamic(t.cover, t.row.classes, t.lifting, 7)
                  .has_value());
}

TEST_CASE("no feasible jump gives the empty class") {
  const ClassedKnapsack w35 =
      ClassedKnapsack::FromKnapsack(Knapsack::Normalize({3, 3, 5, 5}, 8));
  const LiftingData l = ComputeLifting({2, 1}, w35);
  const JumpGeometry g = JumpGeometry::Build({2, 1}, w35.classes, l);
  const ClassTuple first = GreedyComplete(ClassTuple(2), 0, g, l);
  CHECK(first == ClassTuple{0, 0});
  CHECK_FALSE(NextMaximal(first, g, l).has_value());
  const IndepEnumeration e = EnumerateIndepClasses({2, 1}, w35.classes, l);
  REQUIRE(e.leaves.size() == 1);
  CHECK(e.leaves[0].tuple.IsZero());
  CHECK(e.leaves[0].maximal);
  CHECK(e.exact);
  CHECK_FALSE(oracle::IsIndependentExact({2, 1}, {0, 1}, w35.classes, l));

  const ClassedKnapsack small =
      ClassedKnapsack::FromKnapsack(Knapsack::Normalize({1, 1, 1, 2}, 2));
  const LiftingData l2 = ComputeLifting({1, 1}, small);
  const JumpGeometry g2 = JumpGeometry::Build({1, 1}, small.classes, l2);
  const ClassTuple f2 = GreedyComplete(ClassTuple(2), 0, g2, l2);
  CHECK(f2 == ClassTuple{0, 0});
  CHECK_FALSE(NextMaximal(f2, g2, l2).has_value());
}

TEST_CASE("single class search is exhausted immediately") {
  const ClassedKnapsack row =
      ClassedKnapsack::FromKnapsack(Knapsack::Normalize({4, 4, 4, 4, 4}, 9));
  const LiftingData l = ComputeLifting({3}, row);
  const JumpGeometry g = JumpGeometry::Build({3}, row.classes, l);
  const ClassTuple first = GreedyComplete(ClassTuple(1), 0, g, l);
  CHECK_FALSE(NextLeaf(first, g, l).has_value());
  CHECK_FALSE(NextMaximal(first, g, l).has_value());
}

TEST_CASE("search against exact independence on random rows") {
  std::mt19937_64 rng(3);
  int exact_covers = 0, inexact_covers = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Knapsack k = testing::RandomKnapsack(rng, 12, 3, 30);
    const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(k);
    for (const CoverClass& c : AllMinimalCovers(ck)) {
      const LiftingData l = ComputeLifting(c.tuple, ck);
      const JumpGeometry g = JumpGeometry::Build(c.tuple, ck.classes, l);
      for (size_t p = 1; p < g.order.size(); ++p) {
        CHECK_FALSE(g.SlopeLess(g.order[p], g.order[p - 1]));
      }
      const IndepEnumeration e = EnumerateIndepClasses(c.tuple, ck.classes, l);
      std::vector<ClassTuple> flagged;
      for (const IndepClass& leaf : e.leaves) {
        // Soundness.
        CHECK(oracle::IsIndependentExact(c.tuple, leaf.tuple, ck.classes, l));
        CHECK(PathFeasible(leaf.tuple, g, l));
        if (leaf.maximal) flagged.push_back(leaf.tuple);
        // Endpoints grow strictly with the tuple.
        for (int j = 0; j < ck.classes.sigma(); ++j) {
          if (leaf.tuple[j] == 0) continue;
          ClassTuple smaller = leaf.tuple;
          --smaller[j];
          const PathPoint a = Endpoint(smaller, g), b = Endpoint(leaf.tuple, g);
          CHECK(a.x < b.x);
          CHECK(a.y < b.y);
        }
      }
      std::sort(flagged.begin(), flagged.end());
      flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
      const std::vector<ClassTuple> truth =
          oracle::MaximalIndepBruteforce(c.tuple, ck.classes, l);
      if (e.exact) {
        ++exact_covers;
        CHECK(flagged == truth);
      } else {
        ++inexact_covers;
      }
      const std::optional<IndepEnumeration> dyn =
          EnumerateIndepClassesDynamic(c.tuple, ck.classes, l, 1 << 20);
      REQUIRE(dyn.has_value());
      std::vector<ClassTuple> exact;
      for (const IndepClass& leaf : dyn->leaves) exact.push_back(leaf.tuple);
      std::sort(exact.begin(), exact.end());
      CHECK(exact == truth);

      // Chained successor calls only visit leaves of the search.
      std::optional<ClassTuple> s = GreedyComplete(ClassTuple(ck.classes.sigma()), 0, g, l);
      while (s.has_value()) {
        bool found = false;
        for (const IndepClass& leaf : e.leaves) found = found || leaf.tuple == *s;
        CHECK(found);
        s = NextMaximal(*s, g, l);
      }
    }
  }
  CHECK(exact_covers > 0);
  MESSAGE("exact covers " << exact_covers << ", inexact " << inexact_covers);
}

}  // TEST_SUITE
