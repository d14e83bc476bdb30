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

#include <random>
#include <vector>

#include "doctest.h"
#include "sparse_lci/cover_enum.h"
#include "sparse_lci/oracle.h"
#include "sparse_lci/status.h"
#include "test_util.h"

using namespace sparse_lci;
using sparse_lci::testing::CodeOf;

namespace {

ClassedKnapsack Classed(std::vector<int64_t> w, int64_t capacity) {
  return ClassedKnapsack::FromKnapsack(Knapsack::Normalize(std::move(w), capacity));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("minimal covers by subsets") {
  CHECK(oracle::MinimalCoversBruteforce(Classed({3, 3, 5, 5}, 8)) ==
        std::vector<ClassTuple>{{0, 2}, {2, 1}});
  CHECK(oracle::MinimalCoversBruteforce(Classed({1, 1, 1, 1, 1, 2}, 3)) ==
        std::vector<ClassTuple>{{2, 1}, {4, 0}});
  CHECK(oracle::MinimalCoversBruteforce(Classed({2, 3, 4}, 7)) ==
        std::vector<ClassTuple>{{1, 1, 1}});
  CHECK(CodeOf([] { oracle::MinimalCoversBruteforce(Classed(std::vector<int64_t>(21, 1), 5)); }) ==
        ErrorCode::kTooLarge);
}

TEST_CASE("exact independence") {
  const std::vector<int64_t> raw = {1, 3, 3, 3, 4};
  const ClassedKnapsack row = ClassedKnapsack::FromRawRow(raw, 3);
  const LiftingData l = ComputeLifting({0, 2, 0}, row);
  CHECK(oracle::IsIndependentExact({0, 2, 0}, {0, 0, 0}, row.classes, l));
  CHECK(oracle::IsIndependentExact({0, 2, 0}, {1, 0, 1}, row.classes, l));
  CHECK_FALSE(oracle::IsIndependentExact({0, 2, 0}, {1, 1, 0}, row.classes, l));
  CHECK(oracle::MaximalIndepBruteforce({0, 2, 0}, row.classes, l) ==
        std::vector<ClassTuple>{{1, 0, 1}});

  const ClassedKnapsack w35 = Classed({3, 3, 5, 5}, 8);
  const LiftingData lw = ComputeLifting({2, 1}, w35);
  CHECK_FALSE(oracle::IsIndependentExact({2, 1}, {0, 1}, w35.classes, lw));
  CHECK(oracle::MaximalIndepBruteforce({2, 1}, w35.classes, lw) ==
        std::vector<ClassTuple>{{0, 0}});
  // Cover using every item.
  const ClassedKnapsack all = Classed({2, 3, 4}, 7);
  const LiftingData la = ComputeLifting({1, 1, 1}, all);
  CHECK(oracle::MaximalIndepBruteforce({1, 1, 1}, all.classes, la) ==
        std::vector<ClassTuple>{{0, 0, 0}});
}

TEST_CASE("validity and facets") {
  const std::vector<int64_t> a = {1, 1, 1, 2};
  const std::vector<int64_t> lifted = {1, 1, 1, 2};
  CHECK(oracle::CutValid(lifted, 2, a, 2));
  CHECK(oracle::FacetRank(lifted, 2, a, 2) == 4);
  const std::vector<int64_t> plain = {1, 1, 1, 0};
  CHECK(oracle::CutValid(plain, 2, a, 2));
  CHECK(oracle::FacetRank(plain, 2, a, 2) < 4);
  CHECK(oracle::CutValid(lifted, 5, a, 2));
  // A non-cover {1, 2} gives an invalid "cover inequality".
  const std::vector<int64_t> fake = {1, 1, 0, 0};
  CHECK_FALSE(oracle::CutValid(fake, 1, a, 2));
  CHECK(CodeOf([&] { oracle::FacetRank(fake, 1, a, 2); }) == ErrorCode::kInvalidArgument);
  const std::vector<int64_t> ones(26, 1);
  CHECK(CodeOf([&] { oracle::CutValid(ones, 26, ones, 3); }) == ErrorCode::kTooLarge);

  // GUB restriction.
  const std::vector<int> groups = {0, 0, 1, 2};
  const std::vector<int64_t> gub_cut = {1, 1, 0, 1};
  CHECK(oracle::CutValid(gub_cut, 1, a, 2, groups));
  CHECK_FALSE(oracle::CutValid(gub_cut, 1, a, 2));
}

TEST_CASE("exhaustive separation") {
  const Knapsack k = Knapsack::Normalize({3, 3, 5, 5}, 8);
  const auto best = oracle::SeparateBruteforce(k, std::vector<double>{0.9, 0.4, 0.8, 0.7});
  REQUIRE(best.has_value());
  CHECK(ToDouble(best->violation) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(best->coeffs == std::vector<int64_t>{1, 1, 1, 1});
  CHECK(best->rhs == 2);
  const auto zero = oracle::SeparateBruteforce(k, std::vector<double>(4, 0.0));
  REQUIRE(zero.has_value());
  CHECK(zero->violation <= 0);
  const auto vertex = oracle::SeparateBruteforce(k, std::vector<double>{0, 1, 0, 1});
  REQUIRE(vertex.has_value());
  CHECK(vertex->violation <= 0);
}

TEST_CASE("explicit class member search") {
  const ClassedKnapsack ck = Classed({3, 3, 5, 5}, 8);
  const LiftingData l = ComputeLifting({2, 1}, ck);
  const oracle::ExplicitCut c = oracle::BestClassMember({2, 1}, {0, 0}, ck.classes, l,
                                                        std::vector<double>{0.9, 0.4, 0.8, 0.7});
  CHECK(c.cover_mask == 0b1011u);
  CHECK(c.indep_mask == 0u);
  CHECK(c.coeffs == std::vector<int64_t>{1, 1, 1, 1});
}

TEST_CASE("every minimal cover is minimal and lifted cuts are valid") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const Knapsack k = testing::RandomKnapsack(rng, 10, 3, 25);
    const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(k);
    for (const ClassTuple& c : oracle::MinimalCoversBruteforce(ck)) {
      CHECK(IsMinimalCover(c, ck));
      const LiftingData l = ComputeLifting(c, ck);
      for (const ClassTuple& s : oracle::MaximalIndepBruteforce(c, ck.classes, l)) {
        CHECK(oracle::IsIndependentExact(c, s, ck.classes, l));
        const oracle::ExplicitCut cut = oracle::BestClassMember(
            c, s, ck.classes, l, testing::RandomFractional(rng, k.n()));
        CHECK(oracle::CutValid(cut.coeffs, cut.rhs, k.weights(), k.capacity()));
        // Maximal lifted cover inequalities are facets.
        CHECK(oracle::FacetRank(cut.coeffs, cut.rhs, k.weights(), k.capacity()) == k.n());
      }
    }
  }
}

}  // TEST_SUITE
