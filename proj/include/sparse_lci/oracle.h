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

#ifndef SPARSE_LCI_ORACLE_H_
#define SPARSE_LCI_ORACLE_H_

// Brute-force ground truth over explicit item subsets. Nothing here reuses the
// class-level enumeration, lifting tables or jump search of the library; the
// only shared pieces are the input types and exact point promotion.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/exact_point.h"
#include "sparse_lci/knapsack.h"

namespace sparse_lci::oracle {

inline constexpr int kMaxCoverItems = 20;
inline constexpr int kMaxFeasibleItems = 25;
inline constexpr int kMaxSeparationItems = 20;
inline constexpr int64_t kMaxTupleGrid = 1000000;

// Class tuples of all minimal covers, sorted (std::less on ClassTuple).
// Throws kTooLarge above kMaxCoverItems.
std::vector<ClassTuple> MinimalCoversBruteforce(const ClassedKnapsack& knapsack);

// Tests sum_j q_j w_j > mu(sum_j q_j (pi_j + 1)) - delta for every non-zero
// q <= s. `lifting` supplies mu, delta and pi.
bool IsIndependentExact(const ClassTuple& cover, const ClassTuple& s,
                        const WeightClasses& classes,
                        const LiftingData& lifting);

// All maximal independent tuples (sorted). Throws kTooLarge if the tuple
// grid prod_j (|W_j| - c_j + 1) exceeds kMaxTupleGrid.
std::vector<ClassTuple> MaximalIndepBruteforce(const ClassTuple& cover,
                                               const WeightClasses& classes,
                                               const LiftingData& lifting);

// Every binary x with weights.x <= capacity (and x(L) <= 1 for each group L
// when `group_of` is non-empty) satisfies coeffs.x <= rhs.
bool CutValid(std::span<const int64_t> coeffs, int64_t rhs,
              std::span<const int64_t> weights, int64_t capacity,
              std::span<const int> group_of = {});

// Affine rank of the feasible binary points tight at the cut, i.e. the rank
// of the vectors (x, 1). The cut defines a facet of the knapsack polytope iff
// the rank equals n. Throws kInvalidArgument for an invalid cut and kTooLarge
// above kMaxFeasibleItems.
int FacetRank(std::span<const int64_t> coeffs, int64_t rhs,
              std::span<const int64_t> weights, int64_t capacity);

struct ExplicitCut {
  std::vector<int64_t> coeffs;
  int64_t rhs = 0;
  uint32_t cover_mask = 0;
  uint32_t indep_mask = 0;
  Rational violation = 0;
};

// Enumerates every minimal cover C and every maximal independent S as item
// sets, forms the lifted cover inequality and returns the most violated one
// (the first found among equals). Throws kTooLarge above kMaxSeparationItems.
std::optional<ExplicitCut> SeparateBruteforce(const Knapsack& knapsack,
                                              std::span<const double> x);

// Most violated member (C', S') of the class pair (cover, indep) by explicit
// enumeration of all disjoint set pairs with the given class cardinalities.
ExplicitCut BestClassMember(const ClassTuple& cover, const ClassTuple& indep,
                            const WeightClasses& classes,
                            const LiftingData& lifting,
                            std::span<const double> x);

}  // namespace sparse_lci::oracle

#endif  // SPARSE_LCI_ORACLE_H_
