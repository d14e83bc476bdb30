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

#ifndef SPARSE_LCI_SEPARATION_H_
#define SPARSE_LCI_SEPARATION_H_

// Exact separation of lifted cover inequalities over equivalence classes.
//
// A class pair (cover tuple c, independent tuple s) stands for all pairs of
// disjoint item sets (C, S) with these per-class cardinalities. For a point
// x, the member with the largest left-hand side is obtained per weight class
// after sorting x on the class: S takes the largest values, and C takes the
// smallest remaining values when pi_j >= 1 (cover items get coefficient 1 <=
// pi_j) or the largest remaining values when pi_j = 0.

#include <cstdint>
#include <span>
#include <vector>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/exact_point.h"
#include "sparse_lci/indep_enum.h"
#include "sparse_lci/knapsack.h"

namespace sparse_lci {

struct LiftedCut {
  std::vector<int64_t> coeffs;  // alpha, one per item
  int64_t rhs = 0;              // |C| - 1
  ClassTuple cover;
  ClassTuple indep;
  bool gub_strengthened = false;
  // False when the independent-set search for this cover was not known to be
  // complete; the cut is valid but facet-defining is not claimed.
  bool exact_lifting = true;
  Rational violation = 0;
};

struct Representative {
  std::vector<int> cover_items;  // ascending
  std::vector<int> indep_items;  // ascending
};

// Per-class ordering of items by ascending x, ties by ascending index.
std::vector<std::vector<int>> SortClassesByValue(const WeightClasses& classes,
                                                 std::span<const double> x);

// Throws kTupleExceedsClass if c_j + s_j > |W_j| for some class.
Representative MaxRepresentative(const ClassTuple& cover,
                                 const ClassTuple& indep,
                                 const WeightClasses& classes,
                                 const LiftingData& lifting,
                                 std::span<const double> x);

// nu[j][r] is the coefficient of the item of rank r (0-based, ascending x)
// in class j of a most violated member of the class pair.
std::vector<std::vector<int64_t>> NuCoefficients(const ClassTuple& cover,
                                                 const ClassTuple& indep,
                                                 const WeightClasses& classes,
                                                 const LiftingData& lifting);

// alpha = 1 on C, pi_j + 1 on S, pi_j elsewhere.
LiftedCut AssembleCut(const Representative& rep, const ClassTuple& cover,
                      const ClassTuple& indep, const WeightClasses& classes,
                      const LiftingData& lifting, bool exact_lifting);

// For classes with pi_j = 0, raises 0 -> 1 the coefficient of every item of
// W_j \ (C u S) that shares a GUB group with an item of W_j n (C u S).
// `group_of` comes from ValidateGubs.
LiftedCut GubStrengthen(const LiftedCut& cut, std::span<const int> group_of,
                        const Representative& rep,
                        const WeightClasses& classes,
                        const LiftingData& lifting);

// sum_i alpha_i x_i - rhs, exactly.
Rational Violation(const LiftedCut& cut, std::span<const double> x);

struct SeparationOptions {
  double tolerance = 1e-9;
  int max_cuts = 0;          // 0: unlimited
  int64_t deadline_ms = 0;   // 0: none
  CoverOrder order = CoverOrder::kForward;
  // When the jump search of a cover is not known to be complete, redo that
  // cover with the exact dynamic check over class tuples, provided the tuple
  // grid has at most `dynamic_grid_limit` points. Disable to keep the
  // conservative search only.
  bool exact_fallback = true;
  int64_t dynamic_grid_limit = int64_t{1} << 22;
};

struct SeparationStats {
  int64_t cover_classes = 0;
  int64_t class_pairs = 0;
  // Covers whose jump search had an interior rejection.
  int64_t inexact_covers = 0;
  // Of those, covers settled by the exact dynamic check.
  int64_t dynamic_covers = 0;
  double elapsed_ms = 0.0;
  // The deadline fired; reported cuts are still valid and violated.
  bool truncated = false;
};

struct SeparationResult {
  // Sorted by descending violation, then lexicographically by coefficients;
  // identical (coeffs, rhs) are reported once.
  std::vector<LiftedCut> cuts;
  SeparationStats stats;
};

// Scans every (minimal cover class, independent class) pair and reports the
// maximum-violation member of each pair whose violation exceeds
// opts.tolerance. When `gubs` is non-null the representative of every pair is
// GUB-strengthened before its violation is measured.
SeparationResult Separate(const Knapsack& knapsack, std::span<const double> x,
                          const GubPartition* gubs = nullptr,
                          const SeparationOptions& opts = {});

}  // namespace sparse_lci

#endif  // SPARSE_LCI_SEPARATION_H_
