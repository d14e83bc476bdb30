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

#ifndef SPARSE_LCI_INDEP_ENUM_H_
#define SPARSE_LCI_INDEP_ENUM_H_

// Enumeration of independent-set classes for a fixed minimal cover.
//
// A subset S outside the cover is mapped to the point (x_S, y_S) with
// x_S = sum_{i in S} (pi_i + 1) and y_S = a(S). S is independent iff every
// subset Q of S lies strictly above the boundary y = mu(x) - delta. Adding an
// item of class j is a "jump" by (pi_j + 1, w_j). Paths are built in order of
// non-decreasing slope w_j / (pi_j + 1), which gives the lowest path through
// the subset endpoints; a path is accepted only if it is strictly above the
// boundary at every integer abscissa it crosses. This is sound but can miss
// independent sets whose lowest path dips to the boundary between two subset
// endpoints. Such rejections are tracked so callers know when the enumeration
// is known to be complete.

#include <cstdint>
#include <optional>
#include <vector>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/knapsack.h"

namespace sparse_lci {

struct JumpGeometry {
  std::vector<int> order;        // gamma: classes by non-decreasing slope
  std::vector<int64_t> jump_x;   // pi_j + 1
  std::vector<int64_t> jump_y;   // w_j
  std::vector<int> available;    // |W_j| - c_j

  static JumpGeometry Build(const ClassTuple& cover,
                            const WeightClasses& classes,
                            const LiftingData& lifting);

  int sigma() const { return static_cast<int>(order.size()); }
  // Exact slope comparison w_a/(pi_a+1) < w_b/(pi_b+1).
  bool SlopeLess(int a, int b) const;
};

struct PathPoint {
  int64_t x = 0;
  int64_t y = 0;
  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

enum class JumpVerdict {
  kAccepted,
  // The jump endpoint is on or below the boundary.
  kRejectedAtEndpoint,
  // The endpoint is strictly above, but an intermediate integer abscissa is
  // not. Independence of the extended set is then undecided.
  kRejectedInterior,
};

JumpVerdict ClassifyJump(PathPoint from, int j, const JumpGeometry& geometry,
                         const LiftingData& lifting);

// True iff the segment from `from` to `from + jump_j` is strictly above
// y = mu(x) - delta at x + 1, ..., x + pi_j + 1. Integer arithmetic only.
bool BoundaryOkJump(PathPoint from, int j, const JumpGeometry& geometry,
                    const LiftingData& lifting);

PathPoint Endpoint(const ClassTuple& s, const JumpGeometry& geometry);

// Walks the slope-ordered path of s and checks every jump.
bool PathFeasible(const ClassTuple& s, const JumpGeometry& geometry,
                  const LiftingData& lifting);

struct SearchStats {
  bool interior_rejection = false;
  int64_t jumps_tested = 0;
};

// Keeps the classes at gamma positions [0, fixed_prefix) and refills the rest
// greedily in slope order, taking items of each class while the jump is
// accepted and items remain. With fixed_prefix == 0 this yields the first
// independent set of the search.
ClassTuple GreedyComplete(ClassTuple s, int fixed_prefix,
                          const JumpGeometry& geometry,
                          const LiftingData& lifting,
                          SearchStats* stats = nullptr);

// One backtracking step of the depth-first search: decrement the last
// positive entry among gamma positions [0, sigma - 1) and refill greedily.
// Returns nullopt when no such entry exists.
std::optional<ClassTuple> NextLeaf(const ClassTuple& s,
                                   const JumpGeometry& geometry,
                                   const LiftingData& lifting,
                                   SearchStats* stats = nullptr);

// Repeats NextLeaf while the produced tuple is componentwise <= the input, so
// leaves dominated by s are skipped.
std::optional<ClassTuple> NextMaximal(const ClassTuple& s,
                                      const JumpGeometry& geometry,
                                      const LiftingData& lifting,
                                      SearchStats* stats = nullptr);

struct IndepClass {
  ClassTuple tuple;
  PathPoint endpoint;
  // No single item can be added without the path test failing. With
  // `exact` below this coincides with maximality under the exact criterion.
  bool maximal = false;
};

struct IndepEnumeration {
  std::vector<IndepClass> leaves;  // every depth-first leaf, in search order
  // True iff no jump was rejected at an interior point during the search; the
  // leaves then contain every maximal independent class.
  bool exact = true;
  int64_t jumps_tested = 0;

  std::vector<IndepClass> Maximal() const;
};

IndepEnumeration EnumerateIndepClasses(const ClassTuple& cover,
                                       const WeightClasses& classes,
                                       const LiftingData& lifting);

// Exact test of the independence criterion for one tuple: every non-zero
// q <= s has its endpoint strictly above the boundary.
bool IsIndependentTuple(const ClassTuple& cover, const ClassTuple& s,
                        const WeightClasses& classes,
                        const LiftingData& lifting);

// Exact dynamic check over the grid of class tuples s <= available: s is
// independent iff its endpoint is strictly above the boundary and every tuple
// one item smaller is independent. Returns the maximal independent tuples
// (all flagged maximal, exact = true), or nullopt when the grid has more than
// `max_grid` points.
std::optional<IndepEnumeration> EnumerateIndepClassesDynamic(
    const ClassTuple& cover, const WeightClasses& classes,
    const LiftingData& lifting, int64_t max_grid);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_INDEP_ENUM_H_
