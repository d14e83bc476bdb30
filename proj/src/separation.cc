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

#include "sparse_lci/separation.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "sparse_lci/status.h"

namespace sparse_lci {

std::vector<std::vector<int>> SortClassesByValue(const WeightClasses& classes,
                                                 std::span<const double> x) {
  std::vector<std::vector<int>> sorted(classes.sigma());
  for (int j = 0; j < classes.sigma(); ++j) {
    sorted[j] = classes.members(j);
    std::stable_sort(sorted[j].begin(), sorted[j].end(),
                     [&](int a, int b) { return x[a] < x[b]; });
  }
  return sorted;
}

namespace {

void CheckPair(const ClassTuple& cover, const ClassTuple& indep,
               const WeightClasses& classes) {
  classes.CheckWithinBounds(cover);
  classes.CheckWithinBounds(indep);
  for (int j = 0; j < classes.sigma(); ++j) {
    if (cover[j] + indep[j] > classes.size(j)) {
      throw LciError(ErrorCode::kTupleExceedsClass,
                     "cover " + cover.ToString() + " and independent set " +
                         indep.ToString() + " exceed class " +
                         std::to_string(j + 1));
    }
  }
}

Representative RepresentativeFromSorted(
    const ClassTuple& cover, const ClassTuple& indep,
    const LiftingData& lifting, const std::vector<std::vector<int>>& sorted) {
  Representative rep;
  for (int j = 0; j < static_cast<int>(sorted.size()); ++j) {
    const std::vector<int>& items = sorted[j];
    const int m = static_cast<int>(items.size());
    const int s = indep[j];
    const int c = cover[j];
    for (int r = m - s; r < m; ++r) rep.indep_items.push_back(items[r]);
    if (lifting.pi[j] >= 1) {
      for (int r = 0; r < c; ++r) rep.cover_items.push_back(items[r]);
    } else {
      for (int r = m - s - c; r < m - s; ++r) {
        rep.cover_items.push_back(items[r]);
      }
    }
  }
  std::sort(rep.cover_items.begin(), rep.cover_items.end());
  std::sort(rep.indep_items.begin(), rep.indep_items.end());
  return rep;
}

}  // namespace

Representative MaxRepresentative(const ClassTuple& cover,
                                 const ClassTuple& indep,
                                 const WeightClasses& classes,
                                 const LiftingData& lifting,
                                 std::span<const double> x) {
  CheckPair(cover, indep, classes);
  ValidatePoint(x, classes.num_items());
  return RepresentativeFromSorted(cover, indep, lifting,
                                  SortClassesByValue(classes, x));
}

std::vector<std::vector<int64_t>> NuCoefficients(const ClassTuple& cover,
                                                 const ClassTuple& indep,
                                                 const WeightClasses& classes,
                                                 const LiftingData& lifting) {
  CheckPair(cover, indep, classes);
  std::vector<std::vector<int64_t>> nu(classes.sigma());
  for (int j = 0; j < classes.sigma(); ++j) {
    const int m = classes.size(j);
    const int c = cover[j];
    const int s = indep[j];
    const int64_t pi = lifting.pi[j];
    nu[j].assign(m, 0);
    for (int r = 0; r < m; ++r) {
      if (pi >= 1) {
        if (r < c) {
          nu[j][r] = 1;
        } else if (r < m - s) {
          nu[j][r] = pi;
        } else {
          nu[j][r] = pi + 1;
        }
      } else {
        nu[j][r] = (r >= m - c - s) ? 1 : 0;
      }
    }
  }
  return nu;
}

LiftedCut AssembleCut(const Representative& rep, const ClassTuple& cover,
                      const ClassTuple& indep, const WeightClasses& classes,
                      const LiftingData& lifting, bool exact_lifting) {
  LiftedCut cut;
  cut.coeffs.resize(classes.num_items());
  for (int i = 0; i < classes.num_items(); ++i) {
    cut.coeffs[i] = lifting.pi[classes.class_of(i)];
  }
  for (int i : rep.indep_items) cut.coeffs[i] += 1;
  for (int i : rep.cover_items) cut.coeffs[i] = 1;
  cut.rhs = cover.Cardinality() - 1;
  cut.cover = cover;
  cut.indep = indep;
  cut.exact_lifting = exact_lifting;
  return cut;
}

LiftedCut GubStrengthen(const LiftedCut& cut, std::span<const int> group_of,
                        const Representative& rep,
                        const WeightClasses& classes,
                        const LiftingData& lifting) {
  LiftedCut result = cut;
  // (class, group) pairs touched by C u S.
  std::vector<std::pair<int, int>> touched;
  auto mark = [&](int i) {
    touched.emplace_back(classes.class_of(i), group_of[i]);
  };
  for (int i : rep.cover_items) mark(i);
  for (int i : rep.indep_items) mark(i);
  std::sort(touched.begin(), touched.end());

  std::vector<bool> in_rep(classes.num_items(), false);
  for (int i : rep.cover_items) in_rep[i] = true;
  for (int i : rep.indep_items) in_rep[i] = true;

  for (int i = 0; i < classes.num_items(); ++i) {
    const int j = classes.class_of(i);
    if (lifting.pi[j] != 0 || in_rep[i] || result.coeffs[i] != 0) continue;
    if (std::binary_search(touched.begin(), touched.end(),
                           std::make_pair(j, group_of[i]))) {
      result.coeffs[i] = 1;
      result.gub_strengthened = true;
    }
  }
  return result;
}

Rational Violation(const LiftedCut& cut, std::span<const double> x) {
  if (x.size() != cut.coeffs.size()) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "point and cut dimensions differ");
  }
  const ScaledPoint point(x, {});
  BigInt lhs = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (cut.coeffs[i] != 0) lhs += point.numerator(i) * cut.coeffs[i];
  }
  return point.Unscale(lhs - point.ScaleInteger(cut.rhs));
}

SeparationResult Separate(const Knapsack& knapsack, std::span<const double> x,
                          const GubPartition* gubs,
                          const SeparationOptions& opts) {
  using Clock = std::chrono::steady_clock;
  const Clock::time_point start = Clock::now();
  if (!(opts.tolerance > 0.0)) {
    throw LciError(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const int n = knapsack.n();
  ValidatePoint(x, n);
  const ClassedKnapsack classed = ClassedKnapsack::FromKnapsack(knapsack);
  const WeightClasses& classes = classed.classes;
  std::vector<int> group_of;
  if (gubs != nullptr) group_of = ValidateGubs(*gubs, n);

  const std::vector<std::vector<int>> sorted = SortClassesByValue(classes, x);
  const double tolerance[] = {opts.tolerance};
  const ScaledPoint point(x, tolerance);
  const BigInt scaled_tolerance = point.Scale(opts.tolerance);

  // prefix[j][r] = sum of the r smallest scaled values of class j.
  std::vector<std::vector<BigInt>> prefix(classes.sigma());
  for (int j = 0; j < classes.sigma(); ++j) {
    prefix[j].assign(sorted[j].size() + 1, BigInt(0));
    for (size_t r = 0; r < sorted[j].size(); ++r) {
      prefix[j][r + 1] = prefix[j][r] + point.numerator(sorted[j][r]);
    }
  }

  SeparationResult result;
  std::map<std::pair<std::vector<int64_t>, int64_t>, LiftedCut> unique;

  auto consider = [&](LiftedCut cut, const BigInt& scaled_violation) {
    cut.violation = point.Unscale(scaled_violation);
    auto key = std::make_pair(cut.coeffs, cut.rhs);
    unique.try_emplace(std::move(key), std::move(cut));
  };

  CoverCursor cursor(classed, opts.order);
  while (std::optional<CoverClass> cover = cursor.Next()) {
    if (opts.deadline_ms > 0) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          Clock::now() - start);
      if (elapsed.count() >= opts.deadline_ms) {
        result.stats.truncated = true;
        break;
      }
    }
    ++result.stats.cover_classes;
    const LiftingData lifting = ComputeLifting(cover->tuple, classed);
    IndepEnumeration indep =
        EnumerateIndepClasses(cover->tuple, classes, lifting);
    if (!indep.exact) {
      ++result.stats.inexact_covers;
      if (opts.exact_fallback) {
        std::optional<IndepEnumeration> dynamic = EnumerateIndepClassesDynamic(
            cover->tuple, classes, lifting, opts.dynamic_grid_limit);
        if (dynamic.has_value()) {
          indep = std::move(*dynamic);
          ++result.stats.dynamic_covers;
        }
      }
    }
    const BigInt scaled_rhs = point.ScaleInteger(cover->rhs);

    for (const IndepClass& leaf : indep.leaves) {
      if (!leaf.maximal) continue;
      ++result.stats.class_pairs;
      const ClassTuple& s = leaf.tuple;
      if (gubs == nullptr) {
        BigInt lhs = 0;
        for (int j = 0; j < classes.sigma(); ++j) {
          const std::vector<BigInt>& p = prefix[j];
          const int m = classes.size(j);
          const int c = cover->tuple[j];
          const int64_t pi = lifting.pi[j];
          if (pi >= 1) {
            lhs += p[c];
            lhs += (p[m - s[j]] - p[c]) * pi;
            lhs += (p[m] - p[m - s[j]]) * (pi + 1);
          } else {
            lhs += p[m] - p[m - c - s[j]];
          }
        }
        BigInt excess = lhs - scaled_rhs;
        if (excess > scaled_tolerance) {
          const Representative rep =
              RepresentativeFromSorted(cover->tuple, s, lifting, sorted);
          consider(AssembleCut(rep, cover->tuple, s, classes, lifting,
                               indep.exact),
                   excess);
        }
      } else {
        const Representative rep =
            RepresentativeFromSorted(cover->tuple, s, lifting, sorted);
        LiftedCut cut = GubStrengthen(
            AssembleCut(rep, cover->tuple, s, classes, lifting, indep.exact),
            group_of, rep, classes, lifting);
        BigInt lhs = 0;
        for (int i = 0; i < n; ++i) {
          if (cut.coeffs[i] != 0) lhs += point.numerator(i) * cut.coeffs[i];
        }
        BigInt excess = lhs - scaled_rhs;
        if (excess > scaled_tolerance) consider(std::move(cut), excess);
      }
    }
  }

  result.cuts.reserve(unique.size());
  for (auto& [key, cut] : unique) result.cuts.push_back(std::move(cut));
  std::stable_sort(result.cuts.begin(), result.cuts.end(),
                   [](const LiftedCut& a, const LiftedCut& b) {
                     if (a.violation != b.violation) {
                       return a.violation > b.violation;
                     }
                     return a.coeffs < b.coeffs;
                   });
  if (opts.max_cuts > 0 && static_cast<int>(result.cuts.size()) > opts.max_cuts) {
    result.cuts.resize(opts.max_cuts);
  }
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

}  // namespace sparse_lci
