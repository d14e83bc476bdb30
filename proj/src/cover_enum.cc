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

#include "sparse_lci/cover_enum.h"

#include <algorithm>

#include "sparse_lci/checked_math.h"
#include "sparse_lci/status.h"

namespace sparse_lci {

CoverClass CoverClass::FromTuple(ClassTuple tuple,
                                 const WeightClasses& classes) {
  CoverClass cover;
  cover.weight = TupleWeight(tuple, classes);
  cover.cardinality = tuple.Cardinality();
  cover.rhs = cover.cardinality - 1;
  cover.tuple = std::move(tuple);
  return cover;
}

bool IsCover(const ClassTuple& t, const ClassedKnapsack& knapsack) {
  return TupleWeight(t, knapsack.classes) > knapsack.capacity;
}

bool IsMinimalCover(const ClassTuple& t, const ClassedKnapsack& knapsack) {
  const int64_t weight = TupleWeight(t, knapsack.classes);
  if (weight <= knapsack.capacity) return false;
  for (int j = 0; j < t.sigma(); ++j) {
    if (t[j] > 0) {
      return weight - knapsack.classes.weight(j) <= knapsack.capacity;
    }
  }
  return false;
}

std::optional<CoverClass> FirstMinimalCover(const ClassedKnapsack& knapsack) {
  const WeightClasses& classes = knapsack.classes;
  const int sigma = classes.sigma();
  // full_below[j] = weight of all items in classes 0..j-1.
  std::vector<int64_t> full_below(sigma + 1, 0);
  for (int j = 0; j < sigma; ++j) {
    full_below[j + 1] =
        CheckedAdd(full_below[j], CheckedMul(classes.size(j), classes.weight(j)));
  }
  if (full_below[sigma] <= knapsack.capacity) return std::nullopt;

  const int64_t target = CheckedAdd(knapsack.capacity, 1);
  ClassTuple tuple(sigma);
  int64_t fixed = 0;  // weight of the already decided heavier classes
  for (int j = sigma - 1; j >= 0; --j) {
    const int64_t missing = target - fixed - full_below[j];
    const int64_t needed =
        missing <= 0 ? 0 : CeilDiv(missing, classes.weight(j));
    tuple[j] = static_cast<int>(needed);
    fixed = CheckedAdd(fixed, CheckedMul(needed, classes.weight(j)));
  }
  return CoverClass::FromTuple(std::move(tuple), classes);
}

CoverCursor::CoverCursor(const ClassedKnapsack& knapsack, CoverOrder order)
    : knapsack_(&knapsack) {
  const WeightClasses& classes = knapsack.classes;
  const int sigma = classes.sigma();
  if (order == CoverOrder::kAuto) {
    const int64_t total = TupleWeight(classes.Sizes(), classes);
    reversed_ = total <= CheckedMul(2, knapsack.capacity);
  } else {
    reversed_ = order == CoverOrder::kReverse;
  }
  const std::optional<CoverClass> first = FirstMinimalCover(knapsack);
  if (!first.has_value()) {
    done_ = true;
    return;
  }
  prefix_.assign(std::max(sigma - 1, 0), 0);
  for (int j = 1; j < sigma; ++j) {
    prefix_[j - 1] = reversed_ ? classes.size(j) : first->tuple[j];
  }
}

bool CoverCursor::Advance() {
  const WeightClasses& classes = knapsack_->classes;
  for (size_t p = 0; p < prefix_.size(); ++p) {
    const int limit = classes.size(static_cast<int>(p) + 1);
    if (!reversed_) {
      if (prefix_[p] < limit) {
        ++prefix_[p];
        return true;
      }
      prefix_[p] = 0;
    } else {
      if (prefix_[p] > 0) {
        --prefix_[p];
        return true;
      }
      prefix_[p] = limit;
    }
  }
  return false;
}

std::optional<CoverClass> CoverCursor::Next() {
  const WeightClasses& classes = knapsack_->classes;
  const int64_t capacity = knapsack_->capacity;
  while (!done_) {
    ++steps_;
    int64_t prefix_weight = 0;
    for (size_t p = 0; p < prefix_.size(); ++p) {
      prefix_weight = CheckedAdd(
          prefix_weight,
          CheckedMul(prefix_[p], classes.weight(static_cast<int>(p) + 1)));
    }
    const int64_t missing = capacity + 1 - prefix_weight;
    const int64_t c1 = missing <= 0 ? 0 : CeilDiv(missing, classes.weight(0));

    std::optional<CoverClass> found;
    if (c1 <= classes.size(0)) {
      ClassTuple candidate(classes.sigma());
      candidate[0] = static_cast<int>(c1);
      for (size_t p = 0; p < prefix_.size(); ++p) {
        candidate[static_cast<int>(p) + 1] = prefix_[p];
      }
      if (IsMinimalCover(candidate, *knapsack_)) {
        found = CoverClass::FromTuple(std::move(candidate), classes);
      }
    }
    if (!Advance()) done_ = true;
    if (found.has_value()) return found;
  }
  return std::nullopt;
}

std::vector<CoverClass> AllMinimalCovers(const ClassedKnapsack& knapsack,
                                         CoverOrder order) {
  std::vector<CoverClass> covers;
  CoverCursor cursor(knapsack, order);
  while (std::optional<CoverClass> cover = cursor.Next()) {
    covers.push_back(std::move(*cover));
  }
  return covers;
}

int64_t LiftingData::Mu(int64_t h) const {
  if (h <= 0) return 0;
  return mu[std::min<int64_t>(h, cover_size)];
}

LiftingData ComputeLifting(const ClassTuple& cover,
                           const ClassedKnapsack& knapsack) {
  const WeightClasses& classes = knapsack.classes;
  classes.CheckWithinBounds(cover);
  LiftingData lifting;
  lifting.cover_size = cover.Cardinality();
  lifting.mu.assign(static_cast<size_t>(classes.num_items()) + 1, 0);
  int h = 0;
  for (int j = classes.sigma() - 1; j >= 0; --j) {
    for (int c = 0; c < cover[j]; ++c, ++h) {
      lifting.mu[h + 1] = CheckedAdd(lifting.mu[h], classes.weight(j));
    }
  }
  for (size_t k = h + 1; k < lifting.mu.size(); ++k) lifting.mu[k] = lifting.mu[h];

  lifting.delta = lifting.mu[h] - knapsack.capacity;
  if (lifting.delta < 1) {
    throw LciError(ErrorCode::kInvalidArgument,
                   "tuple " + cover.ToString() + " is not a cover");
  }
  lifting.pi.assign(classes.sigma(), 0);
  for (int j = 0; j < classes.sigma(); ++j) {
    const int64_t w = classes.weight(j);
    if (w >= lifting.mu[h]) {
      throw LciError(ErrorCode::kInvalidArgument,
                     "class weight " + std::to_string(w) +
                         " is not below the cover weight; lifting unbounded");
    }
    int pi = 0;
    while (pi + 1 <= lifting.cover_size && lifting.mu[pi + 1] <= w) ++pi;
    lifting.pi[j] = pi;
  }
  return lifting;
}

}  // namespace sparse_lci
