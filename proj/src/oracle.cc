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

#include "sparse_lci/oracle.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "sparse_lci/status.h"

namespace sparse_lci::oracle {
namespace {

void Guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw LciError(ErrorCode::kTooLarge,
                   std::string(what) + ": " + std::to_string(n) +
                       " items exceed the brute-force limit of " +
                       std::to_string(limit));
  }
}

// Calls visit(x) for every binary x with weights.x <= capacity and at most
// one item per group. Returning false from visit stops the scan.
void ForEachFeasible(std::span<const int64_t> weights, int64_t capacity,
                     std::span<const int> group_of,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(weights.size());
  std::vector<int> x(n, 0);
  std::vector<int> group_used;
  if (!group_of.empty()) {
    group_used.assign(*std::max_element(group_of.begin(), group_of.end()) + 1,
                      0);
  }
  bool stop = false;
  std::function<void(int, int64_t)> rec = [&](int i, int64_t load) {
    if (stop) return;
    if (i == n) {
      if (!visit(x)) stop = true;
      return;
    }
    rec(i + 1, load);
    if (load + weights[i] > capacity) return;
    if (!group_of.empty() && group_used[group_of[i]] > 0) return;
    x[i] = 1;
    if (!group_of.empty()) ++group_used[group_of[i]];
    rec(i + 1, load + weights[i]);
    if (!group_of.empty()) --group_used[group_of[i]];
    x[i] = 0;
  };
  rec(0, 0);
}

BigInt ScaledDot(std::span<const int64_t> coeffs, const ScaledPoint& point) {
  BigInt sum = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) sum += point.numerator(static_cast<int>(i)) * coeffs[i];
  }
  return sum;
}

}  // namespace

std::vector<ClassTuple> MinimalCoversBruteforce(
    const ClassedKnapsack& knapsack) {
  const WeightClasses& classes = knapsack.classes;
  const int n = classes.num_items();
  Guard(n, kMaxCoverItems, "minimal cover enumeration");
  std::set<ClassTuple> found;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int64_t weight = 0;
    int64_t lightest = -1;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        const int64_t a = classes.weight(classes.class_of(i));
        weight += a;
        if (lightest < 0 || a < lightest) lightest = a;
      }
    }
    if (weight <= knapsack.capacity) continue;
    if (weight - lightest > knapsack.capacity) continue;
    ClassTuple t(classes.sigma());
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) ++t[classes.class_of(i)];
    }
    found.insert(t);
  }
  return {found.begin(), found.end()};
}

bool IsIndependentExact(const ClassTuple& cover, const ClassTuple& s,
                        const WeightClasses& classes,
                        const LiftingData& lifting) {
  const int sigma = classes.sigma();
  for (int j = 0; j < sigma; ++j) {
    if (s[j] < 0 || cover[j] + s[j] > classes.size(j)) {
      throw LciError(ErrorCode::kTupleExceedsClass,
                     "independent tuple " + s.ToString() +
                         " exceeds the items outside the cover");
    }
  }
  ClassTuple q(sigma);
  while (true) {
    int j = 0;
    while (j < sigma && q[j] == s[j]) q[j++] = 0;
    if (j == sigma) return true;
    ++q[j];
    int64_t x = 0;
    int64_t y = 0;
    for (int k = 0; k < sigma; ++k) {
      x += static_cast<int64_t>(q[k]) * (lifting.pi[k] + 1);
      y += q[k] * classes.weight(k);
    }
    if (!(y > lifting.Mu(x) - lifting.delta)) return false;
  }
}

std::vector<ClassTuple> MaximalIndepBruteforce(const ClassTuple& cover,
                                               const WeightClasses& classes,
                                               const LiftingData& lifting) {
  const int sigma = classes.sigma();
  std::vector<int> avail(sigma);
  std::vector<int64_t> stride(sigma);
  int64_t total = 1;
  for (int j = 0; j < sigma; ++j) {
    avail[j] = classes.size(j) - cover[j];
    stride[j] = total;
    total *= avail[j] + 1;
    if (total > kMaxTupleGrid) {
      throw LciError(ErrorCode::kTooLarge, "independent tuple grid too large");
    }
  }
  // Mixed-radix indexing: every sub-tuple has a smaller index.
  std::vector<char> indep(total, 0);
  std::vector<ClassTuple> tuples(total);
  for (int64_t idx = 0; idx < total; ++idx) {
    ClassTuple q(sigma);
    int64_t rest = idx;
    for (int j = 0; j < sigma; ++j) {
      q[j] = static_cast<int>(rest % (avail[j] + 1));
      rest /= avail[j] + 1;
    }
    tuples[idx] = q;
    if (idx == 0) {
      indep[idx] = 1;
      continue;
    }
    bool ok = true;
    for (int j = 0; j < sigma && ok; ++j) {
      if (q[j] > 0 && !indep[idx - stride[j]]) ok = false;
    }
    if (ok) {
      int64_t x = 0;
      int64_t y = 0;
      for (int j = 0; j < sigma; ++j) {
        x += static_cast<int64_t>(q[j]) * (lifting.pi[j] + 1);
        y += q[j] * classes.weight(j);
      }
      ok = y > lifting.Mu(x) - lifting.delta;
    }
    indep[idx] = ok ? 1 : 0;
  }
  std::vector<ClassTuple> maximal;
  for (int64_t idx = 0; idx < total; ++idx) {
    if (!indep[idx]) continue;
    bool extendable = false;
    for (int j = 0; j < sigma && !extendable; ++j) {
      if (tuples[idx][j] < avail[j] && indep[idx + stride[j]]) extendable = true;
    }
    if (!extendable) maximal.push_back(tuples[idx]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

bool CutValid(std::span<const int64_t> coeffs, int64_t rhs,
              std::span<const int64_t> weights, int64_t capacity,
              std::span<const int> group_of) {
  const int n = static_cast<int>(weights.size());
  Guard(n, kMaxFeasibleItems, "cut validity check");
  if (static_cast<int>(coeffs.size()) != n ||
      (!group_of.empty() && static_cast<int>(group_of.size()) != n)) {
    throw LciError(ErrorCode::kDimensionMismatch, "cut and knapsack differ");
  }
  bool valid = true;
  ForEachFeasible(weights, capacity, group_of, [&](const std::vector<int>& x) {
    int64_t lhs = 0;
    for (int i = 0; i < n; ++i) lhs += coeffs[i] * x[i];
    if (lhs > rhs) valid = false;
    return valid;
  });
  return valid;
}

int FacetRank(std::span<const int64_t> coeffs, int64_t rhs,
              std::span<const int64_t> weights, int64_t capacity) {
  const int n = static_cast<int>(weights.size());
  Guard(n, kMaxFeasibleItems, "facet rank");
  if (!CutValid(coeffs, rhs, weights, capacity)) {
    throw LciError(ErrorCode::kInvalidArgument,
                   "facet rank requested for an invalid cut");
  }
  const bool nonzero =
      std::any_of(coeffs.begin(), coeffs.end(), [](int64_t c) { return c != 0; });
  // Tight points lie on a hyperplane of R^{n+1}, so n is the maximum rank.
  const int max_rank = nonzero ? n : n + 1;
  // Echelon basis with integer rows, reduced by cross multiplication and
  // content division; exact like rational elimination.
  std::vector<std::vector<BigInt>> basis;
  std::vector<int> pivots;
  ForEachFeasible(weights, capacity, {}, [&](const std::vector<int>& x) {
    int64_t lhs = 0;
    for (int i = 0; i < n; ++i) lhs += coeffs[i] * x[i];
    if (lhs != rhs) return true;
    std::vector<BigInt> v(n + 1);
    for (int i = 0; i < n; ++i) v[i] = x[i];
    v[n] = 1;
    for (size_t r = 0; r < basis.size(); ++r) {
      const int p = pivots[r];
      if (v[p] == 0) continue;
      const BigInt a = basis[r][p];
      const BigInt b = v[p];
      BigInt content = 0;
      for (int c = 0; c <= n; ++c) {
        v[c] = a * v[c] - b * basis[r][c];
        content = gcd(content, v[c]);
      }
      if (content > 1) {
        for (BigInt& e : v) e /= content;
      }
    }
    const auto it =
        std::find_if(v.begin(), v.end(), [](const BigInt& e) { return e != 0; });
    if (it != v.end()) {
      pivots.push_back(static_cast<int>(it - v.begin()));
      basis.push_back(std::move(v));
    }
    return static_cast<int>(basis.size()) < max_rank;
  });
  return static_cast<int>(basis.size());
}

std::optional<ExplicitCut> SeparateBruteforce(const Knapsack& knapsack,
                                              std::span<const double> x) {
  const int n = knapsack.n();
  Guard(n, kMaxSeparationItems, "brute-force separation");
  ValidatePoint(x, n);
  const ScaledPoint point(x, {});
  const std::vector<int64_t>& a = knapsack.weights();
  const int64_t capacity = knapsack.capacity();

  std::optional<ExplicitCut> best;
  BigInt best_scaled;
  for (uint32_t cmask = 1; cmask < (1u << n); ++cmask) {
    std::vector<int64_t> cover_weights;
    std::vector<int> comp;
    int64_t weight = 0;
    for (int i = 0; i < n; ++i) {
      if (cmask >> i & 1u) {
        cover_weights.push_back(a[i]);
        weight += a[i];
      } else {
        comp.push_back(i);
      }
    }
    if (weight <= capacity) continue;
    const int64_t lightest =
        *std::min_element(cover_weights.begin(), cover_weights.end());
    if (weight - lightest > capacity) continue;

    // Lifting function of this explicit cover.
    std::sort(cover_weights.rbegin(), cover_weights.rend());
    const int csize = static_cast<int>(cover_weights.size());
    std::vector<int64_t> mu(csize + 1, 0);
    for (int h = 0; h < csize; ++h) mu[h + 1] = mu[h] + cover_weights[h];
    const int64_t delta = weight - capacity;
    auto mu_at = [&](int64_t h) { return mu[std::min<int64_t>(h, csize)]; };

    const int m = static_cast<int>(comp.size());
    std::vector<int64_t> pi(m);
    std::vector<int64_t> coeffs(n, 1);
    for (int k = 0; k < m; ++k) {
      int64_t p = 0;
      while (p + 1 <= csize && mu[p + 1] <= a[comp[k]]) ++p;
      pi[k] = p;
      coeffs[comp[k]] = p;
    }
    const BigInt base = ScaledDot(coeffs, point);

    const uint32_t subsets = 1u << m;
    std::vector<char> indep(subsets, 0);
    std::vector<int64_t> sx(subsets, 0), sy(subsets, 0);
    std::vector<BigInt> sval(subsets);
    indep[0] = 1;
    for (uint32_t s = 1; s < subsets; ++s) {
      const int low = std::countr_zero(s);
      const uint32_t rest = s & (s - 1);
      sx[s] = sx[rest] + pi[low] + 1;
      sy[s] = sy[rest] + a[comp[low]];
      sval[s] = sval[rest] + point.numerator(comp[low]);
      bool ok = sy[s] > mu_at(sx[s]) - delta;
      for (uint32_t t = s; ok && t != 0; t &= t - 1) {
        const uint32_t bit = t & (~t + 1);
        if (!indep[s ^ bit]) ok = false;
      }
      indep[s] = ok ? 1 : 0;
    }
    const BigInt scaled_rhs = point.ScaleInteger(csize - 1);
    for (uint32_t s = 0; s < subsets; ++s) {
      if (!indep[s]) continue;
      bool maximal = true;
      for (int k = 0; k < m && maximal; ++k) {
        if (!(s >> k & 1u) && indep[s | (1u << k)]) maximal = false;
      }
      if (!maximal) continue;
      const BigInt excess = base + sval[s] - scaled_rhs;
      if (best.has_value() && !(excess > best_scaled)) continue;
      ExplicitCut cut;
      cut.coeffs = coeffs;
      uint32_t smask = 0;
      for (int k = 0; k < m; ++k) {
        if (s >> k & 1u) {
          cut.coeffs[comp[k]] += 1;
          smask |= 1u << comp[k];
        }
      }
      cut.rhs = csize - 1;
      cut.cover_mask = cmask;
      cut.indep_mask = smask;
      cut.violation = point.Unscale(excess);
      best_scaled = excess;
      best = std::move(cut);
    }
  }
  return best;
}

ExplicitCut BestClassMember(const ClassTuple& cover, const ClassTuple& indep,
                            const WeightClasses& classes,
                            const LiftingData& lifting,
                            std::span<const double> x) {
  const int n = classes.num_items();
  Guard(n, kMaxSeparationItems, "class member enumeration");
  ValidatePoint(x, n);
  for (int j = 0; j < classes.sigma(); ++j) {
    if (cover[j] + indep[j] > classes.size(j)) {
      throw LciError(ErrorCode::kTupleExceedsClass, "class pair too large");
    }
  }
  const ScaledPoint point(x, {});
  // role[i]: 0 outside, 1 cover, 2 independent set.
  std::vector<int> role(n, 0);
  std::optional<ExplicitCut> best;
  BigInt best_scaled;
  auto evaluate = [&]() {
    ExplicitCut cut;
    cut.coeffs.resize(n);
    for (int i = 0; i < n; ++i) {
      const int64_t pi = lifting.pi[classes.class_of(i)];
      cut.coeffs[i] = role[i] == 1 ? 1 : (role[i] == 2 ? pi + 1 : pi);
      if (role[i] == 1) cut.cover_mask |= 1u << i;
      if (role[i] == 2) cut.indep_mask |= 1u << i;
    }
    cut.rhs = cover.Cardinality() - 1;
    const BigInt excess =
        ScaledDot(cut.coeffs, point) - point.ScaleInteger(cut.rhs);
    if (best.has_value() && !(excess > best_scaled)) return;
    cut.violation = point.Unscale(excess);
    best_scaled = excess;
    best = std::move(cut);
  };
  // Assign roles class by class, item by item.
  std::function<void(int, int, int, int)> rec = [&](int j, int r, int c_left,
                                                     int s_left) {
    if (j == classes.sigma()) {
      evaluate();
      return;
    }
    const std::vector<int>& items = classes.members(j);
    if (r == static_cast<int>(items.size())) {
      if (c_left == 0 && s_left == 0) {
        const int next = j + 1;
        rec(next, 0, next < classes.sigma() ? cover[next] : 0,
            next < classes.sigma() ? indep[next] : 0);
      }
      return;
    }
    const int remaining = static_cast<int>(items.size()) - r;
    if (c_left + s_left > remaining) return;
    const int item = items[r];
    if (c_left + s_left < remaining) {
      role[item] = 0;
      rec(j, r + 1, c_left, s_left);
    }
    if (c_left > 0) {
      role[item] = 1;
      rec(j, r + 1, c_left - 1, s_left);
    }
    if (s_left > 0) {
      role[item] = 2;
      rec(j, r + 1, c_left, s_left - 1);
    }
    role[item] = 0;
  };
  rec(0, 0, cover[0], indep[0]);
  return *best;
}

}  // namespace sparse_lci::oracle
