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

#include "sparse_lci/indep_enum.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "sparse_lci/status.h"

namespace sparse_lci {

JumpGeometry JumpGeometry::Build(const ClassTuple& cover,
                                 const WeightClasses& classes,
                                 const LiftingData& lifting) {
  classes.CheckWithinBounds(cover);
  const int sigma = classes.sigma();
  JumpGeometry geometry;
  geometry.jump_x.resize(sigma);
  geometry.jump_y.resize(sigma);
  geometry.available.resize(sigma);
  for (int j = 0; j < sigma; ++j) {
    geometry.jump_x[j] = static_cast<int64_t>(lifting.pi[j]) + 1;
    geometry.jump_y[j] = classes.weight(j);
    geometry.available[j] = classes.size(j) - cover[j];
  }
  geometry.order.resize(sigma);
  std::iota(geometry.order.begin(), geometry.order.end(), 0);
  std::sort(geometry.order.begin(), geometry.order.end(), [&](int a, int b) {
    if (geometry.SlopeLess(a, b)) return true;
    if (geometry.SlopeLess(b, a)) return false;
    // Equal slopes: longer jump first, then smaller class index.
    if (geometry.jump_x[a] != geometry.jump_x[b]) {
      return geometry.jump_x[a] > geometry.jump_x[b];
    }
    return a < b;
  });
  return geometry;
}

bool JumpGeometry::SlopeLess(int a, int b) const {
  return static_cast<__int128>(jump_y[a]) * jump_x[b] <
         static_cast<__int128>(jump_y[b]) * jump_x[a];
}

JumpVerdict ClassifyJump(PathPoint from, int j, const JumpGeometry& geometry,
                         const LiftingData& lifting) {
  const int64_t length = geometry.jump_x[j];
  const int64_t rise = geometry.jump_y[j];
  // At abscissa x + t the segment has height y + t * rise / length; compare
  // length * (y - mu(x + t) + delta) + t * rise against zero.
  auto above = [&](int64_t t) {
    const __int128 gap = static_cast<__int128>(from.y) -
                         lifting.Mu(from.x + t) + lifting.delta;
    return static_cast<__int128>(length) * gap +
               static_cast<__int128>(t) * rise >
           0;
  };
  if (!above(length)) return JumpVerdict::kRejectedAtEndpoint;
  for (int64_t t = 1; t < length; ++t) {
    if (!above(t)) return JumpVerdict::kRejectedInterior;
  }
  return JumpVerdict::kAccepted;
}

bool BoundaryOkJump(PathPoint from, int j, const JumpGeometry& geometry,
                    const LiftingData& lifting) {
  return ClassifyJump(from, j, geometry, lifting) == JumpVerdict::kAccepted;
}

PathPoint Endpoint(const ClassTuple& s, const JumpGeometry& geometry) {
  PathPoint p;
  for (int j = 0; j < s.sigma(); ++j) {
    p.x += s[j] * geometry.jump_x[j];
    p.y += s[j] * geometry.jump_y[j];
  }
  return p;
}

namespace {

void Move(PathPoint& p, int j, const JumpGeometry& geometry) {
  p.x += geometry.jump_x[j];
  p.y += geometry.jump_y[j];
}

}  // namespace

bool PathFeasible(const ClassTuple& s, const JumpGeometry& geometry,
                  const LiftingData& lifting) {
  PathPoint p;
  for (int j : geometry.order) {
    if (s[j] > geometry.available[j]) return false;
    for (int k = 0; k < s[j]; ++k) {
      if (!BoundaryOkJump(p, j, geometry, lifting)) return false;
      Move(p, j, geometry);
    }
  }
  return true;
}

ClassTuple GreedyComplete(ClassTuple s, int fixed_prefix,
                          const JumpGeometry& geometry,
                          const LiftingData& lifting, SearchStats* stats) {
  const int sigma = geometry.sigma();
  PathPoint p;
  for (int pos = 0; pos < fixed_prefix; ++pos) {
    const int j = geometry.order[pos];
    p.x += s[j] * geometry.jump_x[j];
    p.y += s[j] * geometry.jump_y[j];
  }
  for (int pos = fixed_prefix; pos < sigma; ++pos) {
    const int j = geometry.order[pos];
    s[j] = 0;
    for (int k = 0; k < geometry.available[j]; ++k) {
      const JumpVerdict verdict = ClassifyJump(p, j, geometry, lifting);
      if (stats != nullptr) {
        ++stats->jumps_tested;
        if (verdict == JumpVerdict::kRejectedInterior) {
          stats->interior_rejection = true;
        }
      }
      if (verdict != JumpVerdict::kAccepted) break;
      Move(p, j, geometry);
      ++s[j];
    }
  }
  return s;
}

std::optional<ClassTuple> NextLeaf(const ClassTuple& s,
                                   const JumpGeometry& geometry,
                                   const LiftingData& lifting,
                                   SearchStats* stats) {
  for (int pos = geometry.sigma() - 2; pos >= 0; --pos) {
    const int j = geometry.order[pos];
    if (s[j] > 0) {
      ClassTuple next = s;
      --next[j];
      return GreedyComplete(std::move(next), pos + 1, geometry, lifting, stats);
    }
  }
  return std::nullopt;
}

std::optional<ClassTuple> NextMaximal(const ClassTuple& s,
                                      const JumpGeometry& geometry,
                                      const LiftingData& lifting,
                                      SearchStats* stats) {
  std::optional<ClassTuple> current = s;
  do {
    current = NextLeaf(*current, geometry, lifting, stats);
    if (!current.has_value()) return std::nullopt;
  } while (current->LessEqual(s));
  return current;
}

std::vector<IndepClass> IndepEnumeration::Maximal() const {
  std::vector<IndepClass> result;
  for (const IndepClass& leaf : leaves) {
    if (leaf.maximal) result.push_back(leaf);
  }
  return result;
}

IndepEnumeration EnumerateIndepClasses(const ClassTuple& cover,
                                       const WeightClasses& classes,
                                       const LiftingData& lifting) {
  const JumpGeometry geometry = JumpGeometry::Build(cover, classes, lifting);
  const int sigma = geometry.sigma();
  SearchStats stats;
  IndepEnumeration result;

  auto record = [&](const ClassTuple& s) {
    IndepClass leaf;
    leaf.tuple = s;
    leaf.endpoint = Endpoint(s, geometry);
    leaf.maximal = true;
    for (int j = 0; j < sigma && leaf.maximal; ++j) {
      if (s[j] >= geometry.available[j]) continue;
      ClassTuple extended = s;
      ++extended[j];
      if (PathFeasible(extended, geometry, lifting)) leaf.maximal = false;
    }
    result.leaves.push_back(std::move(leaf));
  };

  std::optional<ClassTuple> s =
      GreedyComplete(ClassTuple(sigma), 0, geometry, lifting, &stats);
  while (s.has_value()) {
    record(*s);
    s = NextLeaf(*s, geometry, lifting, &stats);
  }
  result.exact = !stats.interior_rejection;
  result.jumps_tested = stats.jumps_tested;
  return result;
}

bool IsIndependentTuple(const ClassTuple& cover, const ClassTuple& s,
                        const WeightClasses& classes,
                        const LiftingData& lifting) {
  const JumpGeometry geometry = JumpGeometry::Build(cover, classes, lifting);
  const int sigma = geometry.sigma();
  for (int j = 0; j < sigma; ++j) {
    if (s[j] < 0 || s[j] > geometry.available[j]) {
      throw LciError(ErrorCode::kTupleExceedsClass,
                     "tuple " + s.ToString() +
                         " exceeds the items outside the cover");
    }
  }
  ClassTuple q(sigma);
  PathPoint p;
  while (true) {
    int j = 0;
    while (j < sigma && q[j] == s[j]) {
      p.x -= q[j] * geometry.jump_x[j];
      p.y -= q[j] * geometry.jump_y[j];
      q[j++] = 0;
    }
    if (j == sigma) return true;
    ++q[j];
    Move(p, j, geometry);
    if (!(p.y > lifting.Mu(p.x) - lifting.delta)) return false;
  }
}

std::optional<IndepEnumeration> EnumerateIndepClassesDynamic(
    const ClassTuple& cover, const WeightClasses& classes,
    const LiftingData& lifting, int64_t max_grid) {
  const JumpGeometry geometry = JumpGeometry::Build(cover, classes, lifting);
  const int sigma = geometry.sigma();
  std::vector<int64_t> stride(sigma);
  int64_t total = 1;
  for (int j = 0; j < sigma; ++j) {
    stride[j] = total;
    total *= geometry.available[j] + 1;
    if (total > max_grid) return std::nullopt;
  }
  // Mixed radix with class 0 fastest, so sub-tuples come first.
  std::vector<char> indep(total, 0);
  ClassTuple s(sigma);
  PathPoint p;
  indep[0] = 1;
  for (int64_t idx = 1; idx < total; ++idx) {
    int j = 0;
    while (s[j] == geometry.available[j]) {
      p.x -= s[j] * geometry.jump_x[j];
      p.y -= s[j] * geometry.jump_y[j];
      s[j++] = 0;
    }
    ++s[j];
    Move(p, j, geometry);
    bool ok = p.y > lifting.Mu(p.x) - lifting.delta;
    for (int k = 0; k < sigma && ok; ++k) {
      if (s[k] > 0 && !indep[idx - stride[k]]) ok = false;
    }
    indep[idx] = ok ? 1 : 0;
  }

  IndepEnumeration result;
  s = ClassTuple(sigma);
  for (int64_t idx = 0; idx < total; ++idx) {
    if (idx > 0) {
      int j = 0;
      while (s[j] == geometry.available[j]) s[j++] = 0;
      ++s[j];
    }
    if (!indep[idx]) continue;
    bool maximal = true;
    for (int k = 0; k < sigma && maximal; ++k) {
      if (s[k] < geometry.available[k] && indep[idx + stride[k]]) {
        maximal = false;
      }
    }
    if (!maximal) continue;
    IndepClass leaf;
    leaf.tuple = s;
    leaf.endpoint = Endpoint(s, geometry);
    leaf.maximal = true;
    result.leaves.push_back(std::move(leaf));
  }
  return result;
}

}  // namespace sparse_lci
