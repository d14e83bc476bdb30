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

#include "sparse_lci/extended_formulation.h"

#include <algorithm>
#include <string>

#include "sparse_lci/indep_enum.h"
#include "sparse_lci/separation.h"
#include "sparse_lci/status.h"

namespace sparse_lci {

ComparisonNetwork MakeNetwork(NetworkKind kind, int m) {
  return kind == NetworkKind::kInsertion ? InsertionNetwork(m)
                                         : OddEvenNetwork(m);
}

const char* NetworkKindName(NetworkKind kind) {
  return kind == NetworkKind::kInsertion ? "insertion" : "oddeven";
}

namespace {

struct ClassPair {
  ClassedKnapsack classed;
  LiftingData lifting;
  std::vector<std::vector<int64_t>> nu;
};

ClassPair PrepareClassPair(const Knapsack& knapsack, const ClassTuple& cover,
                           const ClassTuple& indep) {
  ClassPair pair{ClassedKnapsack::FromKnapsack(knapsack), {}, {}};
  const WeightClasses& classes = pair.classed.classes;
  if (cover.sigma() != classes.sigma() || indep.sigma() != classes.sigma()) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "tuples need " + std::to_string(classes.sigma()) +
                       " entries");
  }
  classes.CheckWithinBounds(cover);
  if (!IsMinimalCover(cover, pair.classed)) {
    throw LciError(ErrorCode::kInvalidArgument,
                   cover.ToString() + " is not a minimal cover class");
  }
  pair.lifting = ComputeLifting(cover, pair.classed);
  pair.nu = NuCoefficients(cover, indep, classes, pair.lifting);
  if (!IsIndependentTuple(cover, indep, classes, pair.lifting)) {
    throw LciError(ErrorCode::kInvalidArgument,
                   indep.ToString() + " is not independent for cover " +
                       cover.ToString());
  }
  return pair;
}

std::string LayerVar(int k, int item) {
  return "x" + std::to_string(k) + "_" + std::to_string(item + 1);
}

}  // namespace

LinearModel ClassEf(const Knapsack& knapsack, const ClassTuple& cover,
                    const ClassTuple& indep, NetworkKind kind) {
  const ClassPair pair = PrepareClassPair(knapsack, cover, indep);
  const WeightClasses& classes = pair.classed.classes;
  const int n = knapsack.n();
  const int sigma = classes.sigma();

  std::vector<ComparisonNetwork> networks;
  int steps = 0;
  for (int j = 0; j < sigma; ++j) {
    networks.push_back(MakeNetwork(kind, classes.size(j)));
    steps = std::max(steps, networks.back().size());
  }

  LinearModel model;
  model.notes.push_back("class pair cover " + cover.ToString() + " indep " +
                        indep.ToString() + ", " + NetworkKindName(kind) +
                        " networks, K=" + std::to_string(steps));
  // var[k][i] = index of x{k}_{i}.
  std::vector<std::vector<int>> var(steps + 1, std::vector<int>(n));
  for (int k = 0; k <= steps; ++k) {
    for (int i = 0; i < n; ++i) {
      var[k][i] = model.AddVariable(LayerVar(k, i), Rational(0), Rational(1));
    }
  }
  const Rational one(1), minus_one(-1);
  for (int k = 1; k <= steps; ++k) {
    std::vector<bool> compared(n, false);
    for (int j = 0; j < sigma; ++j) {
      if (k > networks[j].size()) continue;
      const Comparator& c = networks[j].comparator(k - 1);
      const int a = classes.members(j)[c.i];
      const int b = classes.members(j)[c.j];
      compared[a] = compared[b] = true;
      const std::string base =
          "s" + std::to_string(k) + "w" + std::to_string(j + 1);
      const int ia = var[k - 1][a], ib = var[k - 1][b];
      const int oa = var[k][a], ob = var[k][b];
      model.AddConstraint(base + "a", {{ia, one}, {oa, minus_one}},
                          Sense::kGreaterEqual, 0);
      model.AddConstraint(base + "b", {{ib, one}, {oa, minus_one}},
                          Sense::kGreaterEqual, 0);
      model.AddConstraint(base + "c", {{ia, minus_one}, {ob, one}},
                          Sense::kGreaterEqual, 0);
      model.AddConstraint(base + "d", {{ib, minus_one}, {ob, one}},
                          Sense::kGreaterEqual, 0);
      model.AddConstraint(
          base + "e",
          {{ia, minus_one}, {ib, minus_one}, {oa, one}, {ob, one}},
          Sense::kEqual, 0);
    }
    for (int i = 0; i < n; ++i) {
      if (compared[i]) continue;
      model.AddConstraint(
          "copy" + std::to_string(k) + "_" + std::to_string(i + 1),
          {{var[k - 1][i], minus_one}, {var[k][i], one}}, Sense::kEqual, 0);
    }
  }
  std::vector<Term> cut;
  for (int j = 0; j < sigma; ++j) {
    for (int r = 0; r < classes.size(j); ++r) {
      if (pair.nu[j][r] != 0) {
        cut.push_back({var[steps][classes.members(j)[r]], Rational(pair.nu[j][r])});
      }
    }
  }
  model.AddConstraint("lci", std::move(cut), Sense::kLessEqual,
                      Rational(cover.Cardinality() - 1));
  return model;
}

MembershipReport EfMembership(const Knapsack& knapsack, const ClassTuple& cover,
                              const ClassTuple& indep, std::span<const double> x,
                              NetworkKind kind, bool certify) {
  ValidatePoint(x, knapsack.n());
  const ClassPair pair = PrepareClassPair(knapsack, cover, indep);
  const WeightClasses& classes = pair.classed.classes;
  MembershipReport report;
  report.rhs = cover.Cardinality() - 1;
  for (int j = 0; j < classes.sigma(); ++j) {
    const ComparisonNetwork net = MakeNetwork(kind, classes.size(j));
    std::vector<double> values;
    for (int i : classes.members(j)) values.push_back(x[i]);
    const ApplyResult run = Apply(net, values);
    Rational part = 0;
    for (int r = 0; r < classes.size(j); ++r) {
      part += ToRational(run.output[r]) * pair.nu[j][r];
    }
    report.lhs += part;
    if (certify) {
      std::vector<Rational> v(pair.nu[j].begin(), pair.nu[j].end());
      DualCertificate cert = BuildDualCertificate(net, values, v);
      if (cert.objective != part) {
        throw LciError(ErrorCode::kCertificateInfeasible,
                       "certificate objective differs from the sorted witness");
      }
      report.certificates.push_back(std::move(cert));
    }
  }
  report.member = report.lhs <= report.rhs;
  return report;
}

namespace {

void CheckOrbisackSpec(const OrbisackSpec& spec) {
  if (spec.n < 1) throw LciError(ErrorCode::kInvalidArgument, "need n >= 1");
  if (spec.max_rows < 1) {
    throw LciError(ErrorCode::kInvalidArgument, "need max_rows >= 1");
  }
}

std::string OrbVar(int i, int col) {
  return "x" + std::to_string(i) + "_" + std::to_string(col);
}

}  // namespace

LinearModel OrbisackEf(const OrbisackSpec& spec) {
  CheckOrbisackSpec(spec);
  const int n = spec.n;
  const int last = std::min(n, spec.max_rows);  // largest emitted i*
  LinearModel model;
  model.notes.push_back("orbisack n=" + std::to_string(n) +
                        ", rows i* <= " + std::to_string(last));
  if (last < n) {
    model.notes.push_back(
        "truncated: only valid as a symmetry-handling relaxation of the "
        "full orbisack");
  }
  std::vector<std::array<int, 2>> x(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int col = 1; col <= 2; ++col) {
      x[i][col - 1] = model.AddVariable(OrbVar(i, col), Rational(0), Rational(1));
    }
  }
  std::vector<int> y(n + 1, -1);
  for (int i = 2; i <= last - 1; ++i) {
    y[i] = model.AddVariable("y" + std::to_string(i), Rational(-1), Rational(0));
  }
  const Rational one(1), minus_one(-1);
  for (int i = 2; i <= last - 1; ++i) {
    model.AddConstraint("lb" + std::to_string(i),
                        {{x[i][0], minus_one}, {y[i], minus_one}},
                        Sense::kLessEqual, 0);
    model.AddConstraint("ub" + std::to_string(i), {{x[i][1], one}, {y[i], minus_one}},
                        Sense::kLessEqual, 1);
  }
  if (n >= 1) {
    model.AddConstraint("lead", {{x[1][0], minus_one}, {x[1][1], one}},
                        Sense::kLessEqual, 0);
  }
  for (int star = 2; star <= last; ++star) {
    std::vector<Term> terms = {{x[1][0], minus_one},
                               {x[1][1], one},
                               {x[star][0], minus_one},
                               {x[star][1], one}};
    for (int i = 2; i <= star - 1; ++i) terms.push_back({y[i], one});
    model.AddConstraint("lci" + std::to_string(star), std::move(terms),
                        Sense::kLessEqual, 0);
  }
  return model;
}

namespace {

bool IsBinaryMatrix(const OrbisackMatrix& x) {
  for (const std::array<double, 2>& row : x) {
    for (double v : row) {
      if (v != 0.0 && v != 1.0) return false;
    }
  }
  return true;
}

// With y_i at max(x_{i,2} - 1, -x_{i,1}) every row is a running sum. T is
// int for binary matrices and Rational otherwise.
template <typename T>
bool OrbisackRows(const std::vector<std::array<T, 2>>& r, int last) {
  const T lead = r[0][1] - r[0][0];
  if (lead > 0) return false;
  T y_sum = 0;  // sum of y_i for i = 2..i*-1 (1-based)
  for (int star = 2; star <= last; ++star) {
    if (star >= 3) {
      const int i = star - 2;  // 0-based row of index star-1
      y_sum += std::max(T(r[i][1] - 1), T(-r[i][0]));
    }
    if (lead - r[star - 1][0] + r[star - 1][1] + y_sum > 0) return false;
  }
  return true;
}

}  // namespace

bool OrbisackPointCheck(const OrbisackSpec& spec, const OrbisackMatrix& x) {
  CheckOrbisackSpec(spec);
  const int n = spec.n;
  if (static_cast<int>(x.size()) != n) {
    throw LciError(ErrorCode::kDimensionMismatch, "matrix needs n rows");
  }
  for (const std::array<double, 2>& row : x) {
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw LciError(ErrorCode::kInvalidPoint, "entries must lie in [0,1]");
      }
    }
  }
  const int last = std::min(n, spec.max_rows);
  if (IsBinaryMatrix(x)) {
    std::vector<std::array<int, 2>> r(n);
    for (int i = 0; i < n; ++i) r[i] = {static_cast<int>(x[i][0]), static_cast<int>(x[i][1])};
    return OrbisackRows(r, last);
  }
  std::vector<std::array<Rational, 2>> r(n);
  for (int i = 0; i < n; ++i) r[i] = {ToRational(x[i][0]), ToRational(x[i][1])};
  return OrbisackRows(r, last);
}

std::vector<OrbisackCut> EnumerateOrbisackLcis(int n) {
  if (n < 1) throw LciError(ErrorCode::kInvalidArgument, "need n >= 1");
  if (n > kMaxOrbisackEnumeration) {
    throw LciError(ErrorCode::kTooLarge,
                   "orbisack enumeration limited to " +
                       std::to_string(kMaxOrbisackEnumeration) + " rows");
  }
  std::vector<OrbisackCut> cuts;
  OrbisackCut lead;
  lead.coeffs.assign(n, {0, 0});
  lead.coeffs[0] = {-1, 1};
  lead.rhs = 0;
  lead.i_star = 1;
  cuts.push_back(lead);
  for (int star = 2; star <= n; ++star) {
    const int free_rows = star - 2;  // rows 2..i*-1
    for (uint32_t bits = 0; bits < (1u << free_rows); ++bits) {
      OrbisackCut cut;
      cut.coeffs.assign(n, {0, 0});
      cut.coeffs[0] = {-1, 1};
      cut.coeffs[star - 1] = {-1, 1};
      cut.i_star = star;
      int ones = 0;
      for (int t = 0; t < free_rows; ++t) {
        const int row = t + 1;  // 0-based index of row t + 2
        const int tau = (bits >> t & 1u) ? 2 : 1;
        cut.tau.push_back(tau);
        if (tau == 1) {
          cut.coeffs[row][0] = -1;
          ++ones;
        } else {
          cut.coeffs[row][1] = 1;
        }
      }
      cut.rhs = star - ones - 2;
      cuts.push_back(std::move(cut));
    }
  }
  return cuts;
}

bool OrbisackCutSatisfied(const OrbisackCut& cut, const OrbisackMatrix& x) {
  if (x.size() != cut.coeffs.size()) {
    throw LciError(ErrorCode::kDimensionMismatch, "matrix needs n rows");
  }
  if (IsBinaryMatrix(x)) {
    int lhs = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      lhs += cut.coeffs[i][0] * static_cast<int>(x[i][0]) +
             cut.coeffs[i][1] * static_cast<int>(x[i][1]);
    }
    return lhs <= cut.rhs;
  }
  Rational lhs = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    for (int col = 0; col < 2; ++col) {
      if (cut.coeffs[i][col] != 0) lhs += ToRational(x[i][col]) * cut.coeffs[i][col];
    }
  }
  return lhs <= cut.rhs;
}

}  // namespace sparse_lci
