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

#ifndef SPARSE_LCI_EXTENDED_FORMULATION_H_
#define SPARSE_LCI_EXTENDED_FORMULATION_H_

// Extended formulations capturing a whole class of lifted cover inequalities
// at once: each weight class is sorted by a comparison network, and only the
// most violated member of the class, written against the sorted copy x^K, is
// imposed. Plus the orbisack formulation with one auxiliary variable per row.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/knapsack.h"
#include "sparse_lci/linear_model.h"
#include "sparse_lci/sorting_network.h"

namespace sparse_lci {

enum class NetworkKind { kInsertion, kOddEven };

ComparisonNetwork MakeNetwork(NetworkKind kind, int m);
const char* NetworkKindName(NetworkKind kind);

// Layer variables x{k}_{i} (k = 0..K, item i 1-based) in [0,1]. For every
// step k and weight class j, the five comparator rows of class j's network on
// the class wires (wire r of the class is its r-th member in ascending index),
// and copy rows x{k}_{i} = x{k-1}_{i} for the other items. Classes with
// shorter networks are padded with copy-only steps. Finally the row
// sum_j sum_r nu_j(r) x{K}_{member r of W_j} <= |C| - 1 named "lci".
// The input layer x0 is left free in [0,1].
LinearModel ClassEf(const Knapsack& knapsack, const ClassTuple& cover,
                    const ClassTuple& indep,
                    NetworkKind kind = NetworkKind::kOddEven);

struct MembershipReport {
  bool member = false;
  Rational lhs = 0;  // most violated member's left-hand side
  int64_t rhs = 0;
  // One per weight class when certificates were requested: proves that the
  // sorted witness minimises the class's part of the "lci" row.
  std::vector<DualCertificate> certificates;
};

// Decides whether x satisfies every inequality of the class pair: sorts each
// class with its network, evaluates the rank coefficients on the sorted copy
// and compares with |C| - 1, exactly.
MembershipReport EfMembership(const Knapsack& knapsack, const ClassTuple& cover,
                              const ClassTuple& indep, std::span<const double> x,
                              NetworkKind kind = NetworkKind::kOddEven,
                              bool certify = false);

struct OrbisackSpec {
  int n = 2;
  int max_rows = 2;  // the per-i* rows are emitted for i* <= max_rows
};

// Variables x{i}_1, x{i}_2 in [0,1] (i = 1..n), y{i} in [-1,0] for
// i in [2, min(n, max_rows) - 1]. Rows:
//   lb{i}:  -x{i}_1 - y{i} <= 0
//   ub{i}:   x{i}_2 - y{i} <= 1
//   lead:   -x1_1 + x1_2 <= 0
//   lci{i*}: -x1_1 + x1_2 - x{i*}_1 + x{i*}_2 + sum_{i=2}^{i*-1} y{i} <= 0
//            for i* in [2, min(n, max_rows)].
LinearModel OrbisackEf(const OrbisackSpec& spec);

// Row i of the matrix as (x_{i,1}, x_{i,2}).
using OrbisackMatrix = std::vector<std::array<double, 2>>;

// Feasibility of the formulation in x, with every y_i at its smallest
// admissible value max(x_{i,2} - 1, -x_{i,1}); exact.
bool OrbisackPointCheck(const OrbisackSpec& spec, const OrbisackMatrix& x);

struct OrbisackCut {
  // coeffs[i] = (coefficient of x_{i,1}, coefficient of x_{i,2}).
  std::vector<std::array<int, 2>> coeffs;
  int rhs = 0;
  int i_star = 1;  // 1-based
  // tau[i] for i in [2, i*-1] (1-based rows), 1 or 2; empty otherwise.
  std::vector<int> tau;
};

inline constexpr int kMaxOrbisackEnumeration = 20;

// All 2^(n-1) lifted cover inequalities of the orbisack in the original
// variables. Throws kTooLarge above kMaxOrbisackEnumeration rows.
std::vector<OrbisackCut> EnumerateOrbisackLcis(int n);

bool OrbisackCutSatisfied(const OrbisackCut& cut, const OrbisackMatrix& x);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_EXTENDED_FORMULATION_H_
