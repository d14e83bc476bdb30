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

#ifndef SPARSE_LCI_SORTING_NETWORK_H_
#define SPARSE_LCI_SORTING_NETWORK_H_

// Comparison networks with one comparison per step.
//
// Orientation: a comparator (i, j), i < j, leaves the smaller value on wire i,
// so a sorting network delivers its input in non-decreasing order along wires
// 0..n-1. Values are swapped only if the value on j is strictly smaller; on a
// tie the entry that arrived on the upper wire stays there.

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sparse_lci/exact_point.h"

namespace sparse_lci {

struct Comparator {
  int i = 0;  // upper wire, 0-based
  int j = 0;  // lower wire, i < j
  // Parallel layer index (metadata only); comparators of one layer touch
  // disjoint wires.
  int layer = 0;
};

class ComparisonNetwork {
 public:
  ComparisonNetwork() = default;
  // Throws kInvalidNetwork unless 0 <= i < j < n for each pair.
  // Layers are assigned greedily (as early as the wires allow).
  static ComparisonNetwork FromPairs(int n,
                                     std::span<const std::pair<int, int>> pairs);

  int n() const { return n_; }
  int size() const { return static_cast<int>(comparators_.size()); }
  const Comparator& comparator(int k) const { return comparators_[k]; }
  const std::vector<Comparator>& comparators() const { return comparators_; }
  int depth() const { return depth_; }

 private:
  int n_ = 0;
  int depth_ = 0;
  std::vector<Comparator> comparators_;
};

// m(m-1)/2 adjacent comparators imitating insertion sort.
ComparisonNetwork InsertionNetwork(int m);

// Batcher's odd-even merge sort. Built for the next power of two; comparators
// touching the padding wires are dropped, which is exact because padding
// values would be +infinity and never move.
ComparisonNetwork OddEvenNetwork(int m);

// Closed-form comparator count of OddEvenNetwork(m) for m a power of two:
// (p^2 - p + 4) 2^(p-2) - 1 with m = 2^p.
int OddEvenComparatorsPowerOfTwo(int p);

// phi[l][k] = wire holding input entry l after k comparators, k = 0..K.
struct Trace {
  std::vector<std::vector<int>> phi;
  // Wire of entry l at the end.
  int Final(int l) const { return phi[l].back(); }
};

struct ApplyResult {
  std::vector<double> output;
  Trace trace;
};

// Throws kDimensionMismatch if x.size() != net.n().
ApplyResult Apply(const ComparisonNetwork& net, std::span<const double> x);

inline constexpr int kMaxZeroOneWires = 22;

// Zero-one principle: sorts all 2^n binary inputs. Throws kTooLarge above
// kMaxZeroOneWires.
bool IsSortingNetwork(const ComparisonNetwork& net);

// The point x^k_{phi(l,k)} = x_l of the comparison polytope. layers[k][w] is
// the value on wire w after k comparators.
std::vector<std::vector<Rational>> WitnessLayers(const ComparisonNetwork& net,
                                                 std::span<const double> x);

// Checks every constraint of the comparison polytope (min/max bounds,
// conservation, copies, [0,1] bounds, input pin) on the witness, exactly.
bool WitnessFeasible(const ComparisonNetwork& net, std::span<const double> x);

// Dual solution certifying that the witness minimises sum_l v_l x^K_l over the
// comparison polytope of x.
struct DualCertificate {
  // delta[k][w], k = 0..K: copy-constraint multipliers of wire w at layer k
  // (input pin for k = 0). Entries for the two compared wires of layer k >= 1
  // are unused and zero.
  std::vector<std::vector<Rational>> delta;
  std::vector<Rational> beta;  // per comparator, conservation constraint
  // Per comparator: (keep-upper, swap-upper, swap-lower, keep-lower), all >= 0.
  std::vector<std::array<Rational, 4>> alpha;
  Rational objective = 0;  // sum_l x_l delta[0][l]
  // Trace the certificate was built from; equal values are ordered by input
  // index, which keeps every alpha non-negative.
  Trace trace;
};

// Builds the certificate and verifies it; throws kCertificateInfeasible if
// verification fails. Requires 0 <= v_0 <= ... <= v_{n-1}
// (kInvalidArgument otherwise) and a sorting network (kInvalidNetwork when the
// tie-broken run does not sort).
DualCertificate BuildDualCertificate(const ComparisonNetwork& net,
                                     std::span<const double> x,
                                     std::span<const Rational> v);

// Sign conditions and every dual constraint, in exact arithmetic. On failure
// `why` (if non-null) names the first violated condition.
bool VerifyDualCertificate(const ComparisonNetwork& net,
                           std::span<const double> x,
                           std::span<const Rational> v,
                           const DualCertificate& cert,
                           std::string* why = nullptr);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_SORTING_NETWORK_H_
