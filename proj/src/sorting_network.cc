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

#include "sparse_lci/sorting_network.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "sparse_lci/status.h"

namespace sparse_lci {

ComparisonNetwork ComparisonNetwork::FromPairs(
    int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0) throw LciError(ErrorCode::kInvalidNetwork, "negative wire count");
  ComparisonNetwork net;
  net.n_ = n;
  std::vector<int> busy_until(n, 0);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j >= n || i >= j) {
      throw LciError(ErrorCode::kInvalidNetwork,
                     "comparator (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") invalid for " +
                         std::to_string(n) + " wires");
    }
    Comparator c;
    c.i = i;
    c.j = j;
    c.layer = std::max(busy_until[i], busy_until[j]);
    busy_until[i] = busy_until[j] = c.layer + 1;
    net.depth_ = std::max(net.depth_, c.layer + 1);
    net.comparators_.push_back(c);
  }
  return net;
}

ComparisonNetwork InsertionNetwork(int m) {
  if (m < 1) throw LciError(ErrorCode::kInvalidArgument, "need m >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < m; ++i) {
    for (int j = i; j >= 1; --j) pairs.emplace_back(j - 1, j);
  }
  return ComparisonNetwork::FromPairs(m, pairs);
}

ComparisonNetwork OddEvenNetwork(int m) {
  if (m < 1) throw LciError(ErrorCode::kInvalidArgument, "need m >= 1");
  int size = 1;
  while (size < m) size <<= 1;
  std::vector<std::pair<int, int>> pairs;
  for (int p = 1; p < size; p <<= 1) {
    for (int k = p; k >= 1; k >>= 1) {
      for (int j = k % p; j + k < size; j += 2 * k) {
        for (int i = 0; i < k && i + j + k < size; ++i) {
          const int a = i + j;
          const int b = i + j + k;
          if (a / (2 * p) != b / (2 * p)) continue;
          if (b < m) pairs.emplace_back(a, b);
        }
      }
    }
  }
  return ComparisonNetwork::FromPairs(m, pairs);
}

int OddEvenComparatorsPowerOfTwo(int p) {
  return (((p * p - p + 4) << p) >> 2) - 1;
}

ApplyResult Apply(const ComparisonNetwork& net, std::span<const double> x) {
  const int n = net.n();
  if (static_cast<int>(x.size()) != n) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "input has " + std::to_string(x.size()) + " entries, network " +
                       std::to_string(n) + " wires");
  }
  ApplyResult result;
  result.output.assign(x.begin(), x.end());
  std::vector<int> entry_on(n);  // wire -> input entry
  std::iota(entry_on.begin(), entry_on.end(), 0);
  result.trace.phi.assign(n, std::vector<int>(net.size() + 1));
  for (int l = 0; l < n; ++l) result.trace.phi[l][0] = l;
  for (int k = 0; k < net.size(); ++k) {
    const Comparator& c = net.comparator(k);
    if (result.output[c.j] < result.output[c.i]) {
      std::swap(result.output[c.i], result.output[c.j]);
      std::swap(entry_on[c.i], entry_on[c.j]);
    }
    for (int w = 0; w < n; ++w) result.trace.phi[entry_on[w]][k + 1] = w;
  }
  return result;
}

bool IsSortingNetwork(const ComparisonNetwork& net) {
  const int n = net.n();
  if (n > kMaxZeroOneWires) {
    throw LciError(ErrorCode::kTooLarge,
                   "zero-one test limited to " +
                       std::to_string(kMaxZeroOneWires) + " wires");
  }
  // Bit w of the word is the value on wire w.
  for (uint32_t input = 0; input < (1u << n); ++input) {
    uint32_t word = input;
    for (const Comparator& c : net.comparators()) {
      const uint32_t upper = word >> c.i & 1u;
      const uint32_t lower = word >> c.j & 1u;
      if (upper == 1 && lower == 0) word ^= (1u << c.i) | (1u << c.j);
    }
    // Sorted iff the ones form a suffix of the wires.
    const int ones = std::popcount(word);
    const uint32_t all = (1u << n) - 1u;
    const uint32_t expected = all & ~((1u << (n - ones)) - 1u);
    if (word != expected) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> WitnessLayers(const ComparisonNetwork& net,
                                                 std::span<const double> x) {
  const ApplyResult run = Apply(net, x);
  const int n = net.n();
  std::vector<std::vector<Rational>> layers(net.size() + 1,
                                            std::vector<Rational>(n));
  for (int l = 0; l < n; ++l) {
    const Rational value = ToRational(x[l]);
    for (int k = 0; k <= net.size(); ++k) layers[k][run.trace.phi[l][k]] = value;
  }
  return layers;
}

bool WitnessFeasible(const ComparisonNetwork& net, std::span<const double> x) {
  const std::vector<std::vector<Rational>> layers = WitnessLayers(net, x);
  const int n = net.n();
  for (int w = 0; w < n; ++w) {
    if (layers[0][w] != ToRational(x[w])) return false;
  }
  for (int k = 1; k <= net.size(); ++k) {
    const Comparator& c = net.comparator(k - 1);
    const std::vector<Rational>& in = layers[k - 1];
    const std::vector<Rational>& out = layers[k];
    if (in[c.i] - out[c.i] < 0) return false;
    if (in[c.j] - out[c.i] < 0) return false;
    if (out[c.j] - in[c.i] < 0) return false;
    if (out[c.j] - in[c.j] < 0) return false;
    if (out[c.i] + out[c.j] - in[c.i] - in[c.j] != 0) return false;
    for (int w = 0; w < n; ++w) {
      if (w != c.i && w != c.j && out[w] != in[w]) return false;
    }
  }
  for (const std::vector<Rational>& layer : layers) {
    for (const Rational& value : layer) {
      if (value < 0 || value > 1) return false;
    }
  }
  return true;
}

namespace {

void CheckCoefficients(std::span<const Rational> v, int n) {
  if (static_cast<int>(v.size()) != n) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "coefficient vector length differs from wire count");
  }
  for (int l = 0; l < n; ++l) {
    if (v[l] < 0 || (l > 0 && v[l] < v[l - 1])) {
      throw LciError(ErrorCode::kInvalidArgument,
                     "coefficients must be non-negative and non-decreasing");
    }
  }
}

// Trace of the run comparing (x_l, l) lexicographically, so that no two
// entries tie.
Trace TieBrokenTrace(const ComparisonNetwork& net, std::span<const double> x) {
  const int n = net.n();
  std::vector<int> entry_on(n);
  std::iota(entry_on.begin(), entry_on.end(), 0);
  Trace trace;
  trace.phi.assign(n, std::vector<int>(net.size() + 1));
  for (int l = 0; l < n; ++l) trace.phi[l][0] = l;
  auto less = [&](int a, int b) {
    return x[a] < x[b] || (x[a] == x[b] && a < b);
  };
  for (int k = 0; k < net.size(); ++k) {
    const Comparator& c = net.comparator(k);
    if (less(entry_on[c.j], entry_on[c.i])) {
      std::swap(entry_on[c.i], entry_on[c.j]);
    }
    for (int w = 0; w < n; ++w) trace.phi[entry_on[w]][k + 1] = w;
  }
  return trace;
}

}  // namespace

DualCertificate BuildDualCertificate(const ComparisonNetwork& net,
                                     std::span<const double> x,
                                     std::span<const Rational> v) {
  const int n = net.n();
  const int steps = net.size();
  if (static_cast<int>(x.size()) != n) {
    throw LciError(ErrorCode::kDimensionMismatch,
                   "input length differs from wire count");
  }
  CheckCoefficients(v, n);

  DualCertificate cert;
  cert.trace = TieBrokenTrace(net, x);
  // entry_at[k][w]: input entry on wire w after k comparators.
  std::vector<std::vector<int>> entry_at(steps + 1, std::vector<int>(n));
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k <= steps; ++k) entry_at[k][cert.trace.phi[l][k]] = l;
  }
  for (int w = 1; w < n; ++w) {
    if (x[entry_at[steps][w - 1]] > x[entry_at[steps][w]]) {
      throw LciError(ErrorCode::kInvalidNetwork,
                     "network does not sort the given input");
    }
  }
  // Final coefficient carried by each entry.
  auto final_v = [&](int l) -> const Rational& { return v[cert.trace.Final(l)]; };

  cert.delta.assign(steps + 1, std::vector<Rational>(n, Rational(0)));
  cert.beta.assign(steps, Rational(0));
  cert.alpha.assign(steps, {Rational(0), Rational(0), Rational(0), Rational(0)});
  for (int w = 0; w < n; ++w) cert.delta[0][w] = final_v(w);
  for (int k = 1; k <= steps; ++k) {
    const Comparator& c = net.comparator(k - 1);
    for (int w = 0; w < n; ++w) {
      if (w != c.i && w != c.j) cert.delta[k][w] = final_v(entry_at[k][w]);
    }
    const Rational& upper = final_v(entry_at[k][c.i]);
    const Rational& lower = final_v(entry_at[k][c.j]);
    const Rational beta = (upper + lower) / 2;
    cert.beta[k - 1] = beta;
    const bool kept = entry_at[k][c.i] == entry_at[k - 1][c.i];
    std::array<Rational, 4>& a = cert.alpha[k - 1];
    if (kept) {
      a[0] = beta - upper;
      a[3] = lower - beta;
    } else {
      a[1] = beta - upper;
      a[2] = lower - beta;
    }
  }
  cert.objective = 0;
  for (int l = 0; l < n; ++l) cert.objective += ToRational(x[l]) * cert.delta[0][l];

  std::string why;
  if (!VerifyDualCertificate(net, x, v, cert, &why)) {
    throw LciError(ErrorCode::kCertificateInfeasible, why);
  }
  return cert;
}

bool VerifyDualCertificate(const ComparisonNetwork& net,
                           std::span<const double> x,
                           std::span<const Rational> v,
                           const DualCertificate& cert, std::string* why) {
  const int n = net.n();
  const int steps = net.size();
  auto fail = [&](const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
  };
  if (static_cast<int>(cert.delta.size()) != steps + 1 ||
      static_cast<int>(cert.beta.size()) != steps ||
      static_cast<int>(cert.alpha.size()) != steps ||
      static_cast<int>(x.size()) != n || static_cast<int>(v.size()) != n) {
    return fail("certificate dimensions do not match the network");
  }
  for (int k = 0; k < steps; ++k) {
    for (int t = 0; t < 4; ++t) {
      if (cert.alpha[k][t] < 0) {
        return fail("negative alpha at comparator " + std::to_string(k + 1));
      }
    }
  }
  // Column of x^k_w as the output of layer k.
  auto out = [&](int k, int w) -> Rational {
    if (k == 0) return cert.delta[0][w];
    const Comparator& c = net.comparator(k - 1);
    const std::array<Rational, 4>& a = cert.alpha[k - 1];
    if (w == c.i) return cert.beta[k - 1] - a[0] - a[1];
    if (w == c.j) return cert.beta[k - 1] + a[2] + a[3];
    return cert.delta[k][w];
  };
  // Column of x^k_w as the input of layer k + 1, with its sign flipped.
  auto in = [&](int k, int w) -> Rational {
    const Comparator& c = net.comparator(k);
    const std::array<Rational, 4>& a = cert.alpha[k];
    if (w == c.i) return cert.beta[k] - a[0] + a[2];
    if (w == c.j) return cert.beta[k] - a[1] + a[3];
    return cert.delta[k + 1][w];
  };
  for (int k = 0; k < steps; ++k) {
    for (int w = 0; w < n; ++w) {
      if (out(k, w) - in(k, w) > 0) {
        return fail("dual constraint of wire " + std::to_string(w + 1) +
                    " at layer " + std::to_string(k) + " violated");
      }
    }
  }
  for (int w = 0; w < n; ++w) {
    if (out(steps, w) > v[w]) {
      return fail("terminal dual constraint of wire " + std::to_string(w + 1) +
                  " violated");
    }
  }
  Rational objective = 0;
  for (int l = 0; l < n; ++l) objective += ToRational(x[l]) * cert.delta[0][l];
  if (objective != cert.objective) return fail("objective mismatch");
  return true;
}

}  // namespace sparse_lci
