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

#include "sparse_lci/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/indep_enum.h"
#include "sparse_lci/oracle.h"
#include "sparse_lci/separation.h"
#include "sparse_lci/sorting_network.h"
#include "sparse_lci/status.h"

namespace sparse_lci {
namespace {

void Add(std::vector<CheckResult>& out, std::string name, bool pass,
         std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

std::string Join(const std::vector<ClassTuple>& tuples) {
  std::string s;
  for (const ClassTuple& t : tuples) {
    if (!s.empty()) s += ' ';
    s += t.ToString();
  }
  return s.empty() ? "none" : s;
}

void VerifyNetwork(const Instance& instance, std::vector<CheckResult>& out) {
  const ComparisonNetwork& net = *instance.network;
  const int n = net.n();
  if (n <= kMaxZeroOneWires) {
    Add(out, "network.sorting", IsSortingNetwork(net),
        std::to_string(net.size()) + " comparators");
  }
  if (instance.input.empty()) return;
  if (static_cast<int>(instance.input.size()) != n) {
    Add(out, "network.input", false, "input length differs from wire count");
    return;
  }
  const ApplyResult run = Apply(net, instance.input);
  if (instance.expected_output.has_value()) {
    Add(out, "network.output", run.output == *instance.expected_output);
  } else {
    Add(out, "network.output",
        std::is_sorted(run.output.begin(), run.output.end()), "sortedness");
  }
  if (!instance.expected_trace.empty()) {
    bool same = true;
    for (const auto& [entry, wires] : instance.expected_trace) {
      if (run.trace.phi[entry] != wires) same = false;
    }
    Add(out, "network.trace", same);
  }
  // Polytope checks need values in [0,1]; scale by the largest magnitude.
  double scale = 0.0;
  for (double v : instance.input) scale = std::max(scale, std::fabs(v));
  std::vector<double> scaled = instance.input;
  bool nonnegative = true;
  for (double& v : scaled) {
    if (scale > 1.0) v /= scale;
    if (v < 0.0) nonnegative = false;
  }
  if (!nonnegative) return;
  Add(out, "network.witness", WitnessFeasible(net, scaled));
  std::vector<Rational> v;
  if (!instance.coefficients.empty()) {
    for (double c : instance.coefficients) v.push_back(ToRational(c));
  } else {
    for (int l = 0; l < n; ++l) v.push_back(Rational(l));
  }
  try {
    const DualCertificate cert = BuildDualCertificate(net, scaled, v);
    std::vector<double> sorted = scaled;
    std::sort(sorted.begin(), sorted.end());
    Rational expected = 0;
    for (int l = 0; l < n; ++l) expected += v[l] * ToRational(sorted[l]);
    Add(out, "network.certificate", cert.objective == expected,
        "objective " + cert.objective.str());
  } catch (const LciError& e) {
    Add(out, "network.certificate", false, e.what());
  }
}

std::vector<double> RandomPoint(std::mt19937_64& rng, int n) {
  std::vector<double> x(n);
  for (double& v : x) {
    const uint64_t r = rng();
    switch (r % 4) {
      case 0: v = 0.0; break;
      case 1: v = 1.0; break;
      default: v = static_cast<double>(r >> 11) * 0x1.0p-53;
    }
  }
  return x;
}

void VerifyKnapsack(const Instance& instance, const VerifyOptions& opts,
                    std::vector<CheckResult>& out) {
  const Knapsack& k = *instance.knapsack;
  const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(k);
  const WeightClasses& classes = ck.classes;

  // Cover classes.
  const std::vector<ClassTuple> truth = oracle::MinimalCoversBruteforce(ck);
  for (CoverOrder order : {CoverOrder::kForward, CoverOrder::kReverse}) {
    std::vector<ClassTuple> got;
    for (const CoverClass& c : AllMinimalCovers(ck, order)) got.push_back(c.tuple);
    const bool distinct = std::set<ClassTuple>(got.begin(), got.end()).size() ==
                          got.size();
    std::sort(got.begin(), got.end());
    Add(out,
        order == CoverOrder::kForward ? "covers.forward" : "covers.reverse",
        distinct && got == truth, Join(got));
  }

  // Independent classes per cover.
  bool sound = true, complete = true;
  int inexact = 0;
  for (const ClassTuple& cover : truth) {
    const LiftingData lifting = ComputeLifting(cover, ck);
    const IndepEnumeration e = EnumerateIndepClasses(cover, classes, lifting);
    for (const IndepClass& leaf : e.leaves) {
      if (!oracle::IsIndependentExact(cover, leaf.tuple, classes, lifting)) {
        sound = false;
      }
    }
    if (!e.exact) {
      ++inexact;
      continue;
    }
    std::vector<ClassTuple> flagged;
    for (const IndepClass& leaf : e.Maximal()) flagged.push_back(leaf.tuple);
    std::sort(flagged.begin(), flagged.end());
    flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
    if (flagged != oracle::MaximalIndepBruteforce(cover, classes, lifting)) {
      complete = false;
    }
  }
  Add(out, "indep.sound", sound);
  Add(out, "indep.exact_covers_complete", complete,
      std::to_string(inexact) + " inexact covers");

  // Separation against brute force, validity and facets.
  std::vector<std::vector<double>> points = instance.points;
  std::mt19937_64 rng(opts.seed);
  for (int p = 0; p < opts.random_points; ++p) points.push_back(RandomPoint(rng, k.n()));
  bool agree = true, valid = true, facets = true, gub_valid = true;
  std::ostringstream detail;
  std::vector<int> group_of;
  if (instance.gubs.has_value()) group_of = ValidateGubs(*instance.gubs, k.n());
  for (const std::vector<double>& x : points) {
    const SeparationResult res = Separate(k, x);
    const std::optional<oracle::ExplicitCut> best = oracle::SeparateBruteforce(k, x);
    const Rational tol = ToRational(SeparationOptions{}.tolerance);
    const bool oracle_found = best.has_value() && best->violation > tol;
    if (oracle_found != !res.cuts.empty() ||
        (oracle_found && res.cuts.front().violation != best->violation)) {
      agree = false;
    }
    for (const LiftedCut& cut : res.cuts) {
      if (!oracle::CutValid(cut.coeffs, cut.rhs, k.weights(), k.capacity())) {
        valid = false;
      } else if (cut.exact_lifting &&
                 oracle::FacetRank(cut.coeffs, cut.rhs, k.weights(),
                                   k.capacity()) != k.n()) {
        facets = false;
      }
    }
    if (instance.gubs.has_value()) {
      for (const LiftedCut& cut : Separate(k, x, &*instance.gubs).cuts) {
        if (!oracle::CutValid(cut.coeffs, cut.rhs, k.weights(), k.capacity(),
                              group_of)) {
          gub_valid = false;
        }
      }
    }
  }
  detail << points.size() << " points";
  Add(out, "separation.matches_bruteforce", agree, detail.str());
  Add(out, "cuts.valid", valid);
  Add(out, "cuts.facets", facets);
  if (instance.gubs.has_value()) Add(out, "cuts.gub_valid", gub_valid);
}

}  // namespace

std::vector<CheckResult> VerifyInstance(const Instance& instance,
                                        const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  if (instance.knapsack.has_value()) VerifyKnapsack(instance, opts, out);
  if (instance.network.has_value()) VerifyNetwork(instance, out);
  return out;
}

}  // namespace sparse_lci
