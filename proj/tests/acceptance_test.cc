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

// Acceptance battery: one PASS/FAIL line per criterion, each with its own
// sample size and time limit. Exit status is non-zero if any line fails.

#define DOCTEST_CONFIG_DISABLE  // only the random helpers of test_util.h
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sparse_lci/cover_enum.h"
#include "sparse_lci/extended_formulation.h"
#include "sparse_lci/indep_enum.h"
#include "sparse_lci/oracle.h"
#include "sparse_lci/separation.h"
#include "sparse_lci/sorting_network.h"
#include "test_util.h"

using namespace sparse_lci;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message of a criterion.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition && ok_) {
      ok_ = false;
      first_ = what;
    }
    if (!condition) ++failures_;
  }
  Outcome Finish(const std::string& summary) const {
    if (ok_) return {true, summary};
    return {false, first_ + " (" + std::to_string(failures_) + " failures)"};
  }

 private:
  bool ok_ = true;
  int failures_ = 0;
  std::string first_;
};

const Rational kTolerance = Rational(1, 1000000000);

bool Near(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return d <= kTolerance && -d <= kTolerance;
}

Outcome FourWireReplay() {
  Checker c;
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}};
  const ComparisonNetwork net = ComparisonNetwork::FromPairs(4, pairs);
  const ApplyResult r = Apply(net, std::vector<double>{4, 2, 1, 3});
  c.Expect(r.output == std::vector<double>{1, 2, 3, 4}, "output is not (1,2,3,4)");
  // Entry 2 travels over wires 2,1,1,3,3,2 (1-based).
  c.Expect(r.trace.phi[1] == std::vector<int>{1, 0, 0, 2, 2, 1}, "trace of entry 2 differs");
  return c.Finish("output (1,2,3,4), trace 2,1,1,3,3,2");
}

Outcome UnitAndDoubleClasses() {
  Checker c;
  const ClassedKnapsack ck =
      ClassedKnapsack::FromKnapsack(Knapsack::Normalize({1, 1, 1, 1, 1, 2}, 3));
  std::vector<ClassTuple> got;
  for (const CoverClass& cc : AllMinimalCovers(ck)) got.push_back(cc.tuple);
  std::sort(got.begin(), got.end());
  const std::vector<ClassTuple> want = {{2, 1}, {4, 0}};
  c.Expect(got == want, "enumerated classes differ");
  c.Expect(oracle::MinimalCoversBruteforce(ck) == want, "oracle classes differ");
  return c.Finish("classes {(4,0),(2,1)}, oracle agrees");
}

Outcome ThreeFourClass() {
  Checker c;
  const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(
      Knapsack::Normalize({1, 1, 1, 1, 1, 2, 2, 2, 2, 2}, 10));
  c.Expect(IsCover({3, 4}, ck), "(3,4) is not a cover");
  c.Expect(IsMinimalCover({3, 4}, ck), "(3,4) is not minimal");
  return c.Finish("(3,4) is a minimal cover class");
}

Outcome TouchingBoundary() {
  Checker c;
  const std::vector<int64_t> raw = {1, 3, 3, 3, 4};
  const ClassedKnapsack row = ClassedKnapsack::FromRawRow(raw, 3);
  const ClassTuple cover{0, 2, 0};
  const LiftingData l = ComputeLifting(cover, row);
  const IndepEnumeration e = EnumerateIndepClasses(cover, row.classes, l);
  for (const IndepClass& leaf : e.leaves) {
    c.Expect(leaf.tuple != ClassTuple{1, 1, 0}, "(1,1,0) was yielded");
    c.Expect(leaf.tuple != ClassTuple{1, 0, 1}, "(1,0,1) was yielded");
  }
  const JumpGeometry g = JumpGeometry::Build(cover, row.classes, l);
  c.Expect(ClassifyJump({1, 1}, 1, g, l) == JumpVerdict::kRejectedInterior,
           "jump to (1,1,0) not rejected");
  c.Expect(!oracle::IsIndependentExact(cover, {1, 1, 0}, row.classes, l),
           "oracle calls (1,1,0) independent");
  c.Expect(oracle::IsIndependentExact(cover, {1, 0, 1}, row.classes, l),
           "oracle calls (1,0,1) dependent");
  c.Expect(!e.exact, "exact flag set");
  return c.Finish("(1,1,0) rejected, (1,0,1) not yielded, exact = false");
}

Outcome SeparationEquivalence() {
  Checker c;
  std::mt19937_64 rng(1001);
  const int instances = 500, points = 5;
  int violated = 0, inexact = 0;
  for (int t = 0; t < instances; ++t) {
    const Knapsack k = testing::RandomKnapsack(rng, 12, 3, 30);
    for (int p = 0; p < points; ++p) {
      const std::vector<double> x = testing::RandomFractional(rng, k.n());
      const SeparationResult r = Separate(k, x);
      inexact += r.stats.inexact_covers > 0;
      const std::optional<oracle::ExplicitCut> best = oracle::SeparateBruteforce(k, x);
      const bool oracle_violated = best.has_value() && best->violation > kTolerance;
      c.Expect(oracle_violated == !r.cuts.empty(), "violated-cut verdicts differ");
      if (oracle_violated && !r.cuts.empty()) {
        c.Expect(Near(r.cuts[0].violation, best->violation), "maximum violations differ");
        ++violated;
      }
    }
  }
  std::ostringstream s;
  s << instances << " instances x " << points << " points, " << violated
    << " violated, " << inexact << " with inexact jump search";
  return c.Finish(s.str());
}

Outcome ValidityAndFacets() {
  Checker c;
  std::mt19937_64 rng(1002);
  const int instances = 200;
  int cuts = 0, facets = 0;
  for (int t = 0; t < instances; ++t) {
    const Knapsack k = testing::RandomKnapsack(rng, 12, 3, 30);
    for (int p = 0; p < 3; ++p) {
      const SeparationResult r = Separate(k, testing::RandomFractional(rng, k.n()));
      for (const LiftedCut& cut : r.cuts) {
        ++cuts;
        c.Expect(oracle::CutValid(cut.coeffs, cut.rhs, k.weights(), k.capacity()),
                 "invalid cut");
        if (cut.exact_lifting) {
          ++facets;
          c.Expect(oracle::FacetRank(cut.coeffs, cut.rhs, k.weights(), k.capacity()) == k.n(),
                   "cut with exact lifting is not a facet");
        }
      }
    }
  }
  std::ostringstream s;
  s << instances << " instances, " << cuts << " cuts valid, " << facets
    << " facet ranks checked";
  return c.Finish(s.str());
}

Outcome Certificates() {
  Checker c;
  std::mt19937_64 rng(1003);
  const int triples = 1000;
  for (int t = 0; t < triples; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const ComparisonNetwork net = t % 2 ? InsertionNetwork(n) : OddEvenNetwork(n);
    std::vector<double> x = testing::RandomPoint(rng, n);
    std::vector<Rational> v(n);
    Rational level = 0;
    for (Rational& value : v) {
      if (rng() % 3) level += Rational(static_cast<int64_t>(rng() % 17), 8);
      value = level;
    }
    const DualCertificate cert = BuildDualCertificate(net, x, v);
    std::string why;
    c.Expect(VerifyDualCertificate(net, x, v, cert, &why), "certificate rejected: " + why);
    std::sort(x.begin(), x.end());
    Rational want = 0;
    for (int l = 0; l < n; ++l) want += v[l] * ToRational(x[l]);
    c.Expect(cert.objective == want, "objective differs from the sorted sum");
  }
  return c.Finish(std::to_string(triples) + " triples verified exactly");
}

Outcome Membership() {
  Checker c;
  std::mt19937_64 rng(1004);
  int triples = 0, outside = 0;
  while (triples < 200) {
    const Knapsack k = testing::RandomKnapsack(rng, 12, 3, 30);
    const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(k);
    const std::vector<CoverClass> covers = AllMinimalCovers(ck);
    const CoverClass& cover = covers[rng() % covers.size()];
    const LiftingData l = ComputeLifting(cover.tuple, ck);
    const std::optional<IndepEnumeration> e =
        EnumerateIndepClassesDynamic(cover.tuple, ck.classes, l, 1 << 20);
    if (!e.has_value()) continue;
    const ClassTuple& s = e->leaves[rng() % e->leaves.size()].tuple;
    const std::vector<double> x = testing::RandomPoint(rng, k.n());
    const MembershipReport m = EfMembership(k, cover.tuple, s, x);
    const oracle::ExplicitCut best = oracle::BestClassMember(cover.tuple, s, ck.classes, l, x);
    c.Expect(m.member == (best.violation <= 0), "membership disagrees with enumeration");
    outside += !m.member;
    ++triples;
  }
  std::ostringstream s;
  s << triples << " triples, " << outside << " outside the class polytope";
  return c.Finish(s.str());
}

Outcome Orbisack() {
  Checker c;
  for (int n = 1; n <= 10; ++n) {
    c.Expect(EnumerateOrbisackLcis(n).size() == (size_t{1} << (n - 1)),
             "wrong cut count at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 8; ++n) {
    const std::vector<OrbisackCut> cuts = EnumerateOrbisackLcis(n);
    int accepted = 0;
    for (uint32_t a = 0; a < (1u << n); ++a) {
      for (uint32_t b = 0; b < (1u << n); ++b) {
        OrbisackMatrix x(n);
        for (int i = 0; i < n; ++i) {
          x[i] = {static_cast<double>((a >> (n - 1 - i)) & 1u),
                  static_cast<double>((b >> (n - 1 - i)) & 1u)};
        }
        const bool lex = a >= b;
        const bool ef = OrbisackPointCheck({n, n}, x);
        bool all = true;
        for (const OrbisackCut& cut : cuts) all = all && OrbisackCutSatisfied(cut, x);
        c.Expect(ef == lex, "formulation check wrong at n=" + std::to_string(n));
        c.Expect(all == ef, "cuts and formulation disagree at n=" + std::to_string(n));
        accepted += ef;
      }
    }
    c.Expect(accepted == (1 << n) * ((1 << n) + 1) / 2,
             "accepted count wrong at n=" + std::to_string(n));
  }
  return c.Finish("2^(n-1) cuts for n=1..10, vertex check exact for n<=8");
}

Outcome ZeroOne() {
  Checker c;
  for (int m = 1; m <= 12; ++m) {
    c.Expect(IsSortingNetwork(InsertionNetwork(m)), "insertion fails at m=" + std::to_string(m));
    c.Expect(IsSortingNetwork(OddEvenNetwork(m)), "odd-even fails at m=" + std::to_string(m));
    c.Expect(InsertionNetwork(m).size() == m * (m - 1) / 2,
             "insertion count wrong at m=" + std::to_string(m));
  }
  return c.Finish("both constructions sort for m<=12");
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "four-wire network replay", 1.0, FourWireReplay},
      {2, "classes of the unit-and-double row", 10.0, UnitAndDoubleClasses},
      {3, "(3,4) minimal cover class", 1.0, ThreeFourClass},
      {4, "touching-boundary edge case", 10.0, TouchingBoundary},
      {5, "exact separation equals brute force", 300000.0, SeparationEquivalence},
      {6, "cut validity and facets", 300000.0, ValidityAndFacets},
      {7, "dual certificates", 60000.0, Certificates},
      {8, "class membership", 120000.0, Membership},
      {9, "orbisack counts and vertex check", 60000.0, Orbisack},
      {10, "zero-one sorting", 30000.0, ZeroOne},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s [%d] %s: %s; %.3f ms (limit %.0f ms)%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str(), ms, c.limit_ms, in_time ? "" : " TOO SLOW");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
