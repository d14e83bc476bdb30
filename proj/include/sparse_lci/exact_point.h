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

#ifndef SPARSE_LCI_EXACT_POINT_H_
#define SPARSE_LCI_EXACT_POINT_H_

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparse_lci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational value of a finite double.
Rational ToRational(double value);
double ToDouble(const Rational& value);

// A vector of doubles promoted exactly onto a common dyadic grid: entry i
// equals numerator(i) / 2^exponent(). Additional values (tolerances) can be
// put on the same grid so that all comparisons are integer comparisons.
class ScaledPoint {
 public:
  ScaledPoint(std::span<const double> values, std::span<const double> extra);

  int size() const { return static_cast<int>(numerators_.size()); }
  const BigInt& numerator(int i) const { return numerators_[i]; }
  int exponent() const { return exponent_; }

  // value * 2^exponent; value must be one of the `extra` values passed at
  // construction or otherwise representable on the grid.
  BigInt Scale(double value) const;
  BigInt ScaleInteger(int64_t value) const;
  Rational Unscale(const BigInt& scaled) const;

 private:
  std::vector<BigInt> numerators_;
  int exponent_ = 0;
};

}  // namespace sparse_lci

#endif  // SPARSE_LCI_EXACT_POINT_H_
