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

#include "sparse_lci/exact_point.h"

#include <algorithm>
#include <cmath>

#include "sparse_lci/status.h"

namespace sparse_lci {
namespace {

// value = mantissa * 2^(-denominator_exponent), mantissa integral.
struct Dyadic {
  int64_t mantissa = 0;
  int denominator_exponent = 0;
};

Dyadic Decompose(double value) {
  if (!std::isfinite(value)) {
    throw LciError(ErrorCode::kInvalidArgument, "non-finite value");
  }
  if (value == 0.0) return {};
  int exp2 = 0;
  const double fraction = std::frexp(value, &exp2);  // value = f * 2^exp2
  Dyadic d;
  d.mantissa = static_cast<int64_t>(std::ldexp(fraction, 53));
  d.denominator_exponent = 53 - exp2;
  // Strip trailing zero bits to keep the grid coarse.
  while (d.mantissa % 2 == 0 && d.denominator_exponent > 0) {
    d.mantissa /= 2;
    --d.denominator_exponent;
  }
  return d;
}

BigInt OnGrid(const Dyadic& d, int exponent) {
  BigInt result = d.mantissa;
  const int shift = exponent - d.denominator_exponent;
  if (shift < 0) {
    throw LciError(ErrorCode::kInvalidArgument,
                   "value not representable on the scaled grid");
  }
  result <<= shift;
  return result;
}

}  // namespace

Rational ToRational(double value) {
  const Dyadic d = Decompose(value);
  if (d.denominator_exponent >= 0) {
    return Rational(BigInt(d.mantissa), BigInt(1) << d.denominator_exponent);
  }
  return Rational(BigInt(d.mantissa) << -d.denominator_exponent);
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

ScaledPoint::ScaledPoint(std::span<const double> values,
                         std::span<const double> extra) {
  std::vector<Dyadic> parts;
  parts.reserve(values.size());
  for (double v : values) {
    parts.push_back(Decompose(v));
    exponent_ = std::max(exponent_, parts.back().denominator_exponent);
  }
  for (double v : extra) {
    exponent_ = std::max(exponent_, Decompose(v).denominator_exponent);
  }
  numerators_.reserve(parts.size());
  for (const Dyadic& d : parts) numerators_.push_back(OnGrid(d, exponent_));
}

BigInt ScaledPoint::Scale(double value) const {
  return OnGrid(Decompose(value), exponent_);
}

BigInt ScaledPoint::ScaleInteger(int64_t value) const {
  return BigInt(value) << exponent_;
}

Rational ScaledPoint::Unscale(const BigInt& scaled) const {
  return Rational(scaled, BigInt(1) << exponent_);
}

}  // namespace sparse_lci
