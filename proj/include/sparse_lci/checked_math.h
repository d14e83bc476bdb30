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

#ifndef SPARSE_LCI_CHECKED_MATH_H_
#define SPARSE_LCI_CHECKED_MATH_H_

#include <cstdint>

#include "sparse_lci/status.h"

namespace sparse_lci {

inline int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t result;
  if (__builtin_add_overflow(a, b, &result)) {
    throw LciError(ErrorCode::kOverflow, "64-bit addition overflow");
  }
  return result;
}

inline int64_t CheckedSub(int64_t a, int64_t b) {
  int64_t result;
  if (__builtin_sub_overflow(a, b, &result)) {
    throw LciError(ErrorCode::kOverflow, "64-bit subtraction overflow");
  }
  return result;
}

inline int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t result;
  if (__builtin_mul_overflow(a, b, &result)) {
    throw LciError(ErrorCode::kOverflow, "64-bit multiplication overflow");
  }
  return result;
}

// Ceiling division for a positive divisor.
inline int64_t CeilDiv(int64_t numerator, int64_t divisor) {
  const int64_t q = numerator / divisor;
  const int64_t r = numerator % divisor;
  return (r > 0) ? q + 1 : q;
}

}  // namespace sparse_lci

#endif  // SPARSE_LCI_CHECKED_MATH_H_
