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

#ifndef SPARSE_LCI_STATUS_H_
#define SPARSE_LCI_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparse_lci {

enum class ErrorCode {
  kNonPositiveWeight,
  kWeightExceedsCapacity,
  kTrivialKnapsack,
  kOverflow,
  kOverlappingGroups,
  kUncoveredIndex,
  kTupleOutOfBounds,
  kTupleExceedsClass,
  kDimensionMismatch,
  kInvalidPoint,
  kInvalidNetwork,
  kTooLarge,
  kCertificateInfeasible,
  kNameCollision,
  kInvalidArgument,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported through this exception type. The code
// lets callers (notably the CLI) map failures onto exit statuses.
class LciError : public std::runtime_error {
 public:
  LciError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sparse_lci

#endif  // SPARSE_LCI_STATUS_H_
