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

#ifndef SPARSE_LCI_VERIFY_H_
#define SPARSE_LCI_VERIFY_H_

// Cross-check battery run by the `verify` command: library results against
// the brute-force oracle on one instance file.

#include <cstdint>
#include <string>
#include <vector>

#include "sparse_lci/instance_io.h"

namespace sparse_lci {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  int random_points = 5;  // in addition to the points of the file
};

// Knapsack checks need at most oracle::kMaxCoverItems items (kTooLarge
// otherwise); network checks need a sorting-network-sized wire count for the
// zero-one test.
std::vector<CheckResult> VerifyInstance(const Instance& instance,
                                        const VerifyOptions& opts = {});

}  // namespace sparse_lci

#endif  // SPARSE_LCI_VERIFY_H_
