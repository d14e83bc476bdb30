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

#ifndef SPARSE_LCI_CLI_H_
#define SPARSE_LCI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sparse_lci {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitTooLarge = 3;
inline constexpr int kExitVerifyFailed = 4;

// Runs the command line; args excludes the program name. Data goes to `out`
// (or the -o file), diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_CLI_H_
