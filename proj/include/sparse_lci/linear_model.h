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

#ifndef SPARSE_LCI_LINEAR_MODEL_H_
#define SPARSE_LCI_LINEAR_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include "sparse_lci/exact_point.h"

namespace sparse_lci {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var = 0;
  Rational coeff = 0;
};

struct Variable {
  std::string name;
  std::optional<Rational> lower;  // nullopt: -infinity
  std::optional<Rational> upper;  // nullopt: +infinity
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs = 0;
};

// Variables with bounds, named linear constraints and an optional objective.
// Coefficients are exact rationals.
struct LinearModel {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Term> objective;  // empty: feasibility model
  bool minimize = true;
  // Free-form remarks written as comments at the top of LP files.
  std::vector<std::string> notes;

  int AddVariable(std::string name, std::optional<Rational> lower,
                  std::optional<Rational> upper);
  void AddConstraint(std::string name, std::vector<Term> terms, Sense sense,
                     Rational rhs);
  // -1 if absent. Linear scan; meant for tests and small lookups.
  int FindVariable(const std::string& name) const;
  const Constraint* FindConstraint(const std::string& name) const;

  // Throws kNameCollision on duplicate variable or constraint names, and
  // kInvalidArgument on undeclared variables, empty rows or names that are
  // not LP identifiers.
  void Validate() const;
};

// Deterministic LP-format text: comments, Minimize/Maximize, Subject To,
// Bounds, End. Validates first. Coefficients that are not integers are
// written as exact decimals when the denominator divides a power of ten, else
// with 17 significant digits.
std::string WriteLp(const LinearModel& model);

}  // namespace sparse_lci

#endif  // SPARSE_LCI_LINEAR_MODEL_H_
