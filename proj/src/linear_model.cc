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

#include "sparse_lci/linear_model.h"

#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "sparse_lci/status.h"

namespace sparse_lci {
namespace {

bool IsLpName(const std::string& name) {
  if (name.empty() || name.size() > 255) return false;
  const unsigned char first = name[0];
  if (std::isdigit(first) || first == '.' || first == 'e' || first == 'E') {
    return false;
  }
  for (unsigned char c : name) {
    if (!(std::isalnum(c) || c == '_' || c == '.')) return false;
  }
  return true;
}

std::string FormatNumber(const Rational& value) {
  const BigInt num = numerator(value);
  BigInt den = denominator(value);
  if (den == 1) return num.str();
  // Terminating decimal iff den = 2^a 5^b.
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den == 1) {
    const int digits = std::max(twos, fives);
    BigInt scale = 1;
    for (int d = 0; d < digits; ++d) scale *= 10;
    BigInt scaled = num * scale / denominator(value);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string text = scaled.str();
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
    return negative ? "-" + text : text;
  }
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", ToDouble(value));
  return buffer;
}

std::string FormatExpression(const LinearModel& model,
                             const std::vector<Term>& terms) {
  std::ostringstream out;
  int on_line = 0;
  for (size_t t = 0; t < terms.size(); ++t) {
    const Rational& c = terms[t].coeff;
    const std::string& name = model.variables[terms[t].var].name;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (t == 0) {
      if (negative) out << "- ";
    } else {
      if (on_line == 8) {
        out << "\n   ";
        on_line = 0;
      }
      out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << FormatNumber(magnitude) << ' ';
    out << name;
    ++on_line;
  }
  return out.str();
}

}  // namespace

int LinearModel::AddVariable(std::string name, std::optional<Rational> lower,
                             std::optional<Rational> upper) {
  variables.push_back({std::move(name), std::move(lower), std::move(upper)});
  return static_cast<int>(variables.size()) - 1;
}

void LinearModel::AddConstraint(std::string name, std::vector<Term> terms,
                                Sense sense, Rational rhs) {
  constraints.push_back(
      {std::move(name), std::move(terms), sense, std::move(rhs)});
}

int LinearModel::FindVariable(const std::string& name) const {
  for (size_t v = 0; v < variables.size(); ++v) {
    if (variables[v].name == name) return static_cast<int>(v);
  }
  return -1;
}

const Constraint* LinearModel::FindConstraint(const std::string& name) const {
  for (const Constraint& c : constraints) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void LinearModel::Validate() const {
  std::set<std::string> seen;
  for (const Variable& v : variables) {
    if (!IsLpName(v.name)) {
      throw LciError(ErrorCode::kInvalidArgument,
                     "invalid variable name '" + v.name + "'");
    }
    if (!seen.insert(v.name).second) {
      throw LciError(ErrorCode::kNameCollision,
                     "duplicate variable name '" + v.name + "'");
    }
  }
  std::set<std::string> rows;
  auto check_terms = [&](const std::vector<Term>& terms, const std::string& row) {
    for (const Term& t : terms) {
      if (t.var < 0 || t.var >= static_cast<int>(variables.size())) {
        throw LciError(ErrorCode::kInvalidArgument,
                       "row '" + row + "' references an undeclared variable");
      }
    }
  };
  check_terms(objective, "obj");
  for (const Constraint& c : constraints) {
    if (!IsLpName(c.name)) {
      throw LciError(ErrorCode::kInvalidArgument,
                     "invalid constraint name '" + c.name + "'");
    }
    if (!rows.insert(c.name).second) {
      throw LciError(ErrorCode::kNameCollision,
                     "duplicate constraint name '" + c.name + "'");
    }
    if (c.terms.empty()) {
      throw LciError(ErrorCode::kInvalidArgument,
                     "constraint '" + c.name + "' has no terms");
    }
    check_terms(c.terms, c.name);
  }
}

std::string WriteLp(const LinearModel& model) {
  model.Validate();
  std::ostringstream out;
  for (const std::string& note : model.notes) out << "\\ " << note << '\n';
  out << (model.minimize ? "Minimize" : "Maximize") << '\n';
  out << " obj:";
  if (!model.objective.empty()) out << ' ' << FormatExpression(model, model.objective);
  out << '\n';
  out << "Subject To\n";
  for (const Constraint& c : model.constraints) {
    const char* sense = c.sense == Sense::kLessEqual  ? "<="
                        : c.sense == Sense::kEqual    ? "="
                                                      : ">=";
    out << ' ' << c.name << ": " << FormatExpression(model, c.terms) << ' '
        << sense << ' ' << FormatNumber(c.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables) {
    if (!v.lower.has_value() && !v.upper.has_value()) {
      out << ' ' << v.name << " free\n";
    } else if (!v.lower.has_value()) {
      out << " -inf <= " << v.name << " <= " << FormatNumber(*v.upper) << '\n';
    } else if (!v.upper.has_value()) {
      out << ' ' << v.name << " >= " << FormatNumber(*v.lower) << '\n';
    } else {
      out << ' ' << FormatNumber(*v.lower) << " <= " << v.name
          << " <= " << FormatNumber(*v.upper) << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace sparse_lci
