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

#include "sparse_lci/cli.h"

#include <fstream>
#include <ostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparse_lci/cover_enum.h"
#include "sparse_lci/extended_formulation.h"
#include "sparse_lci/indep_enum.h"
#include "sparse_lci/instance_io.h"
#include "sparse_lci/linear_model.h"
#include "sparse_lci/separation.h"
#include "sparse_lci/status.h"
#include "sparse_lci/verify.h"

namespace sparse_lci {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string instance;
  std::string point;
  std::string output;
  bool pretty = false;
  std::string order = "forward";
  bool no_gub = false;
  bool conservative = false;
  double tolerance = 1e-9;
  int max_cuts = 0;
  int64_t deadline_ms = 0;
  std::string network = "oddeven";
  std::string cover;
  std::string indep;
  int orbisack_n = 0;
  int max_rows = 0;
  uint64_t seed = 1;
  int random_points = 5;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoverOrder ParseOrder(const std::string& s) {
  if (s == "reverse") return CoverOrder::kReverse;
  if (s == "auto") return CoverOrder::kAuto;
  return CoverOrder::kForward;
}

ClassTuple ParseTuple(const std::string& text, const char* flag) {
  std::vector<int> counts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      counts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects non-negative integers "
                       "separated by commas");
    }
  }
  if (counts.empty()) throw UsageError(std::string(flag) + " is empty");
  return ClassTuple(std::move(counts));
}

std::string PrettyCut(const LiftedCut& cut) {
  std::ostringstream s;
  s << "violation " << ToDouble(cut.violation) << ": ";
  bool first = true;
  for (size_t i = 0; i < cut.coeffs.size(); ++i) {
    if (cut.coeffs[i] == 0) continue;
    if (!first) s << " + ";
    if (cut.coeffs[i] != 1) s << cut.coeffs[i] << ' ';
    s << 'x' << i + 1;
    first = false;
  }
  s << " <= " << cut.rhs << "  [cover " << cut.cover.ToString() << " indep "
    << cut.indep.ToString() << (cut.gub_strengthened ? " gub" : "")
    << (cut.exact_lifting ? "" : " inexact") << "]";
  return s.str();
}

const Knapsack& RequireKnapsack(const Instance& instance) {
  if (!instance.knapsack.has_value()) {
    throw LciError(ErrorCode::kParseError, "instance has no knapsack row");
  }
  return *instance.knapsack;
}

std::string Covers(const RunConfig& cfg) {
  const Instance instance = LoadInstance(cfg.instance);
  const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(RequireKnapsack(instance));
  std::ostringstream out;
  CoverCursor cursor(ck, ParseOrder(cfg.order));
  while (std::optional<CoverClass> c = cursor.Next()) {
    if (cfg.pretty) {
      out << c->tuple.ToString() << "  weight " << c->weight << "  rhs "
          << c->rhs << '\n';
    } else {
      Json j;
      j["cover"] = TupleToJson(c->tuple);
      j["weight"] = c->weight;
      j["rhs"] = c->rhs;
      out << j.dump() << '\n';
    }
  }
  return out.str();
}

std::string Cuts(const RunConfig& cfg) {
  const Instance instance = LoadInstance(cfg.instance);
  const ClassedKnapsack ck = ClassedKnapsack::FromKnapsack(RequireKnapsack(instance));
  std::ostringstream out;
  CoverCursor cursor(ck, ParseOrder(cfg.order));
  while (std::optional<CoverClass> c = cursor.Next()) {
    const LiftingData lifting = ComputeLifting(c->tuple, ck);
    const IndepEnumeration e = EnumerateIndepClasses(c->tuple, ck.classes, lifting);
    for (const IndepClass& leaf : e.leaves) {
      if (cfg.pretty) {
        out << "cover " << c->tuple.ToString() << " indep "
            << leaf.tuple.ToString() << " maximal "
            << (leaf.maximal ? "yes" : "no") << " exact "
            << (e.exact ? "yes" : "no") << '\n';
      } else {
        Json j;
        j["cover"] = TupleToJson(c->tuple);
        j["indep"] = TupleToJson(leaf.tuple);
        j["maximal"] = leaf.maximal;
        j["exact"] = e.exact;
        out << j.dump() << '\n';
      }
    }
  }
  return out.str();
}

std::string SeparateCommand(const RunConfig& cfg, std::ostream& err) {
  const Instance instance = LoadInstance(cfg.instance);
  const Knapsack& k = RequireKnapsack(instance);
  const std::vector<double> x = LoadPoint(cfg.point);
  SeparationOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.max_cuts = cfg.max_cuts;
  opts.deadline_ms = cfg.deadline_ms;
  opts.order = ParseOrder(cfg.order);
  opts.exact_fallback = !cfg.conservative;
  const GubPartition* gubs =
      instance.gubs.has_value() && !cfg.no_gub ? &*instance.gubs : nullptr;
  const SeparationResult res = Separate(k, x, gubs, opts);
  std::ostringstream out;
  if (cfg.pretty) {
    for (const LiftedCut& cut : res.cuts) out << PrettyCut(cut) << '\n';
    out << res.cuts.size() << " violated cuts, " << res.stats.cover_classes
        << " cover classes, " << res.stats.class_pairs << " class pairs"
        << (res.stats.truncated ? ", truncated by deadline" : "") << '\n';
  } else {
    Json list = Json::array();
    for (const LiftedCut& cut : res.cuts) list.push_back(CutToJson(cut));
    out << list.dump() << '\n';
  }
  if (res.stats.truncated) err << "separation truncated by deadline\n";
  return out.str();
}

std::string EfCommand(const RunConfig& cfg) {
  const Instance instance = LoadInstance(cfg.instance);
  const Knapsack& k = RequireKnapsack(instance);
  const NetworkKind kind =
      cfg.network == "insertion" ? NetworkKind::kInsertion : NetworkKind::kOddEven;
  return WriteLp(ClassEf(k, ParseTuple(cfg.cover, "--cover"),
                         ParseTuple(cfg.indep, "--indep"), kind));
}

std::string OrbisackCommand(const RunConfig& cfg) {
  OrbisackSpec spec;
  spec.n = cfg.orbisack_n;
  spec.max_rows = cfg.max_rows > 0 ? cfg.max_rows : cfg.orbisack_n;
  return WriteLp(OrbisackEf(spec));
}

std::string VerifyCommand(const RunConfig& cfg, bool* all_pass) {
  const Instance instance = LoadInstance(cfg.instance);
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.random_points = cfg.random_points;
  const std::vector<CheckResult> checks = VerifyInstance(instance, opts);
  *all_pass = true;
  for (const CheckResult& c : checks) *all_pass = *all_pass && c.pass;
  std::ostringstream out;
  if (cfg.pretty) {
    for (const CheckResult& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
    out << (*all_pass ? "all checks passed" : "some checks failed") << '\n';
  } else {
    Json list = Json::array();
    for (const CheckResult& c : checks) {
      Json j;
      j["name"] = c.name;
      j["pass"] = c.pass;
      j["detail"] = c.detail;
      list.push_back(std::move(j));
    }
    Json report;
    report["checks"] = std::move(list);
    report["pass"] = *all_pass;
    out << report.dump() << '\n';
  }
  return out.str();
}

void AddCommon(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--pretty", cfg.pretty, "Human-readable output");
  sub->add_option("-o,--output", cfg.output, "Write data output to a file");
}

void AddOrder(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--order", cfg.order, "Cover enumeration order")
      ->check(CLI::IsMember({"forward", "reverse", "auto"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lifted cover inequalities for sparse knapsack rows"};
  app.require_subcommand(1);

  CLI::App* covers = app.add_subcommand("covers", "List minimal cover classes");
  covers->add_option("instance", cfg.instance)->required();
  AddOrder(covers, cfg);
  AddCommon(covers, cfg);

  CLI::App* cuts = app.add_subcommand(
      "cuts", "List (cover, independent set) class pairs of the jump search");
  cuts->add_option("instance", cfg.instance)->required();
  AddOrder(cuts, cfg);
  AddCommon(cuts, cfg);

  CLI::App* separate = app.add_subcommand("separate", "Separate a point");
  separate->add_option("instance", cfg.instance)->required();
  separate->add_option("point", cfg.point)->required();
  separate->add_flag("--no-gub", cfg.no_gub, "Ignore the GUBs of the instance");
  separate->add_flag("--conservative", cfg.conservative,
                     "Use only the jump search, no exact fallback");
  separate->add_option("--tolerance", cfg.tolerance, "Violation tolerance")
      ->check(CLI::PositiveNumber);
  separate->add_option("--max-cuts", cfg.max_cuts, "0 means unlimited")
      ->check(CLI::NonNegativeNumber);
  separate->add_option("--deadline-ms", cfg.deadline_ms, "0 means none")
      ->check(CLI::NonNegativeNumber);
  AddOrder(separate, cfg);
  AddCommon(separate, cfg);

  CLI::App* ef = app.add_subcommand("ef", "Write the class formulation as LP");
  ef->add_option("instance", cfg.instance)->required();
  ef->add_option("--cover", cfg.cover, "c1,...,c_sigma")->required();
  ef->add_option("--indep", cfg.indep, "s1,...,s_sigma")->required();
  ef->add_option("--network", cfg.network)
      ->check(CLI::IsMember({"insertion", "oddeven"}));
  AddCommon(ef, cfg);

  CLI::App* orbisack =
      app.add_subcommand("orbisack-ef", "Write the orbisack formulation as LP");
  orbisack->add_option("--n", cfg.orbisack_n, "Rows")
      ->required()
      ->check(CLI::PositiveNumber);
  orbisack->add_option("--max-rows", cfg.max_rows, "Row limit, default n")
      ->check(CLI::PositiveNumber);
  AddCommon(orbisack, cfg);

  CLI::App* verify = app.add_subcommand("verify", "Cross-check against brute force");
  verify->add_option("instance", cfg.instance)->required();
  verify->add_option("--seed", cfg.seed, "Seed of the random points");
  verify->add_option("--random-points", cfg.random_points)
      ->check(CLI::NonNegativeNumber);
  AddCommon(verify, cfg);

  std::vector<const char*> argv = {"sparse-lci"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  std::string data;
  int code = kExitOk;
  try {
    if (covers->parsed()) {
      data = Covers(cfg);
    } else if (cuts->parsed()) {
      data = Cuts(cfg);
    } else if (separate->parsed()) {
      data = SeparateCommand(cfg, err);
    } else if (ef->parsed()) {
      data = EfCommand(cfg);
    } else if (orbisack->parsed()) {
      data = OrbisackCommand(cfg);
    } else if (verify->parsed()) {
      bool pass = false;
      data = VerifyCommand(cfg, &pass);
      if (!pass) code = kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const LciError& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::kTooLarge ? kExitTooLarge : kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << data)) {
      err << "cannot write " << cfg.output << '\n';
      return kExitData;
    }
  } else {
    out << data;
  }
  return code;
}

}  // namespace sparse_lci
