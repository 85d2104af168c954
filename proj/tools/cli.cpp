// Copyright 2026 The pirlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <vector>

#include "pir/error.hpp"
#include "pir/rate.hpp"
#include "pir/reference.hpp"
#include "pir/report.hpp"
#include "pir/scheme_io.hpp"
#include "pir/simulation.hpp"

namespace pir::cli {
namespace {

struct Options {
  std::size_t servers = 0;
  std::size_t messages = 0;
  std::size_t collusion_size = 1;
  std::string out_path;
  std::string scheme_path;
  std::vector<std::size_t> collusion;
  bool crosscheck = false;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> colluding;
};

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kNotPrime: return kExitNotPrime;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kParse:
    case ErrorCode::kInvalidScheme: return kExitBadScheme;
    case ErrorCode::kCorrectnessUnavailable: return kExitNoDecoder;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidCollusion: return kExitUsage;
    default: return kExitCheckFailed;
  }
}

SchemeTable Load(const std::string& path) {
  try {
    return ReadSchemeFile(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidScheme) {
      throw;
    }
    // Unreadable file, or a NotPrime surfacing from the table: both mean the
    // scheme file is unusable.
    throw Error(ErrorCode::kInvalidScheme, e.what());
  }
}

int GenReference(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.messages < 2) {
    err << "pirlab: --messages must be at least 2\n";
    return kExitUsage;
  }
  const ReferenceScheme scheme = BuildReferenceScheme(o.servers, o.messages);
  if (o.out_path.empty() || o.out_path == "-") {
    out << SerializeScheme(scheme.table);
  } else {
    WriteSchemeFile(o.out_path, scheme.table);
  }
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::uint64_t budget = 0;
  try {
    budget = EnumerationBudgetFromEnvironment();
  } catch (const Error& e) {
    err << "pirlab: " << e.what() << '\n';
    return kExitUsage;
  }
  const SchemeTable table = Load(o.scheme_path);
  ReportOptions options{o.collusion, o.crosscheck, budget};
  const VerificationReport report = FullReport(table, options);
  out << RenderReport(report);
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int Retrieve(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeTable table = Load(o.scheme_path);
  if (o.index < 1 || o.index > table.messages()) {
    err << "pirlab: --index must be in [1:" << table.messages() << "]\n";
    return kExitUsage;
  }
  const SimulationTrace trace = SimulateRetrieval(table, o.index, o.seed);
  out << RenderTrace(trace);
  return std::get<Decoded>(trace.events.back()).matches ? kExitOk
                                                        : kExitCheckFailed;
}

int Adversary(const Options& o, std::ostream& out, std::ostream&) {
  const SchemeTable table = Load(o.scheme_path);
  out << RenderAdversary(SimulateAdversary(table, o.colluding, o.seed));
  return kExitOk;
}

int Capacity(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.messages < 1) {
    err << "pirlab: --messages must be at least 1\n";
    return kExitUsage;
  }
  const Rational c = CapacityFormula(o.servers, o.messages, o.collusion_size);
  out << ToString(c) << " ≈ " << ToDecimal(c, 6) << '\n';
  return kExitOk;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Finite-field PIR scheme generator and verifier", "pirlab"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand(
      "gen-reference", "Write the capacity-achieving reference scheme");
  gen->add_option("--servers", o.servers, "Server count S (prime)")->required();
  gen->add_option("--messages", o.messages, "Message count M")->required();
  gen->add_option("--out", o.out_path, "Output path ('-' for stdout)");

  auto* verify = app.add_subcommand(
      "verify", "Check correctness, privacy and capacity conditions");
  verify->add_option("scheme", o.scheme_path, "Scheme file")->required();
  verify->add_option("--collusion", o.collusion, "Colluding-set sizes T")
      ->delimiter(',');
  verify->add_flag("--crosscheck", o.crosscheck,
                   "Compare enumerated entropies with rank formulas");

  auto* retrieve = app.add_subcommand(
      "retrieve", "Simulate one seeded retrieval and print its trace");
  retrieve->add_option("scheme", o.scheme_path, "Scheme file")->required();
  retrieve->add_option("--index", o.index, "Desired message m")->required();
  retrieve->add_option("--seed", o.seed, "PRNG seed");

  auto* adversary = app.add_subcommand(
      "adversary", "Posterior over m seen by a colluding set of servers");
  adversary->add_option("scheme", o.scheme_path, "Scheme file")->required();
  adversary->add_option("--collude", o.colluding, "Servers, e.g. 1,2")
      ->delimiter(',')
      ->required();
  adversary->add_option("--seed", o.seed, "PRNG seed");

  auto* capacity = app.add_subcommand("capacity", "Print the capacity formula");
  capacity->add_option("--servers", o.servers, "Server count S")->required();
  capacity->add_option("--messages", o.messages, "Message count M")->required();
  capacity->add_option("--collusion", o.collusion_size, "Colluding-set size T");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pirlab: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return GenReference(o, out, err);
    if (verify->parsed()) return Verify(o, out, err);
    if (retrieve->parsed()) return Retrieve(o, out, err);
    if (adversary->parsed()) return Adversary(o, out, err);
    if (capacity->parsed()) return Capacity(o, out, err);
  } catch (const Error& e) {
    err << "pirlab: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
  return kExitUsage;
}

}  // namespace pir::cli
