//
// Copyright 2026 The edgeldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "edgeldp/cycle_estimator.h"
#include "edgeldp/exact_counts.h"
#include "edgeldp/experiments.h"
#include "edgeldp/generators.h"
#include "edgeldp/graph.h"
#include "edgeldp/serialization.h"
#include "edgeldp/triangle_estimator.h"

namespace edgeldp::cli {
namespace {

struct Flags {
  std::string graph_path;
  std::string gen;
  double eps0 = 0.5;
  double eps1 = 1.0;
  double eps2 = 1.0;
  double zeta = 0.05;
  std::optional<double> eps_total;
  int k = 5;
  std::size_t trials = 100;
  std::size_t orderings = 100;
  std::uint64_t seed = 0;
  std::string mode = "noisy";
  std::string task = "triangles";
  std::string n_list;
  std::string out_path;
  std::string format;
  int threads = 1;
};

int ExitFor(const absl::Status& status, std::ostream& err) {
  err << "error: " << status.message() << "\n";
  return status.code() == absl::StatusCode::kResourceExhausted ? kExitResourceLimit
                                                               : kExitInvalid;
}

void AddGraphFlags(CLI::App* cmd, Flags& f) {
  auto* graph = cmd->add_option("--graph", f.graph_path, "Edge-list file");
  auto* gen = cmd->add_option("--gen", f.gen, "Generator: er:<n>:<p> | ba:<n>:<m0> | ktree:<n>:<k>");
  graph->excludes(gen);
}

void AddOutputFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out_path, "Write the result to this file instead of stdout");
  cmd->add_option("--format", f.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

void AddBudgetFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--eps0", f.eps0, "Budget for noisy degrees");
  cmd->add_option("--eps1", f.eps1, "Budget for randomized response");
  cmd->add_option("--eps2", f.eps2, "Budget for the local-count Laplace query");
  cmd->add_option("--zeta", f.zeta, "Clipping failure probability in (0, 1]");
  cmd->add_option("--eps", f.eps_total, "Declared total budget; eps0 + eps1 + eps2 must not exceed it");
  cmd->add_option("--mode", f.mode, "noisy | no-noise (no-noise is a test mode, not private)")
      ->check(CLI::IsMember({"noisy", "no-noise"}));
}

void AddRunFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--threads", f.threads, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
}

absl::StatusOr<Graph> ResolveGraph(const Flags& f, std::ostream& err) {
  GraphSource source;
  if (!f.gen.empty()) {
    auto spec = ParseGeneratorSpec(f.gen);
    if (!spec.ok()) return spec.status();
    source.generator = *spec;
  } else if (!f.graph_path.empty()) {
    source.path = f.graph_path;
  } else {
    return absl::InvalidArgumentError("one of --graph or --gen is required");
  }
  std::vector<std::string> warnings;
  auto graph = LoadGraphSource(source, f.seed, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return graph;
}

absl::StatusOr<PrivacyBudget> ResolveBudget(const Flags& f) {
  auto budget = PrivacyBudget::Create(f.eps0, f.eps1, f.eps2, f.zeta);
  if (!budget.ok()) return budget.status();
  if (f.eps_total.has_value()) {
    if (auto status = CheckBudget(*budget, *f.eps_total); !status.ok()) return status;
  }
  return budget;
}

absl::StatusOr<NoiseMode> ResolveMode(const Flags& f, std::ostream& err) {
  auto mode = ParseNoiseMode(f.mode);
  if (mode.ok() && *mode == NoiseMode::kNoNoise) {
    err << "WARNING: no-noise mode; every mechanism is the identity and the "
           "output is NOT differentially private\n";
  }
  return mode;
}

absl::Status Emit(const Flags& f, const std::string& text, std::ostream& out) {
  if (f.out_path.empty()) {
    out << text;
    return absl::OkStatus();
  }
  std::ofstream file(f.out_path, std::ios::binary);
  if (!file) return absl::InvalidArgumentError(absl::StrCat("cannot write ", f.out_path));
  file << text;
  if (!file) return absl::DataLossError(absl::StrCat("write failed for ", f.out_path));
  return absl::OkStatus();
}

bool WantsCsv(const Flags& f, bool csv_default) {
  return f.format.empty() ? csv_default : f.format == "csv";
}

absl::Status JsonOnly(const Flags& f, std::string_view command) {
  if (f.format == "csv") {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(command), " supports only --format json"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> RunStats(const Flags& f, std::ostream& err) {
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  const GraphStats s = ComputeGraphStats(*graph);
  if (WantsCsv(f, false)) {
    return absl::StrCat("n,m,max_degree,degeneracy,chiba_sum\n", s.n, ",", s.m, ",",
                        s.max_degree, ",", s.degeneracy, ",", s.chiba_sum, "\n");
  }
  return GraphStatsToJson(s);
}

absl::StatusOr<std::string> RunCountExact(const Flags& f, std::ostream& err) {
  if (auto status = JsonOnly(f, "count-exact"); !status.ok()) return status;
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  auto counts = ComputeExactCounts(*graph, f.k);
  if (!counts.ok()) return counts.status();
  return ExactCountsToJson(*counts);
}

absl::StatusOr<std::string> RunEstimate(const Flags& f, Task task, std::ostream& err) {
  auto budget = ResolveBudget(f);
  if (!budget.ok()) return budget.status();
  auto mode = ResolveMode(f, err);
  if (!mode.ok()) return mode.status();
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  EstimatorOptions options;
  options.budget = *budget;
  options.seed = f.seed;
  options.mode = *mode;
  options.threads = f.threads;
  auto report = task == Task::kTriangles ? EstimateTriangles(*graph, options)
                                         : EstimateOddCycles(*graph, f.k, options);
  if (!report.ok()) return report.status();
  return WantsCsv(f, false) ? ReportToCsv(*report) : ReportToJson(*report);
}

absl::StatusOr<TrialConfig> ResolveTrialConfig(const Flags& f, std::ostream& err) {
  TrialConfig config;
  auto task = ParseTask(f.task);
  if (!task.ok()) return task.status();
  config.task = *task;
  config.k = config.task == Task::kTriangles ? 3 : f.k;
  auto budget = ResolveBudget(f);
  if (!budget.ok()) return budget.status();
  config.budget = *budget;
  auto mode = ResolveMode(f, err);
  if (!mode.ok()) return mode.status();
  config.mode = *mode;
  config.trials = f.trials;
  config.seed = f.seed;
  config.threads = f.threads;
  return config;
}

absl::StatusOr<std::string> RunExperiment(const Flags& f, std::ostream& err) {
  auto config = ResolveTrialConfig(f, err);
  if (!config.ok()) return config.status();
  ExperimentConfig experiment;
  experiment.run = *config;
  experiment.eps_total = f.eps_total;
  if (!f.gen.empty()) {
    auto spec = ParseGeneratorSpec(f.gen);
    if (!spec.ok()) return spec.status();
    experiment.source.generator = *spec;
  } else {
    experiment.source.path = f.graph_path;
  }
  if (auto status = ValidateConfig(experiment); !status.ok()) return status;
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  auto summary = RunTrials(*graph, experiment.run);
  if (!summary.ok()) return summary.status();
  return WantsCsv(f, true) ? TrialSummaryToCsv(*summary) : TrialSummaryToJson(*summary);
}

absl::StatusOr<std::string> RunErrorScaling(const Flags& f, std::ostream& err) {
  auto config = ResolveTrialConfig(f, err);
  if (!config.ok()) return config.status();
  if (f.gen.empty()) return absl::InvalidArgumentError("error-scaling requires --gen");
  auto spec = ParseGeneratorSpec(f.gen);
  if (!spec.ok()) return spec.status();
  std::vector<std::size_t> sizes;
  std::vector<std::string> tokens = absl::StrSplit(f.n_list, ',', absl::SkipEmpty());
  for (const auto& token : tokens) {
    std::uint64_t n = 0;
    if (!absl::SimpleAtoi(token, &n)) {
      return absl::InvalidArgumentError(absl::StrCat("bad --n-list entry '", token, "'"));
    }
    sizes.push_back(n);
  }
  auto report = ErrorScaling(*spec, sizes, *config);
  if (!report.ok()) return report.status();
  if (WantsCsv(f, true)) {
    // The CSV body is per-size rows only; the fit goes to the diagnostics.
    if (report->slope.has_value()) {
      err << absl::StrFormat("log-log rmse slope: %.6f\n", *report->slope);
    } else {
      err << "log-log rmse slope: undefined" << (report->exact ? " (exact at every n)" : "")
          << "\n";
    }
  }
  return WantsCsv(f, true) ? ScalingReportToCsv(*report) : ScalingReportToJson(*report);
}

absl::StatusOr<std::string> RunVerifyBounds(const Flags& f, std::ostream& err) {
  if (auto status = JsonOnly(f, "verify-bounds"); !status.ok()) return status;
  auto mode = ResolveMode(f, err);
  if (!mode.ok()) return mode.status();
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  auto report = VerifyBounds(*graph, f.orderings, f.eps0, f.seed, *mode);
  if (!report.ok()) return report.status();
  return BoundReportToJson(*report);
}

absl::StatusOr<std::string> RunGenGraph(const Flags& f, std::ostream& err) {
  if (f.gen.empty()) return absl::InvalidArgumentError("gen-graph requires --gen");
  auto graph = ResolveGraph(f, err);
  if (!graph.ok()) return graph.status();
  return SerializeEdgeList(*graph);
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-LDP subgraph counting simulator", "edgeldp"};
  app.require_subcommand(1);
  Flags f;

  auto* stats = app.add_subcommand("stats", "Degree, degeneracy and Chiba-Nishizeki statistics");
  AddGraphFlags(stats, f);
  AddRunFlags(stats, f);
  AddOutputFlags(stats, f);

  auto* count = app.add_subcommand("count-exact", "Brute-force subgraph counts");
  AddGraphFlags(count, f);
  AddRunFlags(count, f);
  AddOutputFlags(count, f);
  count->add_option("--k", f.k, "Longest path/cycle length to count")->check(CLI::Range(3, 9));

  auto* tri = app.add_subcommand("estimate-triangles", "One private triangle estimate");
  AddGraphFlags(tri, f);
  AddBudgetFlags(tri, f);
  AddRunFlags(tri, f);
  AddOutputFlags(tri, f);

  auto* cyc = app.add_subcommand("estimate-cycles", "One private odd k-cycle estimate");
  AddGraphFlags(cyc, f);
  AddBudgetFlags(cyc, f);
  AddRunFlags(cyc, f);
  AddOutputFlags(cyc, f);
  cyc->add_option("--k", f.k, "Odd cycle length >= 5");

  auto* exp = app.add_subcommand("experiment", "Monte-Carlo trials against the exact count");
  AddGraphFlags(exp, f);
  AddBudgetFlags(exp, f);
  AddRunFlags(exp, f);
  AddOutputFlags(exp, f);
  exp->add_option("--task", f.task, "triangles | cycles");
  exp->add_option("--k", f.k, "Odd cycle length >= 5 (cycles task)");
  exp->add_option("--trials", f.trials, "Number of trials")->check(CLI::PositiveNumber);

  auto* scale = app.add_subcommand("error-scaling", "RMSE versus n with a log-log slope fit");
  AddGraphFlags(scale, f);
  AddBudgetFlags(scale, f);
  AddRunFlags(scale, f);
  AddOutputFlags(scale, f);
  scale->add_option("--task", f.task, "triangles | cycles");
  scale->add_option("--k", f.k, "Odd cycle length >= 5 (cycles task)");
  scale->add_option("--trials", f.trials, "Trials per graph size")->check(CLI::PositiveNumber);
  scale->add_option("--n-list", f.n_list, "Comma-separated ascending graph sizes")->required();

  auto* bounds = app.add_subcommand("verify-bounds", "Ordered-structure bounds under noisy orderings");
  AddGraphFlags(bounds, f);
  AddRunFlags(bounds, f);
  AddOutputFlags(bounds, f);
  bounds->add_option("--eps0", f.eps0, "Budget for noisy degrees");
  bounds->add_option("--orderings", f.orderings, "Independent orderings")->check(CLI::PositiveNumber);
  bounds->add_option("--mode", f.mode, "noisy | no-noise")->check(CLI::IsMember({"noisy", "no-noise"}));

  auto* gen = app.add_subcommand("gen-graph", "Write a generated graph as an edge list");
  AddGraphFlags(gen, f);
  AddRunFlags(gen, f);
  AddOutputFlags(gen, f);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  absl::StatusOr<std::string> result = absl::InternalError("no subcommand");
  if (stats->parsed()) result = RunStats(f, err);
  else if (count->parsed()) result = RunCountExact(f, err);
  else if (tri->parsed()) result = RunEstimate(f, Task::kTriangles, err);
  else if (cyc->parsed()) result = RunEstimate(f, Task::kCycles, err);
  else if (exp->parsed()) result = RunExperiment(f, err);
  else if (scale->parsed()) result = RunErrorScaling(f, err);
  else if (bounds->parsed()) result = RunVerifyBounds(f, err);
  else if (gen->parsed()) result = RunGenGraph(f, err);

  if (!result.ok()) return ExitFor(result.status(), err);
  if (auto status = Emit(f, *result, out); !status.ok()) return ExitFor(status, err);
  return kExitOk;
}

}  // namespace edgeldp::cli
