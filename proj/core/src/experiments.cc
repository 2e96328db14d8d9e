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

#include "edgeldp/experiments.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "edgeldp/cycle_estimator.h"
#include "edgeldp/exact_counts.h"
#include "edgeldp/ordering.h"
#include "edgeldp/parallel.h"
#include "edgeldp/triangle_estimator.h"

namespace edgeldp {
namespace {

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanAndError Moments(std::span<const double> values) {
  MeanAndError out;
  if (values.empty()) return out;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1) /
                              static_cast<double>(values.size()));
  }
  return out;
}

absl::StatusOr<EstimateReport> RunOnce(const Graph& graph, const TrialConfig& config,
                                       std::uint64_t trial) {
  EstimatorOptions options;
  options.budget = config.budget;
  options.seed = config.seed;
  options.trial = trial;
  options.mode = config.mode;
  options.threads = 1;
  if (config.task == Task::kTriangles) return EstimateTriangles(graph, options);
  return EstimateOddCycles(graph, config.k, options);
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kTriangles ? "triangles" : "cycles";
}

absl::StatusOr<Task> ParseTask(std::string_view name) {
  if (name == "triangles") return Task::kTriangles;
  if (name == "cycles") return Task::kCycles;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown task '", std::string(name), "'; expected triangles or cycles"));
}

absl::Status ValidateConfig(const ExperimentConfig& config) {
  const bool has_path = !config.source.path.empty();
  if (has_path == config.source.generator.has_value()) {
    return absl::InvalidArgumentError("exactly one of a graph file or a generator is required");
  }
  const TrialConfig& run = config.run;
  if (run.trials < 1) return absl::InvalidArgumentError("trials must be at least 1");
  if (run.task == Task::kCycles && (run.k < 5 || run.k % 2 == 0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("cycle length must be odd and at least 5, got %d", run.k));
  }
  const PrivacyBudget& b = run.budget;
  auto valid = PrivacyBudget::Create(b.eps0, b.eps1, b.eps2, b.zeta);
  if (!valid.ok()) return valid.status();
  if (config.eps_total.has_value()) return CheckBudget(b, *config.eps_total);
  return absl::OkStatus();
}

absl::StatusOr<Graph> LoadGraphSource(const GraphSource& source, std::uint64_t seed,
                                      std::vector<std::string>* warnings) {
  if (source.generator.has_value()) return Generate(*source.generator, seed);
  return LoadEdgeListFile(source.path, warnings);
}

absl::StatusOr<double> ExactCount(const Graph& graph, Task task, int k) {
  if (task == Task::kTriangles) return static_cast<double>(CountTriangles(graph));
  auto count = CountCycles(graph, k);
  if (!count.ok()) return count.status();
  return static_cast<double>(*count);
}

TrialSummary Summarize(double exact, std::span<const double> estimates,
                       std::span<const std::uint8_t> clipped, bool keep_estimates) {
  TrialSummary s;
  s.exact = exact;
  s.trials = estimates.size();
  if (estimates.empty()) return s;
  const MeanAndError m = Moments(estimates);
  s.mean = m.mean;
  s.std_error = m.std_error;
  s.bias = s.mean - exact;
  double sq = 0.0;
  for (double x : estimates) sq += (x - exact) * (x - exact);
  s.rmse = std::sqrt(sq / static_cast<double>(estimates.size()));
  std::size_t any_clipped = 0;
  for (std::uint8_t c : clipped) any_clipped += c != 0;
  s.clipped_fraction = static_cast<double>(any_clipped) / static_cast<double>(estimates.size());
  if (keep_estimates) s.estimates.assign(estimates.begin(), estimates.end());
  return s;
}

absl::StatusOr<TrialSummary> RunTrials(const Graph& graph, const TrialConfig& config) {
  if (config.trials < 1) return absl::InvalidArgumentError("trials must be at least 1");
  auto exact = ExactCount(graph, config.task, config.k);
  if (!exact.ok()) return exact.status();

  std::vector<double> estimates(config.trials);
  std::vector<std::uint8_t> clipped(config.trials);
  std::vector<absl::Status> failures(config.trials);
  ParallelFor(config.trials, config.threads, [&](std::size_t t) {
    auto report = RunOnce(graph, config, t);
    if (!report.ok()) {
      failures[t] = report.status();
      return;
    }
    estimates[t] = report->estimate;
    clipped[t] = report->clipped_users > 0;
  });
  for (const auto& status : failures) {
    if (!status.ok()) return status;
  }
  return Summarize(*exact, estimates, clipped, config.keep_estimates);
}

absl::StatusOr<TrialSummary> RunTrials(const ExperimentConfig& config) {
  if (auto status = ValidateConfig(config); !status.ok()) return status;
  auto graph = LoadGraphSource(config.source, config.run.seed);
  if (!graph.ok()) return graph.status();
  return RunTrials(*graph, config.run);
}

absl::StatusOr<BoundReport> VerifyBounds(const Graph& graph, std::size_t orderings,
                                         double eps0, std::uint64_t seed, NoiseMode mode) {
  if (orderings < 1) return absl::InvalidArgumentError("orderings must be at least 1");
  if (!(eps0 > 0.0)) return absl::InvalidArgumentError("eps0 must be positive");
  const GraphStats stats = ComputeGraphStats(graph);
  BoundReport report;
  report.n = stats.n;
  report.m = stats.m;
  report.degeneracy = stats.degeneracy;
  report.max_degree = stats.max_degree;
  report.chiba_sum = stats.chiba_sum;
  const std::uint64_t m_delta = static_cast<std::uint64_t>(stats.m) * stats.degeneracy;
  report.chiba_bound_holds = stats.chiba_sum <= m_delta;
  report.chiba_twice_bound_holds = stats.chiba_sum <= 2 * m_delta;
  report.edge_bound_holds = stats.m <= stats.degeneracy * stats.n;
  report.orderings = orderings;
  report.eps0 = eps0;
  const double publish_eps = mode == NoiseMode::kNoNoise ? kNoNoiseEpsilon : eps0;
  report.low2stars_limit = static_cast<double>(stats.chiba_sum) +
                           static_cast<double>(stats.m) / publish_eps;

  // 4-cycles are label-independent; enumerate once and re-test monotonicity
  // under each ordering.
  std::vector<NodeId> cycles;
  auto status = EnumerateCycles(graph, 4, [&](std::span<const NodeId> c) {
    cycles.insert(cycles.end(), c.begin(), c.end());
  });
  if (!status.ok()) return status;
  report.four_cycles = cycles.size() / 4;

  std::vector<double> low2stars(orderings), monotone(orderings), baseline(orderings);
  for (std::size_t o = 0; o < orderings; ++o) {
    auto ordering = GetOrdering(graph, publish_eps, TrialStreams(seed, o));
    if (!ordering.ok()) return ordering.status();
    auto reordered = ApplyOrdering(graph, *ordering);
    if (!reordered.ok()) return reordered.status();
    low2stars[o] = static_cast<double>(CountLow2Stars(*reordered));

    std::uint64_t hits = 0;
    NodeId ranked[4];
    for (std::size_t c = 0; c < cycles.size(); c += 4) {
      for (int q = 0; q < 4; ++q) ranked[q] = ordering->phi[cycles[c + q]];
      hits += HasMonotoneTriple(ranked);
    }
    monotone[o] = static_cast<double>(hits);

    Rng rng(Hash64({seed, o, static_cast<std::uint64_t>(Stream::kBaseline)}));
    auto shuffled = ApplyOrdering(graph, RandomOrdering(graph.num_nodes(), rng));
    if (!shuffled.ok()) return shuffled.status();
    baseline[o] = static_cast<double>(CountLow2Stars(*shuffled));
  }
  const MeanAndError s2 = Moments(low2stars);
  const MeanAndError c4 = Moments(monotone);
  report.mean_low2stars = s2.mean;
  report.stderr_low2stars = s2.std_error;
  report.mean_monotone_c4 = c4.mean;
  report.stderr_monotone_c4 = c4.std_error;
  report.baseline_mean_low2stars = Moments(baseline).mean;
  const double delta = static_cast<double>(stats.degeneracy);
  const double n = static_cast<double>(stats.n);
  if (delta > 0.0) {
    report.low2stars_ratio = s2.mean / (delta * delta * n);
    report.monotone_c4_ratio = c4.mean / (delta * delta * delta * n);
  }
  return report;
}

std::optional<double> LeastSquaresSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double count = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

absl::StatusOr<ScalingReport> ErrorScaling(const GeneratorSpec& generator,
                                           std::span<const std::size_t> n_values,
                                           const TrialConfig& config) {
  if (n_values.size() < 3) {
    return absl::InvalidArgumentError("error scaling needs at least 3 graph sizes");
  }
  for (std::size_t i = 1; i < n_values.size(); ++i) {
    if (n_values[i] <= n_values[i - 1]) {
      return absl::InvalidArgumentError("graph sizes must be strictly ascending");
    }
  }
  ScalingReport report;
  std::vector<double> log_n, log_rmse;
  std::size_t zero_rows = 0;
  for (std::size_t n : n_values) {
    GeneratorSpec spec = generator;
    spec.n = n;
    auto graph = Generate(spec, config.seed);
    if (!graph.ok()) return graph.status();
    auto summary = RunTrials(*graph, config);
    if (!summary.ok()) return summary.status();
    if (summary->rmse == 0.0) ++zero_rows;
    log_n.push_back(std::log(static_cast<double>(n)));
    log_rmse.push_back(std::log(summary->rmse));
    report.rows.push_back({n, *std::move(summary)});
  }
  report.exact = zero_rows == report.rows.size();
  if (zero_rows == 0) report.slope = LeastSquaresSlope(log_n, log_rmse);
  return report;
}

}  // namespace edgeldp
