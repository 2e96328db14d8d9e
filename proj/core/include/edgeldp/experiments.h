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

// Monte-Carlo harness around the estimators: repeated trials against the
// exact oracle, bound verification for the low-degree ordering, and
// error-vs-n scaling fits.

#ifndef EDGELDP_EXPERIMENTS_H_
#define EDGELDP_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "edgeldp/generators.h"
#include "edgeldp/graph.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/protocol.h"

namespace edgeldp {

enum class Task { kTriangles, kCycles };

std::string_view TaskName(Task task);
absl::StatusOr<Task> ParseTask(std::string_view name);

struct TrialConfig {
  Task task = Task::kTriangles;
  int k = 3;  // cycle length; 3 for triangles
  PrivacyBudget budget;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  NoiseMode mode = NoiseMode::kNoisy;
  int threads = 1;
  bool keep_estimates = false;
};

// Exactly one of `path` and `generator` is set.
struct GraphSource {
  std::string path;
  std::optional<GeneratorSpec> generator;
};

struct ExperimentConfig {
  GraphSource source;
  TrialConfig run;
  // Declared total budget; defaults to run.budget.total().
  std::optional<double> eps_total;
};

absl::Status ValidateConfig(const ExperimentConfig& config);

// Generated graphs are seeded with `seed`.
absl::StatusOr<Graph> LoadGraphSource(const GraphSource& source, std::uint64_t seed,
                                      std::vector<std::string>* warnings = nullptr);

// Oracle value for the task: #C_3 or #C_k.
absl::StatusOr<double> ExactCount(const Graph& graph, Task task, int k);

struct TrialSummary {
  double exact = 0.0;
  double mean = 0.0;
  double rmse = 0.0;  // sqrt(mean squared error against exact)
  double bias = 0.0;  // mean - exact
  double std_error = 0.0;  // sample sd / sqrt(T); 0 for T = 1
  double clipped_fraction = 0.0;  // trials with at least one clipped user
  std::size_t trials = 0;
  std::vector<double> estimates;  // per trial, when requested

  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

// rmse^2 = bias^2 + (1/T) sum (x - mean)^2 holds by construction.
TrialSummary Summarize(double exact, std::span<const double> estimates,
                       std::span<const std::uint8_t> clipped, bool keep_estimates);

// Trial t uses substreams (seed, t, user, *). Trials run on `threads`
// workers and are reduced in trial order.
absl::StatusOr<TrialSummary> RunTrials(const Graph& graph, const TrialConfig& config);
absl::StatusOr<TrialSummary> RunTrials(const ExperimentConfig& config);

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degeneracy = 0;
  std::size_t max_degree = 0;
  std::uint64_t chiba_sum = 0;
  bool chiba_bound_holds = false;  // chiba_sum <= m * degeneracy
  bool chiba_twice_bound_holds = false;  // chiba_sum <= 2 * m * degeneracy
  bool edge_bound_holds = false;   // m <= degeneracy * n
  std::size_t orderings = 0;
  double eps0 = 0.0;
  std::uint64_t four_cycles = 0;
  double mean_low2stars = 0.0;
  double stderr_low2stars = 0.0;
  double low2stars_limit = 0.0;  // chiba_sum + m / eps0
  double low2stars_ratio = 0.0;  // mean / (degeneracy^2 n)
  double mean_monotone_c4 = 0.0;
  double stderr_monotone_c4 = 0.0;
  double monotone_c4_ratio = 0.0;  // mean / (degeneracy^3 n)
  double baseline_mean_low2stars = 0.0;  // uniformly random orderings
};

// Runs the noisy-degree ordering `orderings` times and measures the ordered
// structures under it. Only the deterministic inequalities are verdicts;
// the ratios are measurements.
absl::StatusOr<BoundReport> VerifyBounds(const Graph& graph, std::size_t orderings,
                                         double eps0, std::uint64_t seed,
                                         NoiseMode mode = NoiseMode::kNoisy);

struct ScalingRow {
  std::size_t n = 0;
  TrialSummary summary;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  // Least-squares slope of log rmse on log n; empty when any rmse is 0.
  std::optional<double> slope;
  bool exact = false;  // every rmse is 0
};

// Ordinary least squares slope of y on x. Needs >= 2 distinct x.
std::optional<double> LeastSquaresSlope(std::span<const double> x, std::span<const double> y);

// The generator spec is re-instantiated at every n with the same seed.
absl::StatusOr<ScalingReport> ErrorScaling(const GeneratorSpec& generator,
                                           std::span<const std::size_t> n_values,
                                           const TrialConfig& config);

}  // namespace edgeldp

#endif  // EDGELDP_EXPERIMENTS_H_
