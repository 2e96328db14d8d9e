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

#include "edgeldp/triangle_estimator.h"

#include <algorithm>
#include <cmath>

#include "edgeldp/parallel.h"

namespace edgeldp {

double UserTriangleEstimate(NodeId i, std::span<const NodeId> projected_row,
                            const ObfuscatedGraph& obfuscated) {
  auto split = std::lower_bound(projected_row.begin(), projected_row.end(), i);
  auto above = std::upper_bound(split, projected_row.end(), i);
  // Every fork entry takes one of two values; count the reported ones.
  std::size_t ones = 0, forks = 0;
  for (auto j = projected_row.begin(); j != split; ++j) {
    for (auto k = above; k != projected_row.end(); ++k) {
      ones += obfuscated.bit(*j, *k);
      ++forks;
    }
  }
  if (forks == 0) return 0.0;
  return static_cast<double>(ones) * obfuscated.one_value() +
         static_cast<double>(forks - ones) * obfuscated.zero_value();
}

double TriangleNoiseScale(double clipped_degree, double eps1, double eps2) {
  return 3.0 * UnbiasedSpread(eps1) * std::max(clipped_degree, 0.0) / eps2;
}

absl::StatusOr<double> UserTriangleNoise(double local_estimate, double clipped_degree,
                                         double eps1, double eps2, Rng& rng) {
  const double scale = TriangleNoiseScale(clipped_degree, eps1, eps2);
  if (scale == 0.0) return local_estimate;
  auto noise = SampleLaplace(scale, rng);
  if (!noise.ok()) return noise.status();
  return local_estimate + *noise;
}

absl::StatusOr<EstimateReport> EstimateTriangles(const Graph& graph,
                                                 const EstimatorOptions& options) {
  auto rounds = RunSharedRounds(graph, options);
  if (!rounds.ok()) return rounds.status();
  const std::size_t n = graph.num_nodes();
  const PrivacyBudget& b = options.budget;
  const bool exact = options.mode == NoiseMode::kNoNoise;
  const TrialStreams streams(options.seed, options.trial);

  EstimateReport report;
  report.task = "triangles";
  report.k = 3;
  report.budget = b;
  report.seed = options.seed;
  report.trial = options.trial;
  report.mode = options.mode;
  report.per_user.assign(n, 0.0);

  std::vector<absl::Status> failures(n);
  std::vector<std::uint8_t> clipped(n, 0);
  ParallelFor(n, options.threads, [&](std::size_t r) {
    const NodeId rank = static_cast<NodeId>(r);
    const NodeId user = rounds->user_at_rank[r];
    const double d_hat = ClippedDegree(rounds->ordering.noisy_degrees[user], b.eps0, n, b.zeta);
    const std::size_t cap = ProjectionCap(d_hat);
    auto row = rounds->reordered.neighbors(rank);
    clipped[r] = cap < row.size();
    std::vector<NodeId> projected = ProjectMu(row, cap);
    const double t_hat = UserTriangleEstimate(rank, projected, rounds->obfuscated);
    if (exact) {
      report.per_user[user] = t_hat;
      return;
    }
    Rng rng = streams.ForUser(user, Stream::kCountNoise);
    auto t_tilde = UserTriangleNoise(t_hat, d_hat, b.eps1, b.eps2, rng);
    if (!t_tilde.ok()) {
      failures[r] = t_tilde.status();
      return;
    }
    report.per_user[user] = *t_tilde;
  });
  for (const auto& status : failures) {
    if (!status.ok()) return status;
  }
  for (std::size_t v = 0; v < n; ++v) {
    report.estimate += report.per_user[v];
    report.clipped_users += clipped[v];
  }
  return report;
}

}  // namespace edgeldp
