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

#include "edgeldp/cycle_estimator.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_format.h"
#include "edgeldp/parallel.h"

namespace edgeldp {
namespace {

absl::Status CheckCycleLength(int k) {
  if (k < 5 || k % 2 == 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("cycle length must be odd and at least 5, got %d", k));
  }
  return absl::OkStatus();
}

bool Monotone(NodeId u, NodeId v, NodeId w) {
  return (u < v && v < w) || (u > v && v > w);
}

// A triple (u, v, w) centered at v blocks user i when it is monotone and v
// outranks i.
bool Blocks(NodeId i, NodeId u, NodeId v, NodeId w) {
  return v < i && Monotone(u, v, w);
}

// DFS over the k-3 interior vertices l_2..l_{k-2} of one fork.
class ForkWalker {
 public:
  ForkWalker(NodeId i, const ObfuscatedGraph& obfuscated, int k,
             const CountedPathVisitor& visitor)
      : i_(i), obf_(obfuscated), n_(static_cast<NodeId>(obfuscated.num_nodes())),
        last_(static_cast<std::size_t>(k - 2)), path_(k - 1),
        used_(obfuscated.num_nodes(), false), visitor_(visitor) {}

  double Sum(NodeId j, NodeId kappa) {
    path_.front() = j;
    path_.back() = kappa;
    used_[i_] = used_[j] = used_[kappa] = true;
    double total = Extend(1, 1.0);
    used_[i_] = used_[j] = used_[kappa] = false;
    return total;
  }

 private:
  // Fills path_[q]; path_[0..q-1] is set and `weight` covers its edges.
  double Extend(std::size_t q, double weight) {
    const NodeId prev = path_[q - 1];
    const NodeId before = q >= 2 ? path_[q - 2] : i_;
    if (q == last_) {
      const NodeId kappa = path_[q];
      // Close onto kappa: triples centered at prev and at kappa.
      if (Blocks(i_, before, prev, kappa) || Blocks(i_, prev, kappa, i_)) return 0.0;
      const double w = weight * obf_.unbiased(prev, kappa);
      if (w != 0.0 && visitor_) visitor_(i_, path_, w);
      return w;
    }
    double total = 0.0;
    for (NodeId next = 0; next < n_; ++next) {
      if (used_[next] || Blocks(i_, before, prev, next)) continue;
      const double w = weight * obf_.unbiased(prev, next);
      if (w == 0.0) continue;
      path_[q] = next;
      used_[next] = true;
      total += Extend(q + 1, w);
      used_[next] = false;
    }
    return total;
  }

  NodeId i_;
  const ObfuscatedGraph& obf_;
  NodeId n_;
  std::size_t last_;
  std::vector<NodeId> path_;
  std::vector<bool> used_;
  const CountedPathVisitor& visitor_;
};

}  // namespace

absl::StatusOr<double> ServerWalkSum(const ObfuscatedGraph& obfuscated, int k) {
  if (auto status = CheckCycleLength(k); !status.ok()) return status;
  const std::size_t n = obfuscated.num_nodes();
  const double one = obfuscated.one_value();
  const double zero = obfuscated.zero_value();
  std::vector<double> walks(n, 1.0), next(n);
  for (int step = 0; step < k - 4; ++step) {
    double total = 0.0;
    for (double w : walks) total += w;
    for (std::size_t r = 0; r < n; ++r) {
      // Row r of A-hat is `zero` off the diagonal plus (one - zero) on
      // reported bits, and 0 on the diagonal.
      double reported = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        if (obfuscated.bit(static_cast<NodeId>(r), static_cast<NodeId>(c))) reported += walks[c];
      }
      next[r] = zero * (total - walks[r]) + (one - zero) * reported;
    }
    walks.swap(next);
  }
  double sum = 0.0;
  for (double w : walks) sum += w;
  return sum;
}

absl::StatusOr<double> UserCycleEstimate(NodeId i, std::span<const NodeId> projected_row,
                                         const ObfuscatedGraph& obfuscated, int k,
                                         const CountedPathVisitor& visitor) {
  if (auto status = CheckCycleLength(k); !status.ok()) return status;
  auto split = std::lower_bound(projected_row.begin(), projected_row.end(), i);
  auto above = std::upper_bound(split, projected_row.end(), i);
  const double forks = static_cast<double>(split - projected_row.begin()) *
                       static_cast<double>(projected_row.end() - above);
  if (forks == 0.0) return 0.0;
  const double work =
      std::pow(static_cast<double>(obfuscated.num_nodes()), k - 3) * forks;
  if (work > kMaxUserPathWork) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "user %d would enumerate %.3g sequences for k=%d; shrink n or k", i, work, k));
  }
  ForkWalker walker(i, obfuscated, k, visitor);
  double total = 0.0;
  for (auto j = projected_row.begin(); j != split; ++j) {
    for (auto kappa = above; kappa != projected_row.end(); ++kappa) {
      total += walker.Sum(*j, *kappa);
    }
  }
  return total;
}

bool IsAdmissiblePath(NodeId i, std::span<const NodeId> path) {
  if (path.size() < 4) return false;
  if (!(path.front() < i && i < path.back())) return false;
  std::vector<NodeId> cycle{i};
  cycle.insert(cycle.end(), path.begin(), path.end());
  std::vector<NodeId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const std::size_t len = cycle.size();
  for (std::size_t c = 1; c < len; ++c) {
    if (Blocks(i, cycle[c - 1], cycle[c], cycle[(c + 1) % len])) return false;
  }
  return true;
}

double CycleNoiseScale(double clipped_degree, double walk_sum, double eps1, double eps2) {
  const double spread = UnbiasedSpread(eps1);
  return 3.0 * spread * spread * std::max(clipped_degree, 0.0) * std::abs(walk_sum) / eps2;
}

absl::StatusOr<double> UserCycleNoise(double local_estimate, double clipped_degree,
                                      double walk_sum, double eps1, double eps2, Rng& rng) {
  const double scale = CycleNoiseScale(clipped_degree, walk_sum, eps1, eps2);
  if (scale == 0.0) return local_estimate;
  auto noise = SampleLaplace(scale, rng);
  if (!noise.ok()) return noise.status();
  return local_estimate + *noise;
}

absl::StatusOr<EstimateReport> EstimateOddCycles(const Graph& graph, int k,
                                                 const EstimatorOptions& options,
                                                 const CountedPathVisitor& visitor) {
  if (auto status = CheckCycleLength(k); !status.ok()) return status;
  auto rounds = RunSharedRounds(graph, options);
  if (!rounds.ok()) return rounds.status();
  const std::size_t n = graph.num_nodes();
  const PrivacyBudget& b = options.budget;
  const bool exact = options.mode == NoiseMode::kNoNoise;
  const TrialStreams streams(options.seed, options.trial);

  // Published before any user starts its local count.
  auto walk_sum = ServerWalkSum(rounds->obfuscated, k);
  if (!walk_sum.ok()) return walk_sum.status();

  EstimateReport report;
  report.task = "cycles";
  report.k = k;
  report.budget = b;
  report.seed = options.seed;
  report.trial = options.trial;
  report.mode = options.mode;
  report.walk_sum = *walk_sum;
  report.per_user.assign(n, 0.0);

  CountedPathVisitor translated;
  std::vector<NodeId> original;
  if (visitor) {
    translated = [&](NodeId center, std::span<const NodeId> path, double weight) {
      original.resize(path.size());
      for (std::size_t q = 0; q < path.size(); ++q) {
        original[q] = rounds->user_at_rank[path[q]];
      }
      visitor(rounds->user_at_rank[center], original, weight);
    };
  }

  std::vector<absl::Status> failures(n);
  std::vector<std::uint8_t> clipped(n, 0);
  ParallelFor(n, visitor ? 1 : options.threads, [&](std::size_t r) {
    const NodeId rank = static_cast<NodeId>(r);
    const NodeId user = rounds->user_at_rank[r];
    const double d_hat = ClippedDegree(rounds->ordering.noisy_degrees[user], b.eps0, n, b.zeta);
    const std::size_t cap = ProjectionCap(d_hat);
    auto row = rounds->reordered.neighbors(rank);
    clipped[r] = cap < row.size();
    std::vector<NodeId> projected = ProjectMu(row, cap);
    auto c_hat = UserCycleEstimate(rank, projected, rounds->obfuscated, k, translated);
    if (!c_hat.ok()) {
      failures[r] = c_hat.status();
      return;
    }
    if (exact) {
      report.per_user[user] = *c_hat;
      return;
    }
    Rng rng = streams.ForUser(user, Stream::kCountNoise);
    auto c_tilde = UserCycleNoise(*c_hat, d_hat, *walk_sum, b.eps1, b.eps2, rng);
    if (!c_tilde.ok()) {
      failures[r] = c_tilde.status();
      return;
    }
    report.per_user[user] = *c_tilde;
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
