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

#include "edgeldp/protocol.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "edgeldp/parallel.h"

namespace edgeldp {

std::string_view NoiseModeName(NoiseMode mode) {
  return mode == NoiseMode::kNoNoise ? "no-noise" : "noisy";
}

absl::StatusOr<NoiseMode> ParseNoiseMode(std::string_view name) {
  if (name == "noisy") return NoiseMode::kNoisy;
  if (name == "no-noise") return NoiseMode::kNoNoise;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mode '", std::string(name), "'; expected noisy or no-noise"));
}

double ClippedDegree(double noisy_degree, double eps0, std::size_t n, double zeta) {
  return noisy_degree + std::log(static_cast<double>(n) / zeta) / eps0;
}

std::size_t ProjectionCap(double clipped_degree) {
  if (!(clipped_degree > 0.0)) return 0;
  // Anything past 2^53 exceeds every realistic degree.
  if (clipped_degree >= 0x1.0p53) return std::size_t{1} << 53;
  return static_cast<std::size_t>(std::floor(clipped_degree));
}

absl::StatusOr<SharedRounds> RunSharedRounds(const Graph& graph,
                                             const EstimatorOptions& options) {
  const std::size_t n = graph.num_nodes();
  if (n == 0) return absl::InvalidArgumentError("graph has no nodes");
  const PrivacyBudget& b = options.budget;
  auto valid = PrivacyBudget::Create(b.eps0, b.eps1, b.eps2, b.zeta);
  if (!valid.ok()) return valid.status();

  const bool exact = options.mode == NoiseMode::kNoNoise;
  const TrialStreams streams(options.seed, options.trial);

  SharedRounds rounds;
  auto ordering = GetOrdering(graph, exact ? kNoNoiseEpsilon : b.eps0, streams);
  if (!ordering.ok()) return ordering.status();
  rounds.ordering = *std::move(ordering);
  rounds.ordering.eps0 = b.eps0;

  auto reordered = ApplyOrdering(graph, rounds.ordering);
  if (!reordered.ok()) return reordered.status();
  rounds.reordered = *std::move(reordered);

  rounds.user_at_rank.resize(n);
  for (NodeId v = 0; v < n; ++v) rounds.user_at_rank[rounds.ordering.phi[v]] = v;

  // User at rank r reports its bits toward every lower rank.
  const double eps1 = exact ? kNoNoiseEpsilon : b.eps1;
  std::vector<std::vector<std::uint8_t>> reports(n);
  ParallelFor(n, options.threads, [&](std::size_t r) {
    std::vector<std::uint8_t> row(r, 0);
    for (NodeId j : rounds.reordered.neighbors(static_cast<NodeId>(r))) {
      if (j >= r) break;
      row[j] = 1;
    }
    Rng rng = streams.ForUser(rounds.user_at_rank[r], Stream::kRandomizedResponse);
    reports[r] = RandomizeResponseRow(row, eps1, rng);
  });
  auto obfuscated = AssembleObfuscated(reports, eps1);
  if (!obfuscated.ok()) return obfuscated.status();
  rounds.obfuscated = *std::move(obfuscated);
  return rounds;
}

}  // namespace edgeldp
