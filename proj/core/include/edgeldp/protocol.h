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

// Pieces shared by the triangle and odd-cycle protocols: run options, the
// report type, and the first two rounds (noisy-degree ordering, then
// randomized response on the reordered graph).

#ifndef EDGELDP_PROTOCOL_H_
#define EDGELDP_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "edgeldp/graph.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/ordering.h"

namespace edgeldp {

// kNoNoise replaces every mechanism by its identity. It exists to expose the
// counting logic to exactness tests and provides no privacy.
enum class NoiseMode { kNoisy, kNoNoise };

std::string_view NoiseModeName(NoiseMode mode);
absl::StatusOr<NoiseMode> ParseNoiseMode(std::string_view name);

struct EstimatorOptions {
  PrivacyBudget budget;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  NoiseMode mode = NoiseMode::kNoisy;
  int threads = 1;
};

struct EstimateReport {
  std::string task;  // "triangles" or "cycles"
  int k = 3;
  double estimate = 0.0;
  // Noisy local counts, indexed by original node id.
  std::vector<double> per_user;
  PrivacyBudget budget;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  // Users whose projection cap fell below their true degree.
  std::size_t clipped_users = 0;
  NoiseMode mode = NoiseMode::kNoisy;
  std::optional<double> walk_sum;  // cycles only

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

// d-hat = d-tilde + ln(n / zeta) / eps0.
double ClippedDegree(double noisy_degree, double eps0, std::size_t n, double zeta);

// Integer projection cap floor(max(d-hat, 0)).
std::size_t ProjectionCap(double clipped_degree);

// State every user holds after the two shared rounds.
struct SharedRounds {
  NodeOrdering ordering;
  Graph reordered;                  // G^phi, ids are ranks
  ObfuscatedGraph obfuscated;       // over ranks
  std::vector<NodeId> user_at_rank; // inverse of ordering.phi
};

// Validates options, publishes noisy degrees (eps0), reorders, and collects
// lower-triangle randomized response (eps1) from every user. In no-noise
// mode both rounds are exact.
absl::StatusOr<SharedRounds> RunSharedRounds(const Graph& graph,
                                             const EstimatorOptions& options);

}  // namespace edgeldp

#endif  // EDGELDP_PROTOCOL_H_
