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

// Private count of odd k-cycles, k >= 5.
//
// User i (ids are ranks) owns the cycles whose lowest-ranked monotone center
// is i. For each fork j < i < kappa of its projected row it sums, over
// admissible vertex sequences l_1 = j, ..., l_{k-1} = kappa, the product of
// unbiased entries a-hat(l_q, l_{q+1}). A sequence is admissible when its
// vertices are distinct and differ from i, and every cyclically consecutive
// triple (u, v, w) of the closed cycle (i, l_1, ..., l_{k-1}), except the
// fork triple centered at i, that is strictly monotone has i < v. Every odd
// cycle has a monotone triple, so each one is counted by exactly one user
// and one orientation.

#ifndef EDGELDP_CYCLE_ESTIMATOR_H_
#define EDGELDP_CYCLE_ESTIMATOR_H_

#include <cstdint>
#include <functional>
#include <span>

#include "absl/status/statusor.h"
#include "edgeldp/graph.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/protocol.h"
#include "edgeldp/rng.h"

namespace edgeldp {

// Per-user enumeration budget: n^(k-3) * |forks| must not exceed this.
inline constexpr double kMaxUserPathWork = 1e9;

// Server-side noise magnitude: the sum over all tuples in V^(k-3),
// repetitions allowed, of the product of a-hat along consecutive pairs.
// Equals 1^T A-hat^(k-4) 1 with a zero diagonal.
absl::StatusOr<double> ServerWalkSum(const ObfuscatedGraph& obfuscated, int k);

// Invoked for every counted sequence with a nonzero weight.
// path = (l_1, ..., l_{k-1}); weight is the product of a-hat along it.
using CountedPathVisitor =
    std::function<void(NodeId center, std::span<const NodeId> path, double weight)>;

// c-hat_i over the projected row of rank i.
absl::StatusOr<double> UserCycleEstimate(NodeId i, std::span<const NodeId> projected_row,
                                         const ObfuscatedGraph& obfuscated, int k,
                                         const CountedPathVisitor& visitor = {});

// Independent check of the admissibility rule for one sequence.
bool IsAdmissiblePath(NodeId i, std::span<const NodeId> path);

// 3 * ((e^eps1 + 1)/(e^eps1 - 1))^2 * max(d-hat, 0) * |walk_sum| / eps2.
double CycleNoiseScale(double clipped_degree, double walk_sum, double eps1, double eps2);

absl::StatusOr<double> UserCycleNoise(double local_estimate, double clipped_degree,
                                      double walk_sum, double eps1, double eps2, Rng& rng);

// Ordering, randomized response, server walk sum, per-user admissible path
// sums with restricted-sensitivity Laplace, server sum. Exact in no-noise
// mode. When `visitor` is set, users run sequentially and every counted
// sequence is reported in ORIGINAL node ids.
absl::StatusOr<EstimateReport> EstimateOddCycles(const Graph& graph, int k,
                                                 const EstimatorOptions& options,
                                                 const CountedPathVisitor& visitor = {});

}  // namespace edgeldp

#endif  // EDGELDP_CYCLE_ESTIMATOR_H_
