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

#ifndef EDGELDP_TRIANGLE_ESTIMATOR_H_
#define EDGELDP_TRIANGLE_ESTIMATOR_H_

#include <span>

#include "absl/status/statusor.h"
#include "edgeldp/graph.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/protocol.h"
#include "edgeldp/rng.h"

namespace edgeldp {

// t-hat_i: sum of a-hat(j, k) over forks j < i < k of the projected row.
// Ids are ranks.
double UserTriangleEstimate(NodeId i, std::span<const NodeId> projected_row,
                            const ObfuscatedGraph& obfuscated);

// 3 * (e^eps1 + 1)/(e^eps1 - 1) * max(d-hat, 0) / eps2.
double TriangleNoiseScale(double clipped_degree, double eps1, double eps2);

// t-hat + Lap(TriangleNoiseScale). Zero scale or eps2 = +inf adds nothing.
absl::StatusOr<double> UserTriangleNoise(double local_estimate, double clipped_degree,
                                         double eps1, double eps2, Rng& rng);

// Full private triangle count: ordering (eps0), randomized response (eps1),
// per-user clipped fork sums with restricted-sensitivity Laplace (eps2),
// summed by the server. Exact in no-noise mode.
absl::StatusOr<EstimateReport> EstimateTriangles(const Graph& graph,
                                                 const EstimatorOptions& options);

}  // namespace edgeldp

#endif  // EDGELDP_TRIANGLE_ESTIMATOR_H_
