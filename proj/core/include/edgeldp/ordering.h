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

#ifndef EDGELDP_ORDERING_H_
#define EDGELDP_ORDERING_H_

#include <vector>

#include "absl/status/statusor.h"
#include "edgeldp/graph.h"
#include "edgeldp/rng.h"

namespace edgeldp {

// Low-degree ordering from privately published degrees.
//
// phi[v] is the rank of node v: rank 0 holds the largest noisy degree, and
// equal noisy degrees are ranked by node id. The noisy degrees are kept so
// later rounds reuse them instead of spending budget again.
struct NodeOrdering {
  std::vector<NodeId> phi;
  std::vector<double> noisy_degrees;
  double eps0 = 0.0;

  friend bool operator==(const NodeOrdering&, const NodeOrdering&) = default;
};

// Each user v publishes d_v + Lap(1/eps0) from its degree-noise substream
// (degree sensitivity is 1 under edge LDP); the server ranks the results.
// eps0 = +inf publishes exact degrees.
absl::StatusOr<NodeOrdering> GetOrdering(const Graph& graph, double eps0,
                                         const TrialStreams& streams);

// Ranks arbitrary scores by the same rule (descending, ties by id).
NodeOrdering RankByScore(std::vector<double> scores, double eps0);

// G^phi: node v is renamed phi[v].
absl::StatusOr<Graph> ApplyOrdering(const Graph& graph, const NodeOrdering& ordering);

// Uniformly random permutation, the baseline the low-degree ordering is
// compared against. noisy_degrees is left empty.
NodeOrdering RandomOrdering(std::size_t n, Rng& rng);

}  // namespace edgeldp

#endif  // EDGELDP_ORDERING_H_
