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

#include "edgeldp/ordering.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/str_format.h"
#include "edgeldp/mechanisms.h"

namespace edgeldp {

absl::StatusOr<NodeOrdering> GetOrdering(const Graph& graph, double eps0,
                                         const TrialStreams& streams) {
  if (!(eps0 > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps0 must be positive, got %g", eps0));
  }
  std::vector<double> noisy(graph.num_nodes());
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    Rng rng = streams.ForUser(v, Stream::kDegreeNoise);
    auto published = LaplaceQuery(static_cast<double>(graph.degree(v)), 1.0, eps0, rng);
    if (!published.ok()) return published.status();
    noisy[v] = *published;
  }
  return RankByScore(std::move(noisy), eps0);
}

NodeOrdering RankByScore(std::vector<double> scores, double eps0) {
  const std::size_t n = scores.size();
  std::vector<NodeId> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), NodeId{0});
  std::sort(by_rank.begin(), by_rank.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  NodeOrdering ordering;
  ordering.phi.resize(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    ordering.phi[by_rank[rank]] = static_cast<NodeId>(rank);
  }
  ordering.noisy_degrees = std::move(scores);
  ordering.eps0 = eps0;
  return ordering;
}

absl::StatusOr<Graph> ApplyOrdering(const Graph& graph, const NodeOrdering& ordering) {
  if (ordering.phi.size() != graph.num_nodes()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ordering covers %d nodes but the graph has %d", ordering.phi.size(),
        graph.num_nodes()));
  }
  return Relabel(graph, ordering.phi);
}

NodeOrdering RandomOrdering(std::size_t n, Rng& rng) {
  NodeOrdering ordering;
  ordering.phi.resize(n);
  std::iota(ordering.phi.begin(), ordering.phi.end(), NodeId{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(ordering.phi[i - 1], ordering.phi[rng.NextBelow(i)]);
  }
  return ordering;
}

}  // namespace edgeldp
