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

// Brute-force ground truth for the subgraph counts the estimators target and
// for the ordered structures that bound their variance. Lengths of paths and
// cycles are edge counts throughout.

#ifndef EDGELDP_EXACT_COUNTS_H_
#define EDGELDP_EXACT_COUNTS_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "edgeldp/graph.h"

namespace edgeldp {

// Enumeration aborts with ResourceExhausted past this many DFS extensions.
inline constexpr std::uint64_t kMaxVisitedPartialPaths = 100'000'000;
// Longest path or cycle the enumerators accept.
inline constexpr int kMaxEnumeratedLength = 9;

std::uint64_t CountTriangles(const Graph& graph);

// Each cycle counted once, not once per rotation and direction.
absl::StatusOr<std::uint64_t> CountCycles(const Graph& graph, int length);

// Simple paths with `length` edges, each counted once regardless of
// direction.
absl::StatusOr<std::uint64_t> CountPaths(const Graph& graph, int length);

// Sum over nodes of d_minus(i) * (d(i) - 1), d_minus counting neighbors with
// a smaller id. Depends on the labeling.
std::uint64_t CountLow2Stars(const Graph& graph);

// Even cycles of `length` edges having some cyclically consecutive triple
// with strictly monotone ids. Depends on the labeling.
absl::StatusOr<std::uint64_t> CountMonotoneCycles(const Graph& graph, int length);

// Calls visit once per cycle with its vertices in canonical order: minimum
// vertex first, then its smaller cycle neighbor.
absl::Status EnumerateCycles(const Graph& graph, int length,
                             absl::FunctionRef<void(std::span<const NodeId>)> visit);

// Rotates/reflects a vertex cycle into the canonical order above.
std::vector<NodeId> CanonicalCycle(std::span<const NodeId> cycle);

// True if some cyclically consecutive (u, v, w) has u < v < w or u > v > w.
bool HasMonotoneTriple(std::span<const NodeId> cycle);

struct ExactCounts {
  std::uint64_t triangles = 0;
  std::map<int, std::uint64_t> cycles;            // length -> #C_k
  std::map<int, std::uint64_t> paths;             // length -> #P_k
  std::uint64_t low2stars = 0;
  std::map<int, std::uint64_t> monotone_cycles;   // even length -> #C*_k

  friend bool operator==(const ExactCounts&, const ExactCounts&) = default;
};

// Cycles of length 3..max_length, paths of length 1..max_length and
// monotone cycles of even length 4..max_length under the current labels.
absl::StatusOr<ExactCounts> ComputeExactCounts(const Graph& graph, int max_length);

}  // namespace edgeldp

#endif  // EDGELDP_EXACT_COUNTS_H_
