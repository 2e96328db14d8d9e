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

#ifndef EDGELDP_GRAPH_H_
#define EDGELDP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace edgeldp {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph over node ids 0..n-1, stored as compressed sparse
// rows. Neighbor lists are sorted ascending by node id; the degree-cap
// projection truncates against that order. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Rejects self-loops, out-of-range ids
  // and duplicate edges ({u,v} and {v,u} are the same edge).
  static absl::StatusOr<Graph> FromEdges(std::size_t num_nodes,
                                         std::span<const Edge> edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool HasEdge(NodeId u, NodeId v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Parses "u v" lines; blank lines and lines starting with '#' are skipped.
// Ids are kept verbatim, so n = max id + 1. Ids that never appear in an edge
// are not an error; a note is appended to `warnings` when it is non-null.
absl::StatusOr<Graph> LoadEdgeList(std::istream& in,
                                   std::vector<std::string>* warnings = nullptr);
absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path,
                                       std::vector<std::string>* warnings = nullptr);

// One "u v\n" line per edge, u < v, lexicographic order. LoadEdgeList
// reads this back to the same graph whenever the highest id is not isolated.
std::string SerializeEdgeList(const Graph& graph);

// Renames node v to permutation[v].
absl::StatusOr<Graph> Relabel(const Graph& graph,
                              std::span<const NodeId> permutation);

struct DegeneracyResult {
  std::size_t degeneracy = 0;
  // Nodes in the order they were peeled (minimum remaining degree first).
  std::vector<NodeId> core_order;
};

// Min-degree peeling with bucket queues, O(n + m).
DegeneracyResult Degeneracy(const Graph& graph);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t degeneracy = 0;
  // Sum over edges of min(d_u, d_v).
  std::uint64_t chiba_sum = 0;
  // Interval for the arboricity implied by alpha <= degeneracy <= 2 alpha - 1.
  std::size_t arboricity_lower = 0;
  std::size_t arboricity_upper = 0;
};

GraphStats ComputeGraphStats(const Graph& graph);

}  // namespace edgeldp

#endif  // EDGELDP_GRAPH_H_
