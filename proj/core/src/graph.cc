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

#include "edgeldp/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace edgeldp {

absl::StatusOr<Graph> Graph::FromEdges(std::size_t num_nodes,
                                       std::span<const Edge> edges) {
  if (num_nodes > std::numeric_limits<NodeId>::max()) {
    return absl::InvalidArgumentError("node count exceeds id range");
  }
  std::vector<std::size_t> degree(num_nodes, 0);
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      return absl::InvalidArgumentError(
          absl::StrFormat("edge (%d, %d) out of range for n=%d", u, v, num_nodes));
    }
    if (u == v) {
      return absl::InvalidArgumentError(absl::StrFormat("self-loop at node %d", u));
    }
    ++degree[u];
    ++degree[v];
  }

  Graph graph;
  graph.offsets_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    graph.offsets_[v + 1] = graph.offsets_[v] + degree[v];
  }
  graph.adjacency_.resize(graph.offsets_[num_nodes]);
  std::vector<std::size_t> cursor(graph.offsets_.begin(), graph.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    graph.adjacency_[cursor[u]++] = v;
    graph.adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < num_nodes; ++v) {
    auto first = graph.adjacency_.begin() + graph.offsets_[v];
    auto last = graph.adjacency_.begin() + graph.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      return absl::InvalidArgumentError(
          absl::StrFormat("duplicate edge (%d, %d)", std::min<NodeId>(v, *dup),
                          std::max<NodeId>(v, *dup)));
    }
  }
  return graph;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_nodes(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

namespace {

bool ParseId(std::string_view token, NodeId& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

absl::StatusOr<Graph> LoadEdgeList(std::istream& in,
                                   std::vector<std::string>* warnings) {
  std::vector<Edge> edges;
  std::size_t num_nodes = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    NodeId u = 0, v = 0;
    if (!(fields >> a >> b) || (fields >> extra) || !ParseId(a, u) ||
        !ParseId(b, v)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("malformed edge at line %d: '%s'", line_number, line));
    }
    if (u == v) {
      return absl::InvalidArgumentError(
          absl::StrFormat("self-loop at line %d: node %d", line_number, u));
    }
    if (std::max(u, v) == std::numeric_limits<NodeId>::max()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("node id too large at line %d", line_number));
    }
    num_nodes = std::max<std::size_t>(num_nodes, std::max(u, v) + 1);
    edges.emplace_back(u, v);
  }
  if (in.bad()) return absl::DataLossError("read error on edge list");

  auto graph = Graph::FromEdges(num_nodes, edges);
  if (!graph.ok()) return graph.status();
  if (warnings != nullptr) {
    std::size_t isolated = 0;
    for (NodeId v = 0; v < graph->num_nodes(); ++v) {
      if (graph->degree(v) == 0) ++isolated;
    }
    if (isolated > 0) {
      warnings->push_back(absl::StrCat(
          isolated, " node id(s) below the maximum id have no edges; kept as "
                    "isolated nodes"));
    }
  }
  return graph;
}

absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path,
                                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return LoadEdgeList(in, warnings);
}

std::string SerializeEdgeList(const Graph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.Edges()) {
    absl::StrAppend(&out, u, " ", v, "\n");
  }
  return out;
}

absl::StatusOr<Graph> Relabel(const Graph& graph,
                              std::span<const NodeId> permutation) {
  const std::size_t n = graph.num_nodes();
  if (permutation.size() != n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "permutation has %d entries for a graph with %d nodes",
        permutation.size(), n));
  }
  std::vector<bool> seen(n, false);
  for (NodeId target : permutation) {
    if (target >= n || seen[target]) {
      return absl::InvalidArgumentError("relabeling is not a bijection");
    }
    seen[target] = true;
  }
  std::vector<Edge> edges = graph.Edges();
  for (auto& [u, v] : edges) {
    u = permutation[u];
    v = permutation[v];
  }
  return Graph::FromEdges(n, edges);
}

DegeneracyResult Degeneracy(const Graph& graph) {
  const std::size_t n = graph.num_nodes();
  DegeneracyResult result;
  if (n == 0) return result;

  // Batagelj-Zaversnik bucket peeling.
  const std::size_t max_deg = graph.max_degree();
  std::vector<std::size_t> degree(n), bin(max_deg + 1, 0), position(n);
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = graph.degree(v);
    ++bin[degree[v]];
  }
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  for (NodeId v = 0; v < n; ++v) {
    position[v] = bin[degree[v]];
    order[position[v]] = v;
    ++bin[degree[v]];
  }
  for (std::size_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = order[i];
    result.degeneracy = std::max(result.degeneracy, degree[v]);
    for (NodeId u : graph.neighbors(v)) {
      if (degree[u] > degree[v]) {
        std::size_t du = degree[u];
        std::size_t pu = position[u];
        std::size_t pw = bin[du];
        NodeId w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          position[u] = pw;
          position[w] = pu;
        }
        ++bin[du];
        --degree[u];
      }
    }
  }
  result.core_order = std::move(order);
  return result;
}

GraphStats ComputeGraphStats(const Graph& graph) {
  GraphStats stats;
  stats.n = graph.num_nodes();
  stats.m = graph.num_edges();
  stats.max_degree = graph.max_degree();
  stats.degeneracy = Degeneracy(graph).degeneracy;
  for (const auto& [u, v] : graph.Edges()) {
    stats.chiba_sum += std::min(graph.degree(u), graph.degree(v));
  }
  stats.arboricity_upper = stats.degeneracy;
  stats.arboricity_lower = stats.degeneracy == 0 ? 0 : (stats.degeneracy + 2) / 2;
  return stats;
}

}  // namespace edgeldp
