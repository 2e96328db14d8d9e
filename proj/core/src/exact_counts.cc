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

#include "edgeldp/exact_counts.h"

#include <algorithm>

#include "absl/strings/str_format.h"

namespace edgeldp {
namespace {

absl::Status TooLarge(const char* what, int length) {
  return absl::ResourceExhaustedError(absl::StrFormat(
      "%s enumeration of length %d exceeds the desk-scale limit; shrink the "
      "graph or the length",
      what, length));
}

// Depth-first enumeration of simple paths. `extend` filters candidate next
// vertices; `complete` is called with every path of `vertices` vertices.
class PathWalker {
 public:
  PathWalker(const Graph& graph, std::size_t vertices)
      : graph_(graph), target_(vertices), on_path_(graph.num_nodes(), false) {
    path_.reserve(vertices);
  }

  template <typename Extend, typename Complete>
  bool Walk(NodeId start, Extend&& extend, Complete&& complete) {
    path_.assign(1, start);
    on_path_[start] = true;
    bool ok = Recurse(extend, complete);
    on_path_[start] = false;
    return ok;
  }

 private:
  template <typename Extend, typename Complete>
  bool Recurse(Extend& extend, Complete& complete) {
    if (path_.size() == target_) {
      complete(std::span<const NodeId>(path_));
      return true;
    }
    for (NodeId next : graph_.neighbors(path_.back())) {
      if (on_path_[next] || !extend(std::span<const NodeId>(path_), next)) continue;
      if (++visited_ > kMaxVisitedPartialPaths) return false;
      path_.push_back(next);
      on_path_[next] = true;
      bool ok = Recurse(extend, complete);
      on_path_[next] = false;
      path_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  const Graph& graph_;
  std::size_t target_;
  std::vector<bool> on_path_;
  std::vector<NodeId> path_;
  std::uint64_t visited_ = 0;
};

absl::Status CheckLength(int length, int minimum, const char* what) {
  if (length < minimum) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s length must be at least %d, got %d", what, minimum, length));
  }
  if (length > kMaxEnumeratedLength) return TooLarge(what, length);
  return absl::OkStatus();
}

}  // namespace

std::uint64_t CountTriangles(const Graph& graph) {
  std::uint64_t count = 0;
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    auto nu = graph.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      // Common neighbors w > v of u and v.
      auto nv = graph.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++count;
          ++a;
          ++b;
        }
      }
    }
  }
  return count;
}

absl::Status EnumerateCycles(const Graph& graph, int length,
                             absl::FunctionRef<void(std::span<const NodeId>)> visit) {
  if (auto status = CheckLength(length, 3, "cycle"); !status.ok()) return status;
  PathWalker walker(graph, static_cast<std::size_t>(length));
  for (NodeId start = 0; start < graph.num_nodes(); ++start) {
    auto extend = [start](std::span<const NodeId>, NodeId next) { return next > start; };
    auto complete = [&](std::span<const NodeId> path) {
      // Closing edge back to the start; path[1] < path.back() fixes direction.
      if (path[1] < path.back() && graph.HasEdge(path.back(), start)) visit(path);
    };
    if (!walker.Walk(start, extend, complete)) return TooLarge("cycle", length);
  }
  return absl::OkStatus();
}

absl::StatusOr<std::uint64_t> CountCycles(const Graph& graph, int length) {
  std::uint64_t count = 0;
  auto status = EnumerateCycles(graph, length, [&](std::span<const NodeId>) { ++count; });
  if (!status.ok()) return status;
  return count;
}

absl::StatusOr<std::uint64_t> CountPaths(const Graph& graph, int length) {
  if (auto status = CheckLength(length, 1, "path"); !status.ok()) return status;
  PathWalker walker(graph, static_cast<std::size_t>(length) + 1);
  std::uint64_t directed = 0;
  for (NodeId start = 0; start < graph.num_nodes(); ++start) {
    auto extend = [](std::span<const NodeId>, NodeId) { return true; };
    auto complete = [&](std::span<const NodeId>) { ++directed; };
    if (!walker.Walk(start, extend, complete)) return TooLarge("path", length);
  }
  return directed / 2;
}

std::uint64_t CountLow2Stars(const Graph& graph) {
  std::uint64_t total = 0;
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    auto row = graph.neighbors(i);
    if (row.empty()) continue;
    const std::uint64_t lower = std::lower_bound(row.begin(), row.end(), i) - row.begin();
    total += lower * (row.size() - 1);
  }
  return total;
}

bool HasMonotoneTriple(std::span<const NodeId> cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t c = 0; c < len; ++c) {
    NodeId u = cycle[(c + len - 1) % len];
    NodeId v = cycle[c];
    NodeId w = cycle[(c + 1) % len];
    if ((u < v && v < w) || (u > v && v > w)) return true;
  }
  return false;
}

absl::StatusOr<std::uint64_t> CountMonotoneCycles(const Graph& graph, int length) {
  if (length % 2 != 0 || length < 4) {
    return absl::InvalidArgumentError(
        absl::StrFormat("monotone cycles need an even length >= 4, got %d", length));
  }
  std::uint64_t count = 0;
  auto status = EnumerateCycles(graph, length, [&](std::span<const NodeId> cycle) {
    if (HasMonotoneTriple(cycle)) ++count;
  });
  if (!status.ok()) return status;
  return count;
}

std::vector<NodeId> CanonicalCycle(std::span<const NodeId> cycle) {
  const std::size_t len = cycle.size();
  if (len == 0) return {};
  const std::size_t at = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  const bool forward = cycle[(at + 1) % len] < cycle[(at + len - 1) % len];
  std::vector<NodeId> out(len);
  for (std::size_t q = 0; q < len; ++q) {
    out[q] = forward ? cycle[(at + q) % len] : cycle[(at + len - q) % len];
  }
  return out;
}

absl::StatusOr<ExactCounts> ComputeExactCounts(const Graph& graph, int max_length) {
  if (max_length < 3) {
    return absl::InvalidArgumentError("max length must be at least 3");
  }
  ExactCounts counts;
  counts.triangles = CountTriangles(graph);
  counts.low2stars = CountLow2Stars(graph);
  for (int len = 1; len <= max_length; ++len) {
    auto paths = CountPaths(graph, len);
    if (!paths.ok()) return paths.status();
    counts.paths[len] = *paths;
  }
  for (int len = 3; len <= max_length; ++len) {
    auto cycles = CountCycles(graph, len);
    if (!cycles.ok()) return cycles.status();
    counts.cycles[len] = *cycles;
    if (len % 2 == 0) {
      auto monotone = CountMonotoneCycles(graph, len);
      if (!monotone.ok()) return monotone.status();
      counts.monotone_cycles[len] = *monotone;
    }
  }
  return counts;
}

}  // namespace edgeldp
