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

#include "edgeldp/generators.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "edgeldp/rng.h"

namespace edgeldp {
namespace {

Graph MustBuild(std::size_t n, const std::vector<Edge>& edges) {
  // Only reached from builders that construct valid edge sets.
  return *Graph::FromEdges(n, edges);
}

std::vector<Edge> CliqueEdges(std::size_t k) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < k; ++u) {
    for (NodeId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

absl::StatusOr<Graph> GenerateErdosRenyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("edge probability must lie in [0, 1], got %g", p));
  }
  Rng rng(Hash64({seed, static_cast<std::uint64_t>(Stream::kGenerator), 0}));
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      // Draw even at p in {0, 1} so the stream layout does not depend on p.
      if (rng.NextUniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

absl::StatusOr<Graph> GenerateBarabasiAlbert(std::size_t n, std::size_t m0,
                                             std::uint64_t seed) {
  if (m0 < 1 || n <= m0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("preferential attachment needs n > m0 >= 1, got n=%d m0=%d",
                        n, m0));
  }
  Rng rng(Hash64({seed, static_cast<std::uint64_t>(Stream::kGenerator), 1}));
  std::vector<Edge> edges = CliqueEdges(m0 + 1);
  // Each endpoint appears once per incident edge, so a uniform pick from
  // `endpoints` is a degree-proportional pick.
  std::vector<NodeId> endpoints;
  for (const auto& [u, v] : edges) {
    endpoints.push_back(u);
    endpoints.push_back(v);
  }
  std::vector<NodeId> targets;
  for (NodeId v = static_cast<NodeId>(m0 + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m0) {
      NodeId t = endpoints[rng.NextBelow(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::FromEdges(n, edges);
}

absl::StatusOr<Graph> GenerateKTree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || n <= k) {
    return absl::InvalidArgumentError(
        absl::StrFormat("k-tree needs n > k >= 1, got n=%d k=%d", n, k));
  }
  Rng rng(Hash64({seed, static_cast<std::uint64_t>(Stream::kGenerator), 2}));
  std::vector<Edge> edges = CliqueEdges(k + 1);
  std::vector<std::vector<NodeId>> cliques;
  for (NodeId skip = 0; skip <= k; ++skip) {
    std::vector<NodeId> clique;
    for (NodeId v = 0; v <= k; ++v) {
      if (v != skip) clique.push_back(v);
    }
    cliques.push_back(std::move(clique));
  }
  for (NodeId v = static_cast<NodeId>(k + 1); v < n; ++v) {
    const std::vector<NodeId> base = cliques[rng.NextBelow(cliques.size())];
    for (NodeId u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<NodeId> clique;
      for (std::size_t q = 0; q < base.size(); ++q) {
        if (q != drop) clique.push_back(base[q]);
      }
      clique.push_back(v);
      cliques.push_back(std::move(clique));
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph CompleteGraph(std::size_t n) { return MustBuild(n, CliqueEdges(n)); }

Graph CycleGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return MustBuild(n, edges);
}

Graph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return MustBuild(n, edges);
}

Graph StarGraph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return MustBuild(leaves + 1, edges);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer pentagon
    edges.emplace_back(v, v + 5);                // spokes
    edges.emplace_back(v + 5, (v + 2) % 5 + 5);  // inner pentagram
  }
  return MustBuild(10, edges);
}

std::string GeneratorSpec::ToString() const {
  switch (kind) {
    case GeneratorKind::kErdosRenyi:
      return absl::StrCat("er:", n, ":", param);
    case GeneratorKind::kBarabasiAlbert:
      return absl::StrCat("ba:", n, ":", static_cast<std::size_t>(param));
    case GeneratorKind::kKTree:
      return absl::StrCat("ktree:", n, ":", static_cast<std::size_t>(param));
  }
  return "";
}

absl::StatusOr<GeneratorSpec> ParseGeneratorSpec(std::string_view text) {
  std::vector<absl::string_view> parts =
      absl::StrSplit(absl::string_view(text.data(), text.size()), ':');
  auto bad = [&] {
    return absl::InvalidArgumentError(absl::StrCat(
        "bad generator spec '", std::string(text), "'; expected er:<n>:<p>, ba:<n>:<m0> or ktree:<n>:<k>"));
  };
  if (parts.size() != 3) return bad();
  GeneratorSpec spec;
  std::uint64_t n = 0;
  if (!absl::SimpleAtoi(parts[1], &n)) return bad();
  spec.n = n;
  if (parts[0] == "er") {
    spec.kind = GeneratorKind::kErdosRenyi;
    if (!absl::SimpleAtod(parts[2], &spec.param)) return bad();
  } else if (parts[0] == "ba" || parts[0] == "ktree") {
    spec.kind = parts[0] == "ba" ? GeneratorKind::kBarabasiAlbert : GeneratorKind::kKTree;
    std::uint64_t param = 0;
    if (!absl::SimpleAtoi(parts[2], &param)) return bad();
    spec.param = static_cast<double>(param);
  } else {
    return bad();
  }
  return spec;
}

absl::StatusOr<Graph> Generate(const GeneratorSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GeneratorKind::kErdosRenyi:
      return GenerateErdosRenyi(spec.n, spec.param, seed);
    case GeneratorKind::kBarabasiAlbert:
      return GenerateBarabasiAlbert(spec.n, static_cast<std::size_t>(spec.param), seed);
    case GeneratorKind::kKTree:
      return GenerateKTree(spec.n, static_cast<std::size_t>(spec.param), seed);
  }
  return absl::InvalidArgumentError("unknown generator");
}

}  // namespace edgeldp
