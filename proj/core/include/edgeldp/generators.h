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

#ifndef EDGELDP_GENERATORS_H_
#define EDGELDP_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "edgeldp/graph.h"

namespace edgeldp {

// G(n, p): every unordered pair independently with probability p.
absl::StatusOr<Graph> GenerateErdosRenyi(std::size_t n, double p, std::uint64_t seed);

// Preferential attachment seeded with a clique on m0 + 1 nodes; each later
// node attaches to m0 distinct earlier nodes chosen proportionally to
// degree. Connected, and degeneracy <= m0. Requires n > m0 >= 1.
absl::StatusOr<Graph> GenerateBarabasiAlbert(std::size_t n, std::size_t m0,
                                             std::uint64_t seed);

// Random k-tree: a (k+1)-clique grown by attaching each new node to a
// uniformly chosen existing k-clique. Degeneracy is exactly k when n > k.
absl::StatusOr<Graph> GenerateKTree(std::size_t n, std::size_t k, std::uint64_t seed);

// Graph builders used in tests and examples.
Graph CompleteGraph(std::size_t n);
Graph CycleGraph(std::size_t n);  // n >= 3
Graph PathGraph(std::size_t n);
Graph StarGraph(std::size_t leaves);  // center 0, leaves 1..leaves
Graph PetersenGraph();

enum class GeneratorKind { kErdosRenyi, kBarabasiAlbert, kKTree };

// Parsed form of "er:<n>:<p>" | "ba:<n>:<m0>" | "ktree:<n>:<k>".
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kErdosRenyi;
  std::size_t n = 0;
  double param = 0.0;  // p for er, m0 for ba, k for ktree

  std::string ToString() const;
};

absl::StatusOr<GeneratorSpec> ParseGeneratorSpec(std::string_view text);

absl::StatusOr<Graph> Generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace edgeldp

#endif  // EDGELDP_GENERATORS_H_
