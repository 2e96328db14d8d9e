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

#include <cmath>

#include "edgeldp/exact_counts.h"
#include "gtest/gtest.h"

namespace edgeldp {
namespace {

TEST(GeneratorsTest, ErdosRenyiEdgeCountWithinThreeSigma) {
  auto g = GenerateErdosRenyi(1000, 0.01, 42);
  ASSERT_TRUE(g.ok());
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double mean = pairs * 0.01;  // 4995
  const double sigma = std::sqrt(pairs * 0.01 * 0.99);
  EXPECT_NEAR(static_cast<double>(g->num_edges()), mean, 3.0 * sigma);
}

TEST(GeneratorsTest, ErdosRenyiExtremesAndErrors) {
  auto empty = GenerateErdosRenyi(10, 0.0, 1);
  ASSERT_TRUE(empty.ok());
  EXPECT_EQ(empty->num_edges(), 0u);
  auto full = GenerateErdosRenyi(10, 1.0, 1);
  ASSERT_TRUE(full.ok());
  EXPECT_EQ(full->num_edges(), 45u);
  EXPECT_FALSE(GenerateErdosRenyi(10, 1.5, 1).ok());
  EXPECT_FALSE(GenerateErdosRenyi(10, -0.1, 1).ok());
}

TEST(GeneratorsTest, BarabasiAlbertShape) {
  for (std::size_t m0 : {1, 2, 3, 5}) {
    auto g = GenerateBarabasiAlbert(300, m0, 7);
    ASSERT_TRUE(g.ok());
    EXPECT_EQ(g->num_edges(), m0 * (m0 + 1) / 2 + (300 - m0 - 1) * m0);
    EXPECT_LE(Degeneracy(*g).degeneracy, m0);
    for (NodeId v = 0; v < g->num_nodes(); ++v) EXPECT_GE(g->degree(v), m0);
  }
  EXPECT_FALSE(GenerateBarabasiAlbert(3, 3, 0).ok());
  EXPECT_FALSE(GenerateBarabasiAlbert(10, 0, 0).ok());
}

TEST(GeneratorsTest, KTreeShape) {
  for (std::size_t k : {1, 2, 4}) {
    auto g = GenerateKTree(50, k, 3);
    ASSERT_TRUE(g.ok());
    EXPECT_EQ(g->num_edges(), k * (k + 1) / 2 + (50 - k - 1) * k);
    EXPECT_EQ(Degeneracy(*g).degeneracy, k);
    // Each new vertex closes C(k, 2) triangles with its k-clique.
    EXPECT_EQ(CountTriangles(*g),
              (k + 1) * k * (k - 1) / 6 + (50 - k - 1) * k * (k - 1) / 2);
  }
  EXPECT_FALSE(GenerateKTree(3, 3, 0).ok());
}

TEST(GeneratorsTest, SameSeedSameGraphDifferentSeedDifferentGraph) {
  EXPECT_EQ(*GenerateBarabasiAlbert(100, 2, 9), *GenerateBarabasiAlbert(100, 2, 9));
  EXPECT_NE(*GenerateBarabasiAlbert(100, 2, 9), *GenerateBarabasiAlbert(100, 2, 10));
  EXPECT_EQ(*GenerateErdosRenyi(50, 0.2, 9), *GenerateErdosRenyi(50, 0.2, 9));
  EXPECT_NE(*GenerateErdosRenyi(50, 0.2, 9), *GenerateErdosRenyi(50, 0.2, 10));
}

TEST(GeneratorsTest, FixedFamilies) {
  EXPECT_EQ(CompleteGraph(5).num_edges(), 10u);
  EXPECT_EQ(CycleGraph(6).num_edges(), 6u);
  EXPECT_EQ(PathGraph(4).num_edges(), 3u);
  EXPECT_EQ(StarGraph(4).num_nodes(), 5u);
  EXPECT_EQ(StarGraph(4).degree(0), 4u);
  Graph petersen = PetersenGraph();
  EXPECT_EQ(petersen.num_nodes(), 10u);
  EXPECT_EQ(petersen.num_edges(), 15u);
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
}

TEST(GeneratorSpecTest, ParsesAndFormats) {
  auto er = ParseGeneratorSpec("er:100:0.05");
  ASSERT_TRUE(er.ok());
  EXPECT_EQ(er->kind, GeneratorKind::kErdosRenyi);
  EXPECT_EQ(er->n, 100u);
  EXPECT_DOUBLE_EQ(er->param, 0.05);
  auto ba = ParseGeneratorSpec("ba:200:3");
  ASSERT_TRUE(ba.ok());
  EXPECT_EQ(ba->ToString(), "ba:200:3");
  auto kt = ParseGeneratorSpec("ktree:20:2");
  ASSERT_TRUE(kt.ok());
  EXPECT_EQ(kt->kind, GeneratorKind::kKTree);
  auto g = Generate(*ba, 1);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(*g, *GenerateBarabasiAlbert(200, 3, 1));
  for (const char* bad : {"", "er", "er:10", "xx:10:1", "ba:10:x", "er:a:0.1", "ba:10:2:3"}) {
    EXPECT_FALSE(ParseGeneratorSpec(bad).ok()) << bad;
  }
}

}  // namespace
}  // namespace edgeldp
