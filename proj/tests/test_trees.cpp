// Copyright 2026 The homtree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include <gtest/gtest.h>

#include "homtree/errors.hpp"
#include "homtree/hom.hpp"
#include "homtree/random_graphs.hpp"
#include "homtree/trees.hpp"
#include "oracles.hpp"

namespace homtree {
namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

TEST(Tree, RejectsNonTrees) {
  EXPECT_THROW(Tree(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})), PreconditionError);
  EXPECT_THROW(Tree(build_graph(4, {{0, 1}, {2, 3}})), PreconditionError);
  EXPECT_THROW(Tree(build_graph(0, {})), PreconditionError);
  EXPECT_EQ(Tree(path(6)).diameter(), 5u);
  EXPECT_EQ(Tree(build_graph(1, {})).diameter(), 0u);
}

TEST(TreeShape, Normalisation) {
  EXPECT_EQ(TreeShape::star(1), TreeShape::edge());
  EXPECT_THROW(TreeShape::star(0), PreconditionError);
  EXPECT_EQ(TreeShape::bistar(3, 1), TreeShape::bistar(1, 3));
  EXPECT_EQ(TreeShape::bistar(3, 1).to_string(), "B_{1,3}");
  EXPECT_EQ(TreeShape::star(4).to_string(), "K_{1,4}");
  EXPECT_EQ(TreeShape::single().to_string(), "K1");
  EXPECT_EQ(TreeShape::edge().to_string(), "K2");
  EXPECT_EQ(TreeShape::bistar(2, 3).order(), 7u);
  EXPECT_EQ(TreeShape::star(3).order(), 4u);
}

TEST(TreeShape, ClassifyRoundTrip) {
  for (std::size_t p = 1; p <= 5; ++p) {
    EXPECT_EQ(classify_tree(make_star(p)), TreeShape::star(p));
    for (std::size_t q = 1; q <= 5; ++q) {
      EXPECT_EQ(classify_tree(make_bistar(p, q)), TreeShape::bistar(p, q));
    }
  }
  EXPECT_EQ(classify_tree(Tree(build_graph(1, {}))), TreeShape::single());
  EXPECT_FALSE(classify_tree(Tree(path(5))));
}

TEST(Enumeration, KnownCounts) {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto trees = enumerate_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << "n=" << n;
    for (const auto& t : trees) EXPECT_EQ(t.order(), n);
  }
  EXPECT_EQ(trees_up_to(11).size(), 436u);
}

TEST(Enumeration, SameClassesAsPruferDecoding) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::string> codes;
    for (const auto& t : enumerate_trees(n)) codes.insert(oracle::tree_code(t.graph()));
    EXPECT_EQ(codes.size(), enumerate_trees(n).size()) << "duplicate at n=" << n;
    EXPECT_EQ(codes, oracle::prufer_tree_classes(n)) << "n=" << n;
  }
}

TEST(Enumeration, Deterministic) {
  const auto a = enumerate_trees(8);
  const auto b = enumerate_trees(8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].graph(), b[i].graph());
}

TEST(LevelSequence, StarAndPath) {
  const Graph star = make_star(3).graph();
  Vertex centre = 0;
  for (Vertex v = 0; v < star.order(); ++v) {
    if (star.degree(v) == 3) centre = v;
  }
  EXPECT_EQ(canonical_level_sequence(star, centre), (std::vector<std::size_t>{0, 1, 1, 1}));
  EXPECT_EQ(canonical_level_sequence(path(4), 1), (std::vector<std::size_t>{0, 1, 2, 1}));
}

std::vector<VertexSet> connected_subsets_oracle(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((mask >> v) & 1) s.push_back(v);
    }
    if (is_connected(induced_subgraph(g, s))) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ConnectedSubsets, EachSubsetOnce) {
  EXPECT_EQ(connected_vertex_subsets(path(4)).size(), 10u);
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_connected_bipartite(rng, 2 + rng() % 8, 35);
    auto found = connected_vertex_subsets(g);
    std::sort(found.begin(), found.end());
    ASSERT_EQ(found, connected_subsets_oracle(g)) << "case " << i;
  }
}

TEST(ConnectedSubsets, DiameterBoundOnTrees) {
  for (const auto& t : enumerate_trees(8)) {
    auto found = connected_vertex_subsets(t.graph(), 3);
    std::sort(found.begin(), found.end());
    std::vector<VertexSet> expected;
    for (const auto& s : connected_subsets_oracle(t.graph())) {
      if (*diameter(induced_subgraph(t.graph(), s)) <= 3) expected.push_back(s);
    }
    ASSERT_EQ(found, expected);
  }
}

TEST(InducedSubtrees, PathOnFive) {
  const ShapeMultiset shapes = induced_diam3_subtrees(Tree(path(5)));
  const ShapeMultiset expected = {{TreeShape::single(), 5},
                                  {TreeShape::edge(), 4},
                                  {TreeShape::star(2), 3},
                                  {TreeShape::bistar(1, 1), 2}};
  EXPECT_EQ(shapes, expected);
}

}  // namespace
}  // namespace homtree
