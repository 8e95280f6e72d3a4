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

#include <gtest/gtest.h>

#include "homtree/errors.hpp"
#include "homtree/graph.hpp"
#include "homtree/isomorphism.hpp"
#include "homtree/random_graphs.hpp"
#include "oracles.hpp"

namespace homtree {
namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

// Arbitrary graph on n <= 8 vertices, one edge per set bit of `bits`.
Graph from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<Edge> e;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if ((bits >> k) & 1) e.emplace_back(u, v);
    }
  }
  return build_graph(n, e);
}

TEST(Graph, BuildRejectsLoopsAndOutOfRange) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(build_graph(2, {{0, 2}}), GraphError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, EmptyGraphAllowed) {
  Graph g = build_graph(0, {});
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(component_count(g), 0u);
}

TEST(Graph, ComponentsAndUnion) {
  Graph g = disjoint_union(path(3), build_graph(2, {{0, 1}}));
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 3u);
  auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[1].to_parent, (std::vector<Vertex>{3, 4}));
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, BipartitionPutsSmallestVertexOnX) {
  auto b = bipartition(path(4));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->x_side, (VertexSet{0, 2}));
  EXPECT_EQ(b->y_side, (VertexSet{1, 3}));
  EXPECT_FALSE(bipartition(cycle(5)));
  EXPECT_TRUE(bipartition(cycle(6)));
}

TEST(Graph, BipartiteMatchesTwoColouringOracle) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = from_bits(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    ASSERT_EQ(is_bipartite(g), oracle::is_bipartite(g)) << "case " << i;
    if (auto b = bipartition(g)) EXPECT_NO_THROW(validate_bipartition(g, *b));
  }
}

TEST(Graph, SizeParameter) {
  EXPECT_EQ(size_parameter(path(4)), (SizeParameter{2, 2}));
  EXPECT_EQ(size_parameter(path(5)), (SizeParameter{2, 3}));
  EXPECT_THROW(size_parameter(cycle(3)), PreconditionError);
  EXPECT_THROW(size_parameter(disjoint_union(path(2), path(2))), PreconditionError);
}

TEST(Graph, DiameterAndDistances) {
  EXPECT_EQ(diameter(path(5)), 4u);
  EXPECT_EQ(diameter(cycle(6)), 3u);
  EXPECT_EQ(diameter(build_graph(1, {})), 0u);
  EXPECT_FALSE(diameter(disjoint_union(path(2), path(2))));
  auto d = distances_from(disjoint_union(path(2), path(1)), 0);
  EXPECT_EQ(d[1], 1u);
  EXPECT_FALSE(d[2]);
}

TEST(Graph, NeighbourhoodAndInducedSubgraph) {
  Graph g = cycle(6);
  const VertexSet s = {0, 2};
  EXPECT_EQ(neighborhood(g, s), (VertexSet{1, 3, 5}));
  const VertexSet t = {3, 1, 2, 2};
  Graph h = induced_subgraph(g, t);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, RelabelAndDegreeSequence) {
  Graph g = path(3);
  const std::vector<Vertex> m = {1, 0, 2};
  Graph h = relabel(g, m);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(degree_sequence(h), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(Isomorphism, SmallCases) {
  EXPECT_TRUE(is_isomorphic(path(4), relabel(path(4), std::vector<Vertex>{3, 1, 0, 2})));
  EXPECT_FALSE(is_isomorphic(path(4), build_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_FALSE(is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  EXPECT_TRUE(is_isomorphic(build_graph(0, {}), build_graph(0, {})));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const std::uint64_t mask = (std::uint64_t{1} << (n * (n - 1) / 2)) - 1;
    const Graph g = from_bits(n, rng() & mask);
    // Half the time compare with a shuffled copy, otherwise with a graph of
    // the same order and size.
    Graph h;
    if (rng() % 2 == 0) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng() % k]);
      h = relabel(g, perm);
    } else {
      do {
        h = from_bits(n, rng() & mask);
      } while (h.edge_count() != g.edge_count());
    }
    const auto found = is_isomorphic(g, h);
    ASSERT_EQ(found.has_value(), oracle::is_isomorphic(g, h)) << "case " << i;
    if (found) EXPECT_TRUE(is_isomorphism(g, h, *found));
  }
}

}  // namespace
}  // namespace homtree
