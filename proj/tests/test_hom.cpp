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

#include <cstdlib>

#include <gtest/gtest.h>

#include "homtree/constructions.hpp"
#include "homtree/errors.hpp"
#include "homtree/hom.hpp"
#include "homtree/independent_sets.hpp"
#include "homtree/parallel.hpp"
#include "homtree/random_graphs.hpp"
#include "oracles.hpp"

namespace homtree {
namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph random_graph(Rng& rng, std::size_t n, unsigned percent) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) e.emplace_back(u, v);
    }
  }
  return build_graph(n, e);
}

HomCount big(std::uint64_t v) { return HomCount(std::to_string(v)); }

TEST(Count, SmallValues) {
  EXPECT_EQ(power(3, 4), 81);
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(binomial(9, 4), 126);
  EXPECT_EQ(surjection_number(3, 2), 6);
  EXPECT_EQ(surjection_number(4, 2), 14);
  EXPECT_EQ(surjection_number(5, 1), 1);
  EXPECT_EQ(surjection_number(2, 3), 0);
  EXPECT_EQ(surjection_number(4, 4), 24);
  EXPECT_EQ(to_decimal(power(2, 100)), "1267650600228229401496703205376");
}

TEST(Hom, RejectsEmptyAndHugeGraphs) {
  EXPECT_THROW(hom_count(build_graph(0, {}), path(2)), PreconditionError);
  EXPECT_THROW(hom_count(path(2), build_graph(0, {})), PreconditionError);
  EXPECT_THROW(hom_count(path(2), path(65)), ResourceError);
  EXPECT_THROW(sur_count(path(2), path(21)), ResourceError);
}

TEST(Hom, MatchesMapEnumerationOracle) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 1 + rng() % 6, 40);
    const Graph h = random_graph(rng, 1 + rng() % 5, 50);
    ASSERT_EQ(hom_count(g, h), big(oracle::hom_count(g, h))) << "case " << i;
  }
}

TEST(Hom, SurjectionsMatchOracle) {
  Rng rng(5);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 1 + rng() % 6, 45);
    const Graph h = random_graph(rng, 1 + rng() % 4, 60);
    const HomCount expected = big(oracle::sur_count(g, h));
    ASSERT_EQ(sur_count(g, h), expected) << "case " << i;
    ASSERT_EQ(sur_count_by_enumeration(g, h), expected) << "case " << i;
  }
}

TEST(Hom, ProductAndSumRules) {
  Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    const Graph g1 = random_graph(rng, 1 + rng() % 5, 50);
    const Graph g2 = random_graph(rng, 1 + rng() % 5, 50);
    const Graph h = random_graph(rng, 1 + rng() % 5, 50);
    EXPECT_EQ(hom_count(disjoint_union(g1, g2), h), hom_count(g1, h) * hom_count(g2, h));
    const Graph c = random_connected_bipartite(rng, 2 + rng() % 5);
    EXPECT_EQ(hom_count(c, disjoint_union(g1, g2)), hom_count(c, g1) + hom_count(c, g2));
  }
}

// Reference counts from an independent implementation.
TEST(Hom, FrozenCounterexampleValues) {
  const auto [first, second] = counterexample_pair();
  struct Row {
    Graph target;
    std::uint64_t count;
  };
  const std::vector<Row> rows = {{make_star(2).graph(), 1536},
                                 {path(4), 3720},
                                 {make_star(3).graph(), 78732},
                                 {path(5), 5904},
                                 {make_bistar(1, 2).graph(), 83144}};
  for (const auto& row : rows) {
    EXPECT_EQ(hom_count(first.graph, row.target), big(row.count));
    EXPECT_EQ(hom_count(second.graph, row.target), big(row.count));
  }
}

TEST(Hom, FrozenKralValues) {
  const KralPair k = kral_pair();
  EXPECT_EQ(hom_count(k.first, make_bistar(2, 3).graph()), 1614);
  EXPECT_EQ(hom_count(k.second, make_bistar(2, 3).graph()), 1614);
  EXPECT_EQ(hom_count(k.first, make_bistar(1, 1).graph()), 98);
  EXPECT_EQ(hom_count(k.first, make_bistar(6, 6).graph()), 38978);
  EXPECT_EQ(hom_count(k.second, make_bistar(6, 6).graph()), 38978);
  // Separated by a tree of diameter 4.
  EXPECT_EQ(hom_count(k.first, path(5)), 158);
  EXPECT_EQ(hom_count(k.second, path(5)), 170);
}

TEST(Stars, ClosedFormAgreesWithBruteForce) {
  Rng rng(13);
  for (int i = 0; i < 80; ++i) {
    // Unions of connected bipartite pieces and isolated vertices.
    Graph g = random_connected_bipartite(rng, 2 + rng() % 5);
    if (rng() % 2) g = disjoint_union(g, random_connected_bipartite(rng, 2 + rng() % 4));
    if (rng() % 3 == 0) g = disjoint_union(g, build_graph(1, {}));
    for (std::size_t p = 1; p <= 4; ++p) {
      ASSERT_EQ(hom_star(g, p), hom_count(g, make_star(p).graph())) << "case " << i;
    }
  }
  EXPECT_EQ(hom_star_connected({2, 3}, 2), 12);
  EXPECT_EQ(hom_star(build_graph(1, {}), 3), 4);
  EXPECT_THROW(hom_star(path(3), 0), PreconditionError);
  EXPECT_THROW(hom_star(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 2), PreconditionError);
}

TEST(Bistars, ThreeRoutesAgree) {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_connected_bipartite(rng, 2 + rng() % 7);
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const Graph b = make_bistar(p, q).graph();
        const HomCount brute = hom_count(g, b);
        ASSERT_EQ(hom_bistar_subset(g, p, q), brute);
        ASSERT_EQ(hom_bistar_indep(g, p, q), brute);
        ASSERT_EQ(sur_bistar_subset(g, p, q), sur_count(g, b));
      }
    }
  }
}

TEST(Bistars, NeighbourhoodTallyRowSums) {
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_connected_bipartite(rng, 2 + rng() % 9);
    const SideChoice side = smaller_side(g);
    std::map<std::size_t, std::uint64_t> rows;
    for (const auto& [key, count] : neighbourhood_size_tally(g, side.x)) rows[key.first] += count;
    for (std::size_t s = 0; s <= side.x.size(); ++s) {
      EXPECT_EQ(HomCount(std::to_string(rows[s])), binomial(side.x.size(), s));
    }
  }
}

TEST(ClosedForms, AllShapesUpToOrderSeven) {
  Rng rng(23);
  std::vector<TreeShape> shapes = {TreeShape::single(), TreeShape::edge()};
  for (std::size_t p = 2; p <= 6; ++p) shapes.push_back(TreeShape::star(p));
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t q = p; p + q + 2 <= 7; ++q) shapes.push_back(TreeShape::bistar(p, q));
  }
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(rng, 1 + rng() % 6, 40);
    for (const auto& shape : shapes) {
      ASSERT_EQ(hom_closed_form(g, shape), hom_count(g, make_tree(shape).graph()))
          << shape.to_string() << " case " << i;
    }
  }
}

TEST(Decomposition, SoundOnSmallDiameterSources) {
  Rng rng(29);
  const auto trees = trees_up_to(7);
  int tested = 0;
  while (tested < 25) {
    const Graph g = random_connected_bipartite(rng, 2 + rng() % 6, 50);
    if (*diameter(g) > 3) continue;
    ++tested;
    for (const auto& t : trees) {
      ASSERT_EQ(hom_tree_diam3_decomp(g, t), hom_count(g, t.graph()));
    }
  }
  EXPECT_THROW(hom_tree_diam3_decomp(path(5), make_star(2)), PreconditionError);
}

TEST(CountHoms, Dispatch) {
  const Graph g = path(3);
  const Tree t = make_bistar(1, 2);
  EXPECT_EQ(count_homs(g, t, CountMethod::kBruteForce), count_homs(g, t, CountMethod::kClosedForm));
  EXPECT_EQ(count_homs(g, t, CountMethod::kBruteForce),
            count_homs(g, t, CountMethod::kDiam3Decomposition));
  EXPECT_THROW(count_homs(g, Tree(path(5)), CountMethod::kClosedForm), PreconditionError);
  EXPECT_EQ(parse_count_method("decomp"), CountMethod::kDiam3Decomposition);
  EXPECT_FALSE(parse_count_method("fast"));
  EXPECT_EQ(to_string(CountMethod::kClosedForm), "closed");
}

TEST(IndependentSets, CensusMatchesSubsetEnumeration) {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_connected_bipartite(rng, 2 + rng() % 15, 20);
    const auto b = *bipartition(g);
    const auto census = independent_set_census(g, b);
    ASSERT_EQ(census.counts, oracle::census(g, b.x_side)) << "case " << i;
  }
  Bipartition wrong{{0, 1}, {2}};
  EXPECT_THROW(independent_set_census(path(3), wrong), GraphError);
}

TEST(Profile, ParallelMatchesSequential) {
  const Graph g = make_bistar(2, 3).graph();
  ::setenv("HOMTREE_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const auto one = hom_profile(g, 8, CountMethod::kBruteForce);
  ::setenv("HOMTREE_THREADS", "4", 1);
  EXPECT_EQ(worker_count(), 4u);
  const auto four = hom_profile(g, 8, CountMethod::kBruteForce);
  ::setenv("HOMTREE_THREADS", "0", 1);
  EXPECT_GE(worker_count(), 1u);
  ::setenv("HOMTREE_THREADS", "lots", 1);
  EXPECT_GE(worker_count(), 1u);
  ::unsetenv("HOMTREE_THREADS");
  ASSERT_EQ(one.size(), 1u + 1 + 1 + 2 + 3 + 6 + 11 + 23);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].count, four[i].count);
    EXPECT_EQ(one[i].tree.graph(), four[i].tree.graph());
  }
}

TEST(ParallelFor, PropagatesExceptions) {
  ::setenv("HOMTREE_THREADS", "3", 1);
  EXPECT_THROW(parallel_for(50, [](std::size_t i) {
                 if (i == 17) throw ResourceError("boom");
               }),
               ResourceError);
  ::unsetenv("HOMTREE_THREADS");
}

}  // namespace
}  // namespace homtree
