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

#ifndef HOMTREE_GRAPH_HPP
#define HOMTREE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace homtree {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// Immutable finite simple undirected graph on vertices 0..order-1.
//
// Adjacency lists are sorted and symmetric; there are no loops. All queries
// are const, so a Graph can be shared freely between threads.
class Graph {
 public:
  // The graph with no vertices.
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(std::size_t order, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Builds a graph, collapsing repeated edges in either orientation. Throws
// GraphError naming the offending pair for a loop or out-of-range index.
Graph build_graph(std::size_t order, std::span<const Edge> edges);

inline Graph build_graph(std::size_t order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

// g1's vertices keep their indices; g2's are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct Component {
  Graph graph;
  // to_parent[i] is the vertex of the original graph that vertex i of
  // `graph` came from; ascending.
  std::vector<Vertex> to_parent;
};

// Components in order of their smallest original vertex.
std::vector<Component> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  VertexSet x_side;
  VertexSet y_side;

  bool operator==(const Bipartition&) const = default;
};

// Two-colouring by BFS. The side containing the smallest vertex of each
// component is x_side. Empty when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Throws GraphError unless b partitions V(g) with every edge crossing.
void validate_bipartition(const Graph& g, const Bipartition& b);

// Part sizes (m, n), m <= n, of a connected bipartite graph.
struct SizeParameter {
  std::size_t m = 0;
  std::size_t n = 0;

  auto operator<=>(const SizeParameter&) const = default;
};

// Throws PreconditionError unless g is connected, bipartite and has at
// least two vertices.
SizeParameter size_parameter(const Graph& g);

// Union of the neighbourhoods of the vertices in s. May intersect s when g
// is not bipartite.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> s);

// Longest shortest path; std::nullopt stands for infinity (disconnected).
// K1 has diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

// BFS distances from `source`; unreachable vertices get std::nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g,
                                                       Vertex source);

// Vertices of s are renumbered in ascending order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// Applies a vertex relabelling: vertex v of g becomes mapping[v]. Throws
// GraphError unless mapping is a permutation of V(g).
Graph relabel(const Graph& g, std::span<const Vertex> mapping);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace homtree

#endif  // HOMTREE_GRAPH_HPP
