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

#include "homtree/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void check_vertex_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= g.order()) {
      throw GraphError("vertex " + std::to_string(v) +
                       " out of range for graph of order " +
                       std::to_string(g.order()));
    }
  }
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t order, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(order, {});
  for (const Edge& e : edges) {
    if (e.first == e.second) {
      throw GraphError("loop edge " + edge_text(e));
    }
    if (e.first >= order || e.second >= order) {
      throw GraphError("edge " + edge_text(e) +
                       " out of range for order " + std::to_string(order));
    }
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
  }
  std::size_t twice_edges = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_edges += nbrs.size();
  }
  g.edge_count_ = twice_edges / 2;
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const std::size_t shift = g1.order();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return build_graph(g1.order() + g2.order(), edges);
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members{root};
    seen[root] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back({induced_subgraph(g, members), std::move(members)});
  }
  return out;
}

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    ++count;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  // colour: -1 unvisited, 0 x_side, 1 y_side.
  std::vector<int> colour(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < g.order(); ++v) {
    (colour[v] == 0 ? b.x_side : b.y_side).push_back(v);
  }
  return b;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

void validate_bipartition(const Graph& g, const Bipartition& b) {
  std::vector<int> side(g.order(), -1);
  auto mark = [&](const VertexSet& s, int label) {
    for (Vertex v : s) {
      if (v >= g.order()) {
        throw GraphError("bipartition vertex " + std::to_string(v) +
                         " out of range");
      }
      if (side[v] != -1) {
        throw GraphError("bipartition lists vertex " + std::to_string(v) +
                         " twice");
      }
      side[v] = label;
    }
  };
  mark(b.x_side, 0);
  mark(b.y_side, 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (side[v] == -1) {
      throw GraphError("bipartition misses vertex " + std::to_string(v));
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) {
      throw GraphError("edge " + edge_text({u, v}) +
                       " lies inside one side of the bipartition");
    }
  }
}

SizeParameter size_parameter(const Graph& g) {
  if (g.order() < 2) {
    throw PreconditionError("size parameter needs at least two vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionError("size parameter needs a connected graph");
  }
  auto b = bipartition(g);
  if (!b) throw PreconditionError("size parameter needs a bipartite graph");
  const std::size_t x = b->x_side.size();
  const std::size_t y = b->y_side.size();
  return {std::min(x, y), std::max(x, y)};
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  std::vector<bool> in(g.order(), false);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) in[w] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g,
                                                       Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  if (source >= g.order()) {
    throw GraphError("source vertex " + std::to_string(source) +
                     " out of range");
  }
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& d : distances_from(g, v)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (Vertex w : g.neighbors(sorted[i])) {
      if (index[w] != g.order() && i < index[w]) edges.emplace_back(i, index[w]);
    }
  }
  return build_graph(sorted.size(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> mapping) {
  if (mapping.size() != g.order()) {
    throw GraphError("relabelling has wrong length");
  }
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : mapping) {
    if (v >= g.order() || hit[v]) throw GraphError("relabelling is not a bijection");
    hit[v] = true;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(mapping[u], mapping[v]);
  return build_graph(g.order(), edges);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace homtree
