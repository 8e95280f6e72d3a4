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

#include "homtree/trees.hpp"

#include <algorithm>
#include <functional>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Canonical sequence of the subtree hanging below `root` when the edge to
// `parent` is cut. Levels are relative to `root`.
std::vector<std::size_t> canonical_below(const Graph& t, Vertex root,
                                         Vertex parent) {
  std::vector<std::vector<std::size_t>> children;
  for (Vertex w : t.neighbors(root)) {
    if (w != parent) children.push_back(canonical_below(t, w, root));
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  std::vector<std::size_t> seq{0};
  for (const auto& child : children) {
    for (std::size_t level : child) seq.push_back(level + 1);
  }
  return seq;
}

Graph graph_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<Edge> edges;
  // last[d] is the most recent vertex seen at depth d.
  std::vector<Vertex> last(levels.size(), 0);
  for (Vertex i = 0; i < levels.size(); ++i) {
    if (i > 0) edges.emplace_back(last[levels[i] - 1], i);
    last[levels[i]] = i;
  }
  return build_graph(levels.size(), edges);
}

// Accepts a rooted tree iff its root is the representative centroid:
// a centroid, and for bicentroidal trees the one whose own half has the
// larger canonical sequence.
bool rooted_at_representative_centroid(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex child : g.neighbors(0)) {
    auto below = canonical_below(g, child, 0);
    const std::size_t size = below.size();
    if (2 * size > n) return false;
    if (2 * size == n) {
      auto own_half = canonical_below(g, 0, child);
      return own_half >= below;
    }
  }
  return true;
}

}  // namespace

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (graph_.order() == 0) throw PreconditionError("a tree needs a vertex");
  if (graph_.edge_count() + 1 != graph_.order() || !is_connected(graph_)) {
    throw PreconditionError("graph is not a tree");
  }
  diameter_ = *homtree::diameter(graph_);
}

TreeShape TreeShape::star(std::size_t p) {
  if (p == 0) throw PreconditionError("star needs p >= 1");
  if (p == 1) return edge();
  return {Kind::kStar, p, 0};
}

TreeShape TreeShape::bistar(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw PreconditionError("bistar needs p, q >= 1");
  return {Kind::kBistar, std::min(p, q), std::max(p, q)};
}

std::size_t TreeShape::order() const {
  switch (kind) {
    case Kind::kSingle: return 1;
    case Kind::kEdge: return 2;
    case Kind::kStar: return p + 1;
    case Kind::kBistar: return p + q + 2;
  }
  return 0;
}

std::string TreeShape::to_string() const {
  switch (kind) {
    case Kind::kSingle: return "K1";
    case Kind::kEdge: return "K2";
    case Kind::kStar: return "K_{1," + std::to_string(p) + "}";
    case Kind::kBistar:
      return "B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  }
  return "?";
}

std::vector<std::size_t> canonical_level_sequence(const Graph& t, Vertex root) {
  if (root >= t.order()) throw GraphError("root out of range");
  return canonical_below(t, root, kNoVertex);
}

std::vector<Tree> enumerate_trees(std::size_t order) {
  if (order == 0) throw PreconditionError("tree order must be at least 1");
  std::vector<Tree> out;
  // Rooted trees as level sequences, from the path (0,1,...,n-1) down to the
  // star (0,1,...,1); each rooted tree appears once in canonical form.
  std::vector<std::size_t> levels(order);
  for (std::size_t i = 0; i < order; ++i) levels[i] = i;
  while (true) {
    Graph g = graph_from_levels(levels);
    if (rooted_at_representative_centroid(g)) out.emplace_back(std::move(g));

    std::size_t p = order;
    for (std::size_t i = order; i-- > 1;) {
      if (levels[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == order) break;
    std::size_t q = p;
    while (levels[q] != levels[p] - 1) --q;
    for (std::size_t i = p; i < order; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

Tree make_star(std::size_t p) {
  if (p == 0) throw PreconditionError("star needs p >= 1");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= p; ++leaf) edges.emplace_back(0, leaf);
  return Tree(build_graph(p + 1, edges));
}

Tree make_bistar(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) {
    throw PreconditionError("bistar needs p, q >= 1 (otherwise it is a star)");
  }
  std::vector<Edge> edges{{0, 1}};
  for (Vertex leaf = 2; leaf < p + 2; ++leaf) edges.emplace_back(0, leaf);
  for (Vertex leaf = p + 2; leaf < p + q + 2; ++leaf) edges.emplace_back(1, leaf);
  return Tree(build_graph(p + q + 2, edges));
}

Tree make_tree(const TreeShape& shape) {
  switch (shape.kind) {
    case TreeShape::Kind::kSingle: return Tree(build_graph(1, {}));
    case TreeShape::Kind::kEdge: return make_star(1);
    case TreeShape::Kind::kStar: return make_star(shape.p);
    case TreeShape::Kind::kBistar: return make_bistar(shape.p, shape.q);
  }
  throw PreconditionError("unknown tree shape");
}

std::optional<TreeShape> classify_tree(const Tree& t) {
  const Graph& g = t.graph();
  switch (t.diameter()) {
    case 0: return TreeShape::single();
    case 1: return TreeShape::edge();
    case 2: return TreeShape::star(g.order() - 1);
    case 3: {
      std::vector<std::size_t> inner_degrees;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 1) inner_degrees.push_back(g.degree(v) - 1);
      }
      return TreeShape::bistar(inner_degrees.at(0), inner_degrees.at(1));
    }
    default: return std::nullopt;
  }
}

std::vector<VertexSet> connected_vertex_subsets(
    const Graph& g, std::optional<std::size_t> max_diameter) {
  std::vector<VertexSet> out;
  const std::size_t n = g.order();

  // Extension-set enumeration: grow a connected set from a fixed root,
  // only ever adding vertices larger than the root and not adjacent to the
  // set as it was when the candidate was first offered.
  std::vector<std::size_t> near(n, 0);  // members of the set or its neighbours
  std::vector<Vertex> current;

  auto fits = [&]() {
    if (!max_diameter) return true;
    auto d = diameter(induced_subgraph(g, current));
    return d && *d <= *max_diameter;
  };

  std::function<void(Vertex, std::vector<Vertex>)> grow =
      [&](Vertex root, std::vector<Vertex> extension) {
        VertexSet sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        while (!extension.empty()) {
          Vertex w = extension.back();
          extension.pop_back();

          std::vector<Vertex> next = extension;
          for (Vertex u : g.neighbors(w)) {
            if (u > root && near[u] == 0) next.push_back(u);
          }
          current.push_back(w);
          ++near[w];
          for (Vertex u : g.neighbors(w)) ++near[u];
          if (fits()) grow(root, std::move(next));
          for (Vertex u : g.neighbors(w)) --near[u];
          --near[w];
          current.pop_back();
        }
      };

  for (Vertex root = 0; root < n; ++root) {
    current = {root};
    ++near[root];
    for (Vertex u : g.neighbors(root)) ++near[u];
    std::vector<Vertex> extension;
    for (Vertex u : g.neighbors(root)) {
      if (u > root) extension.push_back(u);
    }
    grow(root, std::move(extension));
    for (Vertex u : g.neighbors(root)) --near[u];
    --near[root];
  }
  return out;
}

ShapeMultiset induced_diam3_subtrees(const Tree& t) {
  ShapeMultiset shapes;
  for (const auto& subset : connected_vertex_subsets(t.graph(), 3)) {
    Tree sub(induced_subgraph(t.graph(), subset));
    ++shapes[*classify_tree(sub)];
  }
  return shapes;
}

}  // namespace homtree
