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

#ifndef HOMTREE_TREES_HPP
#define HOMTREE_TREES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homtree/graph.hpp"

namespace homtree {

// A graph known to be a tree, with its diameter cached.
class Tree {
 public:
  // Throws PreconditionError unless g is connected with order-1 edges.
  explicit Tree(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t diameter() const noexcept { return diameter_; }

 private:
  Graph graph_;
  std::size_t diameter_ = 0;
};

// The trees of diameter at most three, up to isomorphism:
//   Single      K1
//   Edge        K2
//   Star(p)     K_{1,p}, p >= 2
//   Bistar(p,q) B_{p,q}, 1 <= p <= q
struct TreeShape {
  enum class Kind { kSingle, kEdge, kStar, kBistar };

  Kind kind = Kind::kSingle;
  std::size_t p = 0;
  std::size_t q = 0;

  static TreeShape single() { return {Kind::kSingle, 0, 0}; }
  static TreeShape edge() { return {Kind::kEdge, 0, 0}; }
  // star(1) is the edge.
  static TreeShape star(std::size_t p);
  // Normalises to p <= q.
  static TreeShape bistar(std::size_t p, std::size_t q);

  std::size_t order() const;
  std::string to_string() const;

  auto operator<=>(const TreeShape&) const = default;
};

using ShapeMultiset = std::map<TreeShape, std::size_t>;

// One representative per isomorphism class of trees on `order` vertices,
// in a fixed generation order. Throws PreconditionError for order 0.
std::vector<Tree> enumerate_trees(std::size_t order);

// Centre 0, leaves 1..p. Throws PreconditionError for p = 0.
Tree make_star(std::size_t p);

// Centres u = 0 and v = 1; leaves 2..p+1 hang off u, p+2..p+q+1 off v.
// Throws PreconditionError when p or q is 0.
Tree make_bistar(std::size_t p, std::size_t q);

// The tree a shape names, built by make_star/make_bistar.
Tree make_tree(const TreeShape& shape);

// Empty when the diameter is four or more.
std::optional<TreeShape> classify_tree(const Tree& t);

// Shape of t[S] for every nonempty S such that t[S] is connected with
// diameter at most three.
ShapeMultiset induced_diam3_subtrees(const Tree& t);

// Every nonempty vertex subset inducing a connected subgraph of g, each
// visited exactly once. Sets are sorted. When `max_diameter` is given only
// subsets whose induced subgraph has at most that diameter are produced;
// pruning relies on g being a tree, where diameters never shrink as a
// connected subset grows.
std::vector<VertexSet> connected_vertex_subsets(
    const Graph& g, std::optional<std::size_t> max_diameter = std::nullopt);

// Canonical level sequence of t rooted at `root`: children ordered by
// non-increasing subtree sequence. Two rooted trees are isomorphic iff
// their sequences are equal.
std::vector<std::size_t> canonical_level_sequence(const Graph& t, Vertex root);

}  // namespace homtree

#endif  // HOMTREE_TREES_HPP
