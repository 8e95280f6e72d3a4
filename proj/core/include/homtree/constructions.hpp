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

#ifndef HOMTREE_CONSTRUCTIONS_HPP
#define HOMTREE_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "homtree/graph.hpp"
#include "homtree/permutation.hpp"

namespace homtree {

// The four-class graphs on A, B, C, D (n vertices each), optionally
// augmented with hub vertices e, f, g.
//
// Vertex layout: a_1..a_n, b_1..b_n, c_1..c_n, d_1..d_n, then e, f, g when
// present. Edges:
//   a_i - b_j  for i != j
//   b_i - c_i
//   c_i - d_j  for i != j
//   a_i - d_pi(i)                    (with a permutation pi)
//   e - B ∪ D ∪ {f, g}, f - A ∪ C, g - C   (augmented form)
struct LabeledConstruction {
  std::string name;
  std::size_t n = 0;
  Graph graph;
  // labels[v] is the name of vertex v, e.g. "a3", "e".
  std::vector<std::string> labels;

  // 1-based class members.
  Vertex a(std::size_t i) const { return i - 1; }
  Vertex b(std::size_t i) const { return n + i - 1; }
  Vertex c(std::size_t i) const { return 2 * n + i - 1; }
  Vertex d(std::size_t i) const { return 3 * n + i - 1; }
  Vertex e() const { return 4 * n; }
  Vertex f() const { return 4 * n + 1; }
  Vertex g() const { return 4 * n + 2; }

  // Members of class 'a', 'b', 'c' or 'd'.
  VertexSet vertex_class(char cls) const;
};

// All constructors require n >= 3 (PreconditionError).
LabeledConstruction build_g_minus(std::size_t n);
// pi must act on n points (PreconditionError).
LabeledConstruction build_g_minus_pi(std::size_t n, const Permutation& pi);
LabeledConstruction build_g_pi(std::size_t n, const Permutation& pi);

// Two graphs on X = {a,b,c} (vertices 0..2), Y = {d,e,f,g,h} (3..7): K_{3,5}
// minus {ad, ae, af, bg, bh} and K_{3,5} minus {ad, ae, af, bg, cg}. Same
// counts into every bistar, different X-degree multisets.
struct KralPair {
  Graph first;
  Graph second;
  std::vector<std::string> labels;
};
KralPair kral_pair();

// (G_pi1, G_pi2) for n = 4, pi1 = (1 2)(3 4), pi2 = (1 2 3 4).
std::pair<LabeledConstruction, LabeledConstruction> counterexample_pair();

}  // namespace homtree

#endif  // HOMTREE_CONSTRUCTIONS_HPP
