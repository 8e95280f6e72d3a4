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

#ifndef HOMTREE_ISOMORPHISM_HPP
#define HOMTREE_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "homtree/graph.hpp"

namespace homtree {

// Stable colours after iterated degree refinement, computed jointly so that
// equal colours in g and h mean the same refined class. Colours are dense
// integers; the refinement stops once neither graph's partition splits.
struct JointColouring {
  std::vector<std::size_t> g_colours;
  std::vector<std::size_t> h_colours;
};
JointColouring refine_colours(const Graph& g, const Graph& h);

// An isomorphism witness: mapping[v] is the image in h of vertex v of g.
// Absent when g and h are not isomorphic. Refines colour classes by
// iterated degrees, then backtracks within classes.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

// True when `mapping` is a bijection V(g) -> V(h) preserving edges and
// non-edges.
bool is_isomorphism(const Graph& g, const Graph& h,
                    const std::vector<Vertex>& mapping);

}  // namespace homtree

#endif  // HOMTREE_ISOMORPHISM_HPP
