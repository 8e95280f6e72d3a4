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

#ifndef HOMTREE_HOM_HPP
#define HOMTREE_HOM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homtree/count.hpp"
#include "homtree/graph.hpp"
#include "homtree/trees.hpp"

namespace homtree {

// Counting homomorphisms G -> H.
//
// Three independent routes are provided and cross-checked by the test
// suites:
//   * brute force: backtracking over vertex assignments (hom_count);
//   * closed forms for targets of diameter <= 3 (stars, bistars);
//   * for sources of diameter <= 3, a sum of surjective counts over the
//     induced subtrees of diameter <= 3 of the target tree.
//
// Sources and targets must have at least one vertex; order-0 graphs raise
// PreconditionError.

enum class CountMethod { kBruteForce, kClosedForm, kDiam3Decomposition };

std::string_view to_string(CountMethod m);
// Accepts "brute", "closed" and "decomp".
std::optional<CountMethod> parse_count_method(std::string_view name);

// |Hom(g, h)|. Disconnected g is handled as a product over its components;
// a connected g into a disconnected h as a sum over h's components. Each
// connected piece is counted by backtracking in BFS order from a
// maximum-degree vertex with forward checking. Targets are limited to 64
// vertices (ResourceError).
HomCount hom_count(const Graph& g, const Graph& h);

// |Sur(g, h)| by inclusion-exclusion over the vertex subsets of h:
//   sum_{S ⊆ V(h)} (-1)^{|V(h)| - |S|} |Hom(g, h[S])|.
// h may have at most 20 vertices (ResourceError).
HomCount sur_count(const Graph& g, const Graph& h);

// |Sur(g, h)| by walking every homomorphism and keeping those whose image
// covers V(h); branches that can no longer cover h are cut. Exponential in
// |V(g)|: intended as an independent check on small inputs.
HomCount sur_count_by_enumeration(const Graph& g, const Graph& h);

// p^m + p^n. Throws PreconditionError for p = 0.
HomCount hom_star_connected(SizeParameter sp, std::size_t p);

// prod_i (p^{m_i} + p^{n_i}) over the components of a bipartite g; an
// isolated vertex contributes p + 1. Throws PreconditionError for
// non-bipartite g or p = 0.
HomCount hom_star(const Graph& g, std::size_t p);

// The part of a connected bipartite graph over which subsets are
// enumerated: the smaller side, or x_side of bipartition() on a tie.
struct SideChoice {
  VertexSet x;
  VertexSet y;
};
SideChoice smaller_side(const Graph& g);

// For every S ⊆ x, tally (|S|, |N(S)|). Throws ResourceError when
// |x| > 20.
using NeighbourhoodTally = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;
NeighbourhoodTally neighbourhood_size_tally(const Graph& g, const VertexSet& x);

// |Hom(g, B_{p,q})| by subset enumeration over X:
//   sum_{A ⊆ X} p^|A| (q+1)^{|Y \ N(A)|} + sum_{A ⊆ X} q^|A| (p+1)^{|Y \ N(A)|}.
// g must be connected and bipartite (PreconditionError), p, q >= 1.
HomCount hom_bistar_subset(const Graph& g, std::size_t p, std::size_t q);

// |Sur(g, B_{p,q})|: as above but over proper subsets A of X, with
// surjection numbers in place of powers.
HomCount sur_bistar_subset(const Graph& g, std::size_t p, std::size_t q);

// |Hom(g, B_{p,q})| from the independent-set census:
//   sum_{(a,b)} count(a,b) (p^a q^b + p^b q^a).
HomCount hom_bistar_indep(const Graph& g, std::size_t p, std::size_t q);

// |Sur(g, T)| for connected g and the tree named by `shape`, from the
// closed forms.
HomCount sur_shape(const Graph& g, const TreeShape& shape);

// |Hom(g, T)| for any g and the tree named by `shape`, from the closed
// forms, multiplying over components of g.
HomCount hom_closed_form(const Graph& g, const TreeShape& shape);

// |Hom(g, t)| = sum over induced subtrees t' of t with diameter <= 3 of
// |Sur(g, t')|. Requires connected g of diameter <= 3 (PreconditionError).
HomCount hom_tree_diam3_decomp(const Graph& g, const Tree& t);

// Dispatch on method. kClosedForm throws PreconditionError when t has
// diameter >= 4.
HomCount count_homs(const Graph& g, const Tree& t, CountMethod method);

// All trees of order 1..max_order, in enumeration order.
std::vector<Tree> trees_up_to(std::size_t max_order);

struct ProfileEntry {
  Tree tree;
  HomCount count;
};

// Counts against every tree of order <= max_tree_order. Trees are
// evaluated in parallel (HOMTREE_THREADS); the result is in enumeration
// order.
std::vector<ProfileEntry> hom_profile(const Graph& g, std::size_t max_tree_order,
                                      CountMethod method);

}  // namespace homtree

#endif  // HOMTREE_HOM_HPP
