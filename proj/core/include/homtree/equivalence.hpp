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

#ifndef HOMTREE_EQUIVALENCE_HPP
#define HOMTREE_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homtree/graph.hpp"
#include "homtree/hom.hpp"

namespace homtree {

// Multiset of the 2^k subset sums of a length-k vector, sorted ascending.
struct PsumMultiset {
  std::vector<std::uint64_t> sums;

  bool operator==(const PsumMultiset&) const = default;
};

// Throws ResourceError for vectors longer than 20.
PsumMultiset psum(std::span<const std::uint64_t> d);

// Per-component data of a bipartite graph without isolated vertices:
// the number of components, the sum of the smaller part sizes, and the
// differences n_i - m_i in component order.
struct ComponentSizes {
  std::size_t components = 0;
  std::uint64_t smaller_total = 0;
  std::vector<std::uint64_t> differences;
  std::vector<SizeParameter> parameters;
};
// Throws PreconditionError for non-bipartite input or isolated vertices.
ComponentSizes component_sizes(const Graph& g);

// (|S|, |N(S)|) over all subsets S of the smaller side X (x_side of
// bipartition() on a tie).
struct NeighborhoodProfile {
  NeighbourhoodTally entries;

  bool operator==(const NeighborhoodProfile&) const = default;
};

// Requires connected bipartite g (PreconditionError) with |X| <= 20
// (ResourceError).
NeighborhoodProfile nse_profile(const Graph& g);
// Profile over an explicitly chosen side.
NeighborhoodProfile nse_profile(const Graph& g, const VertexSet& x);

struct Evidence {
  std::string instance;
  std::string left;
  std::string right;
};

// Outcome of an equivalence test. holds is true exactly when
// first_divergence is empty.
struct EquivalenceReport {
  std::string relation;
  bool holds = false;
  std::vector<Evidence> evidence;
  std::optional<std::string> first_divergence;
};

// Equal component counts, and both edgeless or neither.
EquivalenceReport t1_equivalent(const Graph& g, const Graph& h);

// Equal component counts, equal sums of smaller part sizes and equal psum
// of the part-size differences. Evidence compares hom_star at
// p = 1 .. 2^gamma + 1.
EquivalenceReport t2_equivalent(const Graph& g, const Graph& h);

// Neighbourhood size equivalence: equal size parameters and equal
// neighbourhood profiles. For balanced graphs (m = n) either side of each
// graph may play X.
EquivalenceReport nse_equivalent(const Graph& g, const Graph& h);

// Compares |Hom(g, T)| and |Hom(h, T)| for every tree of order <=
// max_order. Throws ResourceError if that is more than 10^4 trees.
EquivalenceReport tree_equivalent_up_to(
    const Graph& g, const Graph& h, std::size_t max_order,
    CountMethod method = CountMethod::kBruteForce);

// Number of trees of order 1..max_order, without generating them.
std::uint64_t tree_count_up_to(std::size_t max_order);

// Human label for the index-th tree of its order, e.g. "n=5 #2 K_{1,4}".
std::string tree_label(const Tree& t, std::size_t index_within_order);

struct PsumCollision {
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;
};

// Exhaustive search over non-decreasing vectors of the given length with
// entries in [0, max_entry] for two distinct vectors with equal psum.
// Requires length <= 6 and max_entry <= 12 (ResourceError).
std::optional<PsumCollision> psum_collision_search(std::size_t length,
                                                   std::uint64_t max_entry);

}  // namespace homtree

#endif  // HOMTREE_EQUIVALENCE_HPP
