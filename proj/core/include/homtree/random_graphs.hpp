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

#ifndef HOMTREE_RANDOM_GRAPHS_HPP
#define HOMTREE_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "homtree/graph.hpp"

namespace homtree {

// Seeded generators for the property corpora. Draws use `rng() % k` rather
// than <random> distributions so a seed yields the same graphs with every
// standard library.
using Rng = std::mt19937_64;

// Connected bipartite graph on `order` >= 2 vertices: a random spanning tree
// compatible with a random 2-colouring, plus each remaining cross pair with
// probability extra_percent / 100.
Graph random_connected_bipartite(Rng& rng, std::size_t order, unsigned extra_percent = 30);

// Disjoint union of K_{m_i, n_i}, one component per entry, in order.
Graph complete_bipartite_union(std::span<const SizeParameter> parts);

// 1..max_components entries with both sides in 1..max_part.
std::vector<SizeParameter> random_complete_bipartite_parts(Rng& rng, std::size_t max_components,
                                                           std::size_t max_part);

// A partner for `parts` with the same component count, the same total of
// smaller sides and the same multiset of side differences, obtained by
// shifting units between the smaller sides and shuffling. Sides stay in
// 1..max_part. May return a permutation of `parts` when no shift fits.
std::vector<SizeParameter> shifted_partner(Rng& rng, std::span<const SizeParameter> parts,
                                           std::size_t max_part);

}  // namespace homtree

#endif  // HOMTREE_RANDOM_GRAPHS_HPP
