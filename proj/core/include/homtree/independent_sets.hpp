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

#ifndef HOMTREE_INDEPENDENT_SETS_HPP
#define HOMTREE_INDEPENDENT_SETS_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "homtree/graph.hpp"

namespace homtree {

// Independent sets of a bipartite graph tallied by type
// (|A ∩ x_side|, |A ∩ y_side|). The empty set is counted, as type (0, 0).
struct IndependentSetCensus {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;

  std::uint64_t total() const;
  // Zero for types that never occur.
  std::uint64_t count(std::size_t in_x, std::size_t in_y) const;

  bool operator==(const IndependentSetCensus&) const = default;
};

// Throws GraphError when b is not a bipartition of g.
IndependentSetCensus independent_set_census(const Graph& g, const Bipartition& b);

}  // namespace homtree

#endif  // HOMTREE_INDEPENDENT_SETS_HPP
