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

#include "homtree/independent_sets.hpp"

#include <vector>

namespace homtree {

std::uint64_t IndependentSetCensus::total() const {
  std::uint64_t sum = 0;
  for (const auto& [type, n] : counts) sum += n;
  return sum;
}

std::uint64_t IndependentSetCensus::count(std::size_t in_x,
                                          std::size_t in_y) const {
  auto it = counts.find({in_x, in_y});
  return it == counts.end() ? 0 : it->second;
}

namespace {

class CensusWalker {
 public:
  CensusWalker(const Graph& g, const Bipartition& b)
      : g_(g), in_x_(g.order(), false), blocked_(g.order(), 0) {
    for (Vertex v : b.x_side) in_x_[v] = true;
  }

  IndependentSetCensus run() {
    walk(0, 0, 0);
    return std::move(census_);
  }

 private:
  // blocked_[v] counts chosen neighbours of v; a vertex is a candidate only
  // while that count is zero.
  void walk(Vertex next, std::size_t x_count, std::size_t y_count) {
    if (next == g_.order()) {
      ++census_.counts[{x_count, y_count}];
      return;
    }
    walk(next + 1, x_count, y_count);
    if (blocked_[next] != 0) return;
    for (Vertex w : g_.neighbors(next)) ++blocked_[w];
    if (in_x_[next]) {
      walk(next + 1, x_count + 1, y_count);
    } else {
      walk(next + 1, x_count, y_count + 1);
    }
    for (Vertex w : g_.neighbors(next)) --blocked_[w];
  }

  const Graph& g_;
  std::vector<bool> in_x_;
  std::vector<std::size_t> blocked_;
  IndependentSetCensus census_;
};

}  // namespace

IndependentSetCensus independent_set_census(const Graph& g,
                                            const Bipartition& b) {
  validate_bipartition(g, b);
  return CensusWalker(g, b).run();
}

}  // namespace homtree
