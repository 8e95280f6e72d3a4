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

// Closed forms for homomorphism counts into stars and bistars.

#include <functional>

#include "homtree/errors.hpp"
#include "homtree/hom.hpp"
#include "homtree/independent_sets.hpp"

namespace homtree {

namespace {

constexpr std::size_t kMaxSubsetSide = 20;

void require_connected_bipartite(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (!is_connected(g)) throw PreconditionError("graph must be connected");
  if (!is_bipartite(g)) throw PreconditionError("graph must be bipartite");
}

void require_positive(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw PreconditionError("bistar needs p, q >= 1");
}

}  // namespace

HomCount hom_star_connected(SizeParameter sp, std::size_t p) {
  if (p == 0) throw PreconditionError("star needs p >= 1");
  return power(p, sp.m) + power(p, sp.n);
}

HomCount hom_star(const Graph& g, std::size_t p) {
  if (p == 0) throw PreconditionError("star needs p >= 1");
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (!is_bipartite(g)) throw PreconditionError("hom_star needs a bipartite graph");
  HomCount product = 1;
  for (const auto& c : connected_components(g)) {
    if (c.graph.order() == 1) {
      product *= static_cast<unsigned long>(p + 1);
    } else {
      product *= hom_star_connected(size_parameter(c.graph), p);
    }
  }
  return product;
}

SideChoice smaller_side(const Graph& g) {
  require_connected_bipartite(g);
  Bipartition b = *bipartition(g);
  if (b.y_side.size() < b.x_side.size()) return {b.y_side, b.x_side};
  return {b.x_side, b.y_side};
}

NeighbourhoodTally neighbourhood_size_tally(const Graph& g, const VertexSet& x) {
  if (x.size() > kMaxSubsetSide) {
    throw ResourceError("subset enumeration limited to 20 vertices, got " +
                        std::to_string(x.size()));
  }
  for (Vertex v : x) {
    if (v >= g.order()) throw GraphError("vertex out of range");
  }
  NeighbourhoodTally tally;
  std::vector<std::size_t> cover(g.order(), 0);
  std::size_t covered = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t next,
                                                           std::size_t chosen) {
    if (next == x.size()) {
      ++tally[{chosen, covered}];
      return;
    }
    walk(next + 1, chosen);
    for (Vertex w : g.neighbors(x[next])) {
      if (cover[w]++ == 0) ++covered;
    }
    walk(next + 1, chosen + 1);
    for (Vertex w : g.neighbors(x[next])) {
      if (--cover[w] == 0) --covered;
    }
  };
  walk(0, 0);
  return tally;
}

HomCount hom_bistar_subset(const Graph& g, std::size_t p, std::size_t q) {
  require_positive(p, q);
  SideChoice side = smaller_side(g);
  const std::size_t y = side.y.size();
  HomCount total = 0;
  for (const auto& [key, multiplicity] : neighbourhood_size_tally(g, side.x)) {
    const auto [a, nbhd] = key;
    const std::size_t free = y - nbhd;
    HomCount term = power(p, a) * power(q + 1, free) + power(q, a) * power(p + 1, free);
    total += term * static_cast<unsigned long>(multiplicity);
  }
  return total;
}

HomCount sur_bistar_subset(const Graph& g, std::size_t p, std::size_t q) {
  require_positive(p, q);
  SideChoice side = smaller_side(g);
  const std::size_t x = side.x.size();
  const std::size_t y = side.y.size();
  HomCount total = 0;
  for (auto [key, multiplicity] : neighbourhood_size_tally(g, side.x)) {
    const auto [a, nbhd] = key;
    // A = X itself is the only subset of size |X|; it is excluded.
    if (a == x) --multiplicity;
    if (multiplicity == 0) continue;
    const std::size_t free = y - nbhd;
    HomCount term =
        surjection_number(a, p) *
            (surjection_number(free, q) + surjection_number(free, q + 1)) +
        surjection_number(a, q) *
            (surjection_number(free, p) + surjection_number(free, p + 1));
    total += term * static_cast<unsigned long>(multiplicity);
  }
  return total;
}

HomCount hom_bistar_indep(const Graph& g, std::size_t p, std::size_t q) {
  require_positive(p, q);
  require_connected_bipartite(g);
  IndependentSetCensus census = independent_set_census(g, *bipartition(g));
  HomCount total = 0;
  for (const auto& [type, multiplicity] : census.counts) {
    const auto [a, b] = type;
    HomCount term = power(p, a) * power(q, b) + power(p, b) * power(q, a);
    total += term * static_cast<unsigned long>(multiplicity);
  }
  return total;
}

HomCount sur_shape(const Graph& g, const TreeShape& shape) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (!is_connected(g)) throw PreconditionError("sur_shape needs a connected source");
  if (g.order() == 1) return shape.kind == TreeShape::Kind::kSingle ? 1 : 0;
  if (!is_bipartite(g)) return 0;
  switch (shape.kind) {
    case TreeShape::Kind::kSingle:
      return 0;
    case TreeShape::Kind::kEdge:
      return 2;
    case TreeShape::Kind::kStar: {
      SizeParameter sp = size_parameter(g);
      return surjection_number(sp.m, shape.p) + surjection_number(sp.n, shape.p);
    }
    case TreeShape::Kind::kBistar:
      return sur_bistar_subset(g, shape.p, shape.q);
  }
  return 0;
}

HomCount hom_closed_form(const Graph& g, const TreeShape& shape) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  HomCount product = 1;
  for (const auto& c : connected_components(g)) {
    const Graph& part = c.graph;
    if (part.order() == 1) {
      product *= static_cast<unsigned long>(shape.order());
      continue;
    }
    if (!is_bipartite(part)) return 0;
    switch (shape.kind) {
      case TreeShape::Kind::kSingle:
        return 0;
      case TreeShape::Kind::kEdge:
        product *= 2;
        break;
      case TreeShape::Kind::kStar:
        product *= hom_star_connected(size_parameter(part), shape.p);
        break;
      case TreeShape::Kind::kBistar:
        product *= hom_bistar_subset(part, shape.p, shape.q);
        break;
    }
  }
  return product;
}

}  // namespace homtree
