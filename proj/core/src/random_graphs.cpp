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

#include "homtree/random_graphs.hpp"

#include <algorithm>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

std::size_t draw(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

void shuffle(Rng& rng, std::vector<SizeParameter>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

}  // namespace

Graph random_connected_bipartite(Rng& rng, std::size_t order, unsigned extra_percent) {
  if (order < 2) throw PreconditionError("random bipartite graph needs order >= 2");
  std::vector<int> side(order);
  side[0] = 0;
  side[1] = 1;
  for (std::size_t v = 2; v < order; ++v) side[v] = static_cast<int>(draw(rng, 2));

  std::vector<Edge> edges{{0, 1}};
  for (std::size_t v = 2; v < order; ++v) {
    std::vector<Vertex> opposite;
    for (Vertex u = 0; u < v; ++u) {
      if (side[u] != side[v]) opposite.push_back(u);
    }
    edges.emplace_back(opposite[draw(rng, opposite.size())], v);
  }
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (side[u] != side[v] && draw(rng, 100) < extra_percent) edges.emplace_back(u, v);
    }
  }
  return build_graph(order, edges);
}

Graph complete_bipartite_union(std::span<const SizeParameter> parts) {
  std::vector<Edge> edges;
  std::size_t base = 0;
  for (const auto& sp : parts) {
    for (std::size_t i = 0; i < sp.m; ++i) {
      for (std::size_t j = 0; j < sp.n; ++j) edges.emplace_back(base + i, base + sp.m + j);
    }
    base += sp.m + sp.n;
  }
  return build_graph(base, edges);
}

std::vector<SizeParameter> random_complete_bipartite_parts(Rng& rng, std::size_t max_components,
                                                           std::size_t max_part) {
  std::vector<SizeParameter> parts(1 + draw(rng, max_components));
  for (auto& sp : parts) {
    std::size_t x = 1 + draw(rng, max_part);
    std::size_t y = 1 + draw(rng, max_part);
    sp = {std::min(x, y), std::max(x, y)};
  }
  return parts;
}

std::vector<SizeParameter> shifted_partner(Rng& rng, std::span<const SizeParameter> parts,
                                           std::size_t max_part) {
  std::vector<SizeParameter> out(parts.begin(), parts.end());
  const std::size_t k = out.size();
  for (int attempt = 0; attempt < 8 && k > 1; ++attempt) {
    std::size_t from = draw(rng, k);
    std::size_t to = draw(rng, k);
    if (from == to || out[from].m == 1 || out[to].n == max_part) continue;
    --out[from].m;
    --out[from].n;
    ++out[to].m;
    ++out[to].n;
  }
  shuffle(rng, out);
  return out;
}

}  // namespace homtree
