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

// Slow, obviously-correct reference implementations used only by tests.

#ifndef HOMTREE_TESTS_ORACLES_HPP
#define HOMTREE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "homtree/graph.hpp"

namespace homtree::oracle {

inline bool is_hom(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  for (const auto& [u, v] : g.edges()) {
    if (!h.adjacent(map[u], map[v])) return false;
  }
  return true;
}

// Visits every map V(g) -> V(h), |V(h)|^|V(g)| of them.
inline void for_each_map(const Graph& g, const Graph& h,
                         const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> map(g.order(), 0);
  const std::size_t k = h.order();
  if (k == 0) return;
  while (true) {
    visit(map);
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == k) map[i++] = 0;
    if (i == map.size()) return;
  }
}

inline std::uint64_t hom_count(const Graph& g, const Graph& h) {
  std::uint64_t n = 0;
  for_each_map(g, h, [&](const std::vector<Vertex>& m) { n += is_hom(g, h, m) ? 1 : 0; });
  return n;
}

inline std::uint64_t sur_count(const Graph& g, const Graph& h) {
  std::uint64_t n = 0;
  for_each_map(g, h, [&](const std::vector<Vertex>& m) {
    if (!is_hom(g, h, m)) return;
    std::set<Vertex> image(m.begin(), m.end());
    if (image.size() == h.order()) ++n;
  });
  return n;
}

// Tries all vertex permutations.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_hom(g, h, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Two-colourable iff some of the 2^n colourings is proper.
inline bool is_bipartite(const Graph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (((mask >> u) & 1) == ((mask >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Independent sets by (|S n X|, |S n Y|), over all 2^n vertex subsets.
inline std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> census(
    const Graph& g, const std::vector<Vertex>& x_side) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> out;
  std::vector<bool> in_x(g.order(), false);
  for (Vertex v : x_side) in_x[v] = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) {
      if (((mask >> u) & 1) && ((mask >> v) & 1)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    std::size_t a = 0, b = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((mask >> v) & 1) (in_x[v] ? a : b)++;
    }
    ++out[{a, b}];
  }
  return out;
}

// AHU encoding of a rooted tree.
inline std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Isomorphism-invariant code of a free tree: the least rooted code over
// all roots.
inline std::string tree_code(const Graph& t) {
  std::string best;
  for (Vertex r = 0; r < t.order(); ++r) {
    std::string c = rooted_code(t, r, r);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

// Decodes a Prüfer sequence into a labelled tree on seq.size() + 2 vertices.
inline Graph prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return build_graph(n, edges);
}

// Isomorphism classes among all n^(n-2) labelled trees, as tree codes.
inline std::set<std::string> prufer_tree_classes(std::size_t n) {
  std::set<std::string> classes;
  if (n == 1) {
    classes.insert(tree_code(build_graph(1, {})));
    return classes;
  }
  if (n == 2) {
    classes.insert(tree_code(build_graph(2, {{0, 1}})));
    return classes;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    classes.insert(tree_code(prufer_decode(seq)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes;
}

}  // namespace homtree::oracle

#endif  // HOMTREE_TESTS_ORACLES_HPP
