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

#include "homtree/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace homtree {

namespace {

using Signature = std::pair<std::size_t, std::vector<std::size_t>>;

std::size_t class_count(const std::vector<std::size_t>& colours) {
  std::vector<std::size_t> sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Signature signature_of(const Graph& g, const std::vector<std::size_t>& colours,
                       Vertex v) {
  Signature sig{colours[v], {}};
  for (Vertex w : g.neighbors(v)) sig.second.push_back(colours[w]);
  std::sort(sig.second.begin(), sig.second.end());
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, JointColouring colours)
      : g_(g), h_(h), colours_(std::move(colours)),
        mapping_(g.order(), kUnmapped), used_(h.order(), false) {
    order_ = search_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return mapping_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  // Rarest colour first, then greedily the vertex with the most already
  // placed neighbours, so adjacency checks prune early.
  std::vector<Vertex> search_order() const {
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : colours_.g_colours) ++class_size[c];
    std::vector<Vertex> order;
    std::vector<bool> placed(g_.order(), false);
    std::vector<std::size_t> placed_nbrs(g_.order(), 0);
    for (std::size_t step = 0; step < g_.order(); ++step) {
      Vertex best = kUnmapped;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (placed[v]) continue;
        if (best == kUnmapped) {
          best = v;
          continue;
        }
        auto key = [&](Vertex u) {
          return std::make_pair(-static_cast<long>(placed_nbrs[u]),
                                class_size[colours_.g_colours[u]]);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = true;
      order.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++placed_nbrs[w];
    }
    return order;
  }

  bool consistent(Vertex v, Vertex target) const {
    if (colours_.g_colours[v] != colours_.h_colours[target]) return false;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (mapping_[u] == kUnmapped) continue;
      if (g_.adjacent(u, v) != h_.adjacent(mapping_[u], target)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex target = 0; target < h_.order(); ++target) {
      if (used_[target] || !consistent(v, target)) continue;
      mapping_[v] = target;
      used_[target] = true;
      if (extend(depth + 1)) return true;
      used_[target] = false;
      mapping_[v] = kUnmapped;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  JointColouring colours_;
  std::vector<Vertex> mapping_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace

JointColouring refine_colours(const Graph& g, const Graph& h) {
  JointColouring c;
  for (Vertex v = 0; v < g.order(); ++v) c.g_colours.push_back(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) c.h_colours.push_back(h.degree(v));

  std::size_t classes = class_count(c.g_colours) + class_count(c.h_colours);
  while (true) {
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> gs, hs;
    for (Vertex v = 0; v < g.order(); ++v) gs.push_back(signature_of(g, c.g_colours, v));
    for (Vertex v = 0; v < h.order(); ++v) hs.push_back(signature_of(h, c.h_colours, v));
    for (const auto& s : gs) ids.emplace(s, 0);
    for (const auto& s : hs) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;

    JointColouring refined;
    for (const auto& s : gs) refined.g_colours.push_back(ids[s]);
    for (const auto& s : hs) refined.h_colours.push_back(ids[s]);
    std::size_t refined_classes =
        class_count(refined.g_colours) + class_count(refined.h_colours);
    c = std::move(refined);
    if (refined_classes == classes) break;
    classes = refined_classes;
  }
  return c;
}

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;

  JointColouring colours = refine_colours(g, h);
  std::vector<std::size_t> gh = colours.g_colours, hh = colours.h_colours;
  std::sort(gh.begin(), gh.end());
  std::sort(hh.begin(), hh.end());
  if (gh != hh) return std::nullopt;

  return Matcher(g, h, std::move(colours)).run();
}

bool is_isomorphism(const Graph& g, const Graph& h,
                    const std::vector<Vertex>& mapping) {
  if (g.order() != h.order() || mapping.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex image : mapping) {
    if (image >= h.order() || hit[image]) return false;
    hit[image] = true;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v])) return false;
    }
  }
  return true;
}

}  // namespace homtree
