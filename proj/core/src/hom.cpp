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

#include "homtree/hom.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "homtree/errors.hpp"
#include "homtree/parallel.hpp"

namespace homtree {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxTargetOrder = 64;
constexpr std::size_t kMaxSurTargetOrder = 20;
// Beyond this many cached subproblems per search, new ones are not stored.
constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

struct MaskVectorHash {
  std::size_t operator()(const std::vector<Mask>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Mask m : key) {
      h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Counts homomorphisms from a connected source into a target by assigning
// source vertices in a fixed order. Each unassigned vertex keeps a
// candidate set: the intersection of the target neighbourhoods of its
// assigned neighbours. A branch dies as soon as some candidate set empties.
//
// Two exact shortcuts keep the search small:
//   * once the unassigned vertices are pairwise non-adjacent, they are
//     independent and the count is the product of their candidate-set sizes;
//   * the number of completions below depth i depends only on the candidate
//     sets of unassigned vertices that already have an assigned neighbour,
//     so those sets key a per-depth cache.
class ConnectedHomCounter {
 public:
  ConnectedHomCounter(const Graph& source, const Graph& target)
      : target_nbrs_(target.order(), 0) {
    for (Vertex t = 0; t < target.order(); ++t) {
      for (Vertex w : target.neighbors(t)) target_nbrs_[t] |= Mask{1} << w;
    }
    full_ = target.order() == 64 ? ~Mask{0} : (Mask{1} << target.order()) - 1;
    plan(source);
  }

  HomCount count() {
    std::vector<Mask> domains(order_.size(), full_);
    return count_from(0, domains);
  }

 private:
  void plan(const Graph& g) {
    const std::size_t n = g.order();
    // BFS from the first maximum-degree vertex.
    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(start)) start = v;
    }
    std::vector<std::size_t> position(n, n);
    std::deque<Vertex> queue{start};
    position[start] = 0;
    order_.push_back(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (position[w] == n) {
          position[w] = order_.size();
          order_.push_back(w);
          queue.push_back(w);
        }
      }
    }

    later_nbrs_.assign(n, {});
    std::vector<std::size_t> first_earlier(n, n);  // by position
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex w : g.neighbors(order_[i])) {
        std::size_t j = position[w];
        if (j > i) {
          later_nbrs_[i].push_back(j);
          first_earlier[j] = std::min(first_earlier[j], i);
        }
      }
    }
    frontier_.assign(n + 1, {});
    independent_suffix_.assign(n + 1, true);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (first_earlier[j] < i) frontier_[i].push_back(j);
        for (std::size_t k : later_nbrs_[j]) {
          if (k >= i) independent_suffix_[i] = false;
        }
      }
    }
    memo_.assign(n + 1, {});
  }

  HomCount count_from(std::size_t depth, const std::vector<Mask>& domains) {
    const std::size_t n = order_.size();
    if (independent_suffix_[depth]) {
      HomCount product = 1;
      for (std::size_t j = depth; j < n; ++j) product *= std::popcount(domains[j]);
      return product;
    }

    std::vector<Mask> key;
    key.reserve(frontier_[depth].size());
    for (std::size_t j : frontier_[depth]) key.push_back(domains[j]);
    auto& cache = memo_[depth];
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    HomCount total = 0;
    std::vector<Mask> next;
    for (Mask options = domains[depth]; options != 0; options &= options - 1) {
      const auto t = static_cast<std::size_t>(std::countr_zero(options));
      next = domains;
      bool alive = true;
      for (std::size_t j : later_nbrs_[depth]) {
        next[j] &= target_nbrs_[t];
        if (next[j] == 0) {
          alive = false;
          break;
        }
      }
      if (alive) total += count_from(depth + 1, next);
    }
    if (cached_ < kMemoLimit) {
      cache.emplace(std::move(key), total);
      ++cached_;
    }
    return total;
  }

  std::vector<Mask> target_nbrs_;
  Mask full_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> later_nbrs_;
  std::vector<std::vector<std::size_t>> frontier_;
  std::vector<bool> independent_suffix_;
  std::vector<std::unordered_map<std::vector<Mask>, HomCount, MaskVectorHash>> memo_;
  std::size_t cached_ = 0;
};

void require_nonempty(const Graph& g, const char* role) {
  if (g.order() == 0) {
    throw PreconditionError(std::string(role) + " graph has no vertices");
  }
}

HomCount connected_into_connected(const Graph& g, const Graph& h) {
  return ConnectedHomCounter(g, h).count();
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::kBruteForce: return "brute";
    case CountMethod::kClosedForm: return "closed";
    case CountMethod::kDiam3Decomposition: return "decomp";
  }
  return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::kBruteForce;
  if (name == "closed") return CountMethod::kClosedForm;
  if (name == "decomp") return CountMethod::kDiam3Decomposition;
  return std::nullopt;
}

HomCount hom_count(const Graph& g, const Graph& h) {
  require_nonempty(g, "source");
  require_nonempty(h, "target");
  if (h.order() > kMaxTargetOrder) {
    throw ResourceError("hom_count supports targets of at most 64 vertices");
  }
  auto source_parts = connected_components(g);
  auto target_parts = connected_components(h);
  HomCount product = 1;
  for (const auto& source : source_parts) {
    HomCount sum = 0;
    for (const auto& target : target_parts) {
      sum += connected_into_connected(source.graph, target.graph);
    }
    product *= sum;
    if (product == 0) break;
  }
  return product;
}

HomCount sur_count(const Graph& g, const Graph& h) {
  require_nonempty(g, "source");
  require_nonempty(h, "target");
  const std::size_t k = h.order();
  if (k > kMaxSurTargetOrder) {
    throw ResourceError("sur_count supports targets of at most 20 vertices");
  }
  HomCount total = 0;
  // The empty subset contributes Hom(g, empty) = 0 for nonempty g.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    VertexSet subset;
    for (Vertex v = 0; v < k; ++v) {
      if (mask & (std::uint32_t{1} << v)) subset.push_back(v);
    }
    HomCount term = hom_count(g, induced_subgraph(h, subset));
    if ((k - subset.size()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

HomCount sur_count_by_enumeration(const Graph& g, const Graph& h) {
  require_nonempty(g, "source");
  require_nonempty(h, "target");
  const std::size_t n = g.order();
  const std::size_t k = h.order();
  std::vector<Vertex> image(n);
  std::vector<std::size_t> hits(k, 0);
  std::size_t covered = 0;
  HomCount total = 0;

  auto walk = [&](auto& self, Vertex v) -> void {
    if (k - covered > n - v) return;
    if (v == n) {
      ++total;
      return;
    }
    for (Vertex t = 0; t < k; ++t) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && !h.adjacent(image[w], t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = t;
      if (hits[t]++ == 0) ++covered;
      self(self, v + 1);
      if (--hits[t] == 0) --covered;
    }
  };
  walk(walk, 0);
  return total;
}

HomCount hom_tree_diam3_decomp(const Graph& g, const Tree& t) {
  require_nonempty(g, "source");
  auto d = diameter(g);
  if (!d || *d > 3) {
    throw PreconditionError(
        "diameter-3 decomposition needs a connected source of diameter <= 3");
  }
  HomCount total = 0;
  for (const auto& [shape, multiplicity] : induced_diam3_subtrees(t)) {
    total += sur_shape(g, shape) * static_cast<unsigned long>(multiplicity);
  }
  return total;
}

HomCount count_homs(const Graph& g, const Tree& t, CountMethod method) {
  switch (method) {
    case CountMethod::kBruteForce:
      return hom_count(g, t.graph());
    case CountMethod::kClosedForm: {
      auto shape = classify_tree(t);
      if (!shape) {
        throw PreconditionError(
            "closed forms cover trees of diameter <= 3 only");
      }
      return hom_closed_form(g, *shape);
    }
    case CountMethod::kDiam3Decomposition:
      return hom_tree_diam3_decomp(g, t);
  }
  throw PreconditionError("unknown count method");
}

std::vector<Tree> trees_up_to(std::size_t max_order) {
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto batch = enumerate_trees(n);
    for (auto& t : batch) out.push_back(std::move(t));
  }
  return out;
}

std::vector<ProfileEntry> hom_profile(const Graph& g, std::size_t max_tree_order,
                                      CountMethod method) {
  auto trees = trees_up_to(max_tree_order);
  std::vector<HomCount> counts(trees.size());
  parallel_for(trees.size(), [&](std::size_t i) {
    counts[i] = count_homs(g, trees[i], method);
  });
  std::vector<ProfileEntry> out;
  out.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    out.push_back({std::move(trees[i]), std::move(counts[i])});
  }
  return out;
}

}  // namespace homtree
