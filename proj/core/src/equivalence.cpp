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

#include "homtree/equivalence.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "homtree/errors.hpp"
#include "homtree/parallel.hpp"

namespace homtree {

namespace {

constexpr std::size_t kMaxPsumLength = 20;
constexpr std::uint64_t kMaxTreesCompared = 10'000;
constexpr std::size_t kMaxSearchLength = 6;
constexpr std::uint64_t kMaxSearchEntry = 12;

// Free trees on n vertices, n = 1..20.
constexpr std::array<std::uint64_t, 20> kFreeTreeCounts = {
    1,    1,    1,     2,     3,     6,     11,     23,     47,     106,
    235,  551,  1301,  3159,  7741,  19320, 48629,  123867, 317955, 823065};

void add(EquivalenceReport& report, std::string instance, std::string left,
         std::string right) {
  if (!report.first_divergence && left != right) report.first_divergence = instance;
  report.evidence.push_back({std::move(instance), std::move(left), std::move(right)});
}

void finish(EquivalenceReport& report) {
  report.holds = !report.first_divergence.has_value();
}

std::string profile_key(std::size_t s, std::size_t n) {
  return "|S|=" + std::to_string(s) + " |N(S)|=" + std::to_string(n);
}

void compare_profiles(EquivalenceReport& report, const NeighborhoodProfile& a,
                      const NeighborhoodProfile& b) {
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  auto lookup = [](const NeighborhoodProfile& p, const auto& key) {
    auto it = p.entries.find(key);
    return it == p.entries.end() ? std::uint64_t{0} : it->second;
  };
  for (const auto& key : keys) {
    add(report, profile_key(key.first, key.second),
        std::to_string(lookup(a, key)), std::to_string(lookup(b, key)));
  }
}

std::string size_parameter_text(SizeParameter sp) {
  return "(" + std::to_string(sp.m) + "," + std::to_string(sp.n) + ")";
}

}  // namespace

PsumMultiset psum(std::span<const std::uint64_t> d) {
  if (d.size() > kMaxPsumLength) {
    throw ResourceError("psum limited to vectors of length 20");
  }
  PsumMultiset out;
  out.sums.push_back(0);
  for (std::uint64_t value : d) {
    const std::size_t half = out.sums.size();
    for (std::size_t i = 0; i < half; ++i) out.sums.push_back(out.sums[i] + value);
  }
  std::sort(out.sums.begin(), out.sums.end());
  return out;
}

ComponentSizes component_sizes(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (!is_bipartite(g)) throw PreconditionError("graph must be bipartite");
  ComponentSizes out;
  for (const auto& c : connected_components(g)) {
    if (c.graph.order() < 2) {
      throw PreconditionError("isolated vertex " + std::to_string(c.to_parent[0]) +
                              " has no size parameter");
    }
    SizeParameter sp = size_parameter(c.graph);
    ++out.components;
    out.smaller_total += sp.m;
    out.differences.push_back(sp.n - sp.m);
    out.parameters.push_back(sp);
  }
  return out;
}

NeighborhoodProfile nse_profile(const Graph& g) {
  return nse_profile(g, smaller_side(g).x);
}

NeighborhoodProfile nse_profile(const Graph& g, const VertexSet& x) {
  return {neighbourhood_size_tally(g, x)};
}

EquivalenceReport t1_equivalent(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw PreconditionError("graphs must have vertices");
  }
  if (!is_bipartite(g) || !is_bipartite(h)) {
    throw PreconditionError("t1 equivalence is defined on bipartite graphs");
  }
  EquivalenceReport report{"t1", false, {}, {}};
  const Graph k1 = make_tree(TreeShape::single()).graph();
  const Graph k2 = make_tree(TreeShape::edge()).graph();
  add(report, "K1", to_decimal(hom_count(g, k1)), to_decimal(hom_count(h, k1)));
  add(report, "K2", to_decimal(hom_count(g, k2)), to_decimal(hom_count(h, k2)));

  // Decided from the structural characterisation; the counts above are
  // the witnesses.
  bool same = component_count(g) == component_count(h) &&
              (g.edge_count() == 0) == (h.edge_count() == 0);
  finish(report);
  if (report.holds != same) {
    throw Error("t1 characterisation disagrees with K1/K2 counts");
  }
  return report;
}

EquivalenceReport t2_equivalent(const Graph& g, const Graph& h) {
  ComponentSizes gs = component_sizes(g);
  ComponentSizes hs = component_sizes(h);
  EquivalenceReport report{"t2", false, {}, {}};

  const std::size_t gamma = std::max(gs.components, hs.components);
  if (gamma >= 63) throw ResourceError("too many components for star evidence");
  const std::size_t max_p = (std::size_t{1} << gamma) + 1;
  for (std::size_t p = 1; p <= max_p; ++p) {
    add(report, TreeShape::star(p).to_string(), to_decimal(hom_star(g, p)),
        to_decimal(hom_star(h, p)));
  }
  bool same = gs.components == hs.components &&
              gs.smaller_total == hs.smaller_total &&
              psum(gs.differences) == psum(hs.differences);
  finish(report);
  if (report.holds != same) {
    throw Error("t2 characterisation disagrees with star counts");
  }
  return report;
}

EquivalenceReport nse_equivalent(const Graph& g, const Graph& h) {
  SizeParameter gp = size_parameter(g);
  SizeParameter hp = size_parameter(h);
  EquivalenceReport report{"nse", false, {}, {}};
  add(report, "size parameter", size_parameter_text(gp), size_parameter_text(hp));
  if (gp != hp) {
    finish(report);
    return report;
  }

  const SideChoice g_side = smaller_side(g);
  NeighborhoodProfile g_profile = nse_profile(g, g_side.x);
  NeighborhoodProfile h_profile = nse_profile(h, smaller_side(h).x);
  if (gp.m == gp.n && g_profile != h_profile) {
    // Balanced parts: the other side of h may play X instead.
    NeighborhoodProfile h_other = nse_profile(h, smaller_side(h).y);
    if (g_profile == h_other) {
      h_profile = std::move(h_other);
    } else {
      NeighborhoodProfile g_other = nse_profile(g, g_side.y);
      if (g_other == nse_profile(h, smaller_side(h).x)) {
        g_profile = std::move(g_other);
      } else if (g_other == h_other) {
        g_profile = std::move(g_other);
        h_profile = std::move(h_other);
      }
    }
  }
  compare_profiles(report, g_profile, h_profile);
  finish(report);
  return report;
}

std::uint64_t tree_count_up_to(std::size_t max_order) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    if (n > kFreeTreeCounts.size()) return UINT64_MAX;
    total += kFreeTreeCounts[n - 1];
  }
  return total;
}

std::string tree_label(const Tree& t, std::size_t index_within_order) {
  std::string label = "n=" + std::to_string(t.order()) + " #" +
                      std::to_string(index_within_order);
  if (auto shape = classify_tree(t)) {
    label += " " + shape->to_string();
  } else {
    label += " diam " + std::to_string(t.diameter());
  }
  return label;
}

EquivalenceReport tree_equivalent_up_to(const Graph& g, const Graph& h,
                                        std::size_t max_order,
                                        CountMethod method) {
  if (max_order == 0) throw PreconditionError("max tree order must be >= 1");
  if (tree_count_up_to(max_order) > kMaxTreesCompared) {
    throw ResourceError("more than 10^4 trees up to order " +
                        std::to_string(max_order));
  }
  if (g.order() == 0 || h.order() == 0) {
    throw PreconditionError("graphs must have vertices");
  }
  auto trees = trees_up_to(max_order);
  std::vector<HomCount> left(trees.size()), right(trees.size());
  parallel_for(trees.size(), [&](std::size_t i) {
    left[i] = count_homs(g, trees[i], method);
    right[i] = count_homs(h, trees[i], method);
  });

  EquivalenceReport report{"trees", false, {}, {}};
  std::size_t index = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0 && trees[i].order() != trees[i - 1].order()) index = 0;
    add(report, tree_label(trees[i], index++), to_decimal(left[i]),
        to_decimal(right[i]));
  }
  finish(report);
  return report;
}

std::optional<PsumCollision> psum_collision_search(std::size_t length,
                                                   std::uint64_t max_entry) {
  if (length > kMaxSearchLength || max_entry > kMaxSearchEntry) {
    throw ResourceError("psum search limited to length <= 6, entries <= 12");
  }
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> current;
  std::optional<PsumCollision> found;

  std::function<void(std::uint64_t)> extend = [&](std::uint64_t lowest) {
    if (found) return;
    if (current.size() == length) {
      auto [it, inserted] = seen.emplace(psum(current).sums, current);
      if (!inserted) found = PsumCollision{it->second, current};
      return;
    }
    for (std::uint64_t v = lowest; v <= max_entry && !found; ++v) {
      current.push_back(v);
      extend(v);
      current.pop_back();
    }
  };
  extend(0);
  return found;
}

}  // namespace homtree
