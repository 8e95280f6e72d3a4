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

#include "homtree/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>

#include "homtree/constructions.hpp"
#include "homtree/equivalence.hpp"
#include "homtree/errors.hpp"
#include "homtree/hom.hpp"
#include "homtree/independent_sets.hpp"
#include "homtree/isomorphism.hpp"
#include "homtree/parallel.hpp"
#include "homtree/permutation.hpp"
#include "homtree/random_graphs.hpp"

namespace homtree {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kFormulaGraphs = 200;
constexpr std::size_t kMaxFormulaOrder = 8;
constexpr std::size_t kMaxStarLeaves = 4;
constexpr std::size_t kMaxFormulaBistarLeaves = 3;
constexpr std::size_t kUnionPairs = 100;
constexpr std::size_t kMaxUnionComponents = 4;
constexpr std::size_t kMaxUnionPart = 4;
constexpr std::size_t kMaxKralBistarLeaves = 6;
constexpr std::size_t kMaxPairwiseCheckedOrder = 9;

// Free trees on n = 1..11 vertices.
constexpr std::array<std::uint64_t, 11> kTreeCounts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};

// S_4 conjugacy class representatives, one per cycle type.
constexpr std::array<const char*, 5> kS4Representatives = {"()", "(1 2)", "(1 2)(3 4)",
                                                            "(1 2 3)", "(1 2 3 4)"};

// Tallies a batch of pairwise comparisons into a single check.
struct Agreement {
  std::size_t compared = 0;
  std::size_t agreed = 0;
  std::optional<std::string> first_mismatch;

  void record(bool ok, const std::string& where) {
    ++compared;
    if (ok) {
      ++agreed;
    } else if (!first_mismatch) {
      first_mismatch = where;
    }
  }
  void compare(const std::string& where, const HomCount& a, const HomCount& b) {
    if (a == b) {
      record(true, where);
    } else {
      record(false, where + ": " + to_decimal(a) + " vs " + to_decimal(b));
    }
  }
  void merge(const Agreement& other) {
    compared += other.compared;
    agreed += other.agreed;
    if (!first_mismatch) first_mismatch = other.first_mismatch;
  }
};

void add_agreement(VerificationReport& report, std::string description, const Agreement& a) {
  const std::string n = std::to_string(a.compared);
  std::string actual = std::to_string(a.agreed) + "/" + n + " agree";
  if (a.first_mismatch) actual += "; first mismatch " + *a.first_mismatch;
  report.add(std::move(description), n + "/" + n + " agree", std::move(actual),
             a.compared > 0 && a.agreed == a.compared);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string size_text(SizeParameter sp) { return pair_text(sp.m, sp.n); }

std::string multiset_text(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

template <typename Map>
std::string tally_text(const Map& tally) {
  std::string out;
  for (const auto& [key, count] : tally) {
    if (!out.empty()) out += " ";
    out += std::to_string(key) + ":" + std::to_string(count);
  }
  return out;
}

std::string components_text(const std::vector<SizeParameter>& parts) {
  std::string out;
  for (const auto& sp : parts) {
    if (!out.empty()) out += "+";
    out += "K" + size_text(sp);
  }
  return out;
}

void finish(VerificationReport& report, Clock::time_point start) {
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// ---- formulas ------------------------------------------------------------

struct FormulaOutcome {
  Agreement star_hom;
  Agreement star_sur;
  Agreement eq1_brute;
  Agreement eq5_brute;
  Agreement eq1_eq5;
  Agreement bistar_sur;
};

FormulaOutcome check_formulas(const Graph& g, const std::string& tag) {
  FormulaOutcome out;
  const SizeParameter sp = size_parameter(g);
  for (std::size_t p = 1; p <= kMaxStarLeaves; ++p) {
    const Tree star = make_star(p);
    const std::string where = tag + " " + TreeShape::star(p).to_string();
    out.star_hom.compare(where, hom_count(g, star.graph()), hom_star_connected(sp, p));
    out.star_sur.compare(where, sur_count_by_enumeration(g, star.graph()),
                         surjection_number(sp.m, p) + surjection_number(sp.n, p));
  }
  for (std::size_t p = 1; p <= kMaxFormulaBistarLeaves; ++p) {
    for (std::size_t q = 1; q <= kMaxFormulaBistarLeaves; ++q) {
      const Tree bistar = make_bistar(p, q);
      const std::string where = tag + " B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
      const HomCount brute = hom_count(g, bistar.graph());
      const HomCount eq1 = hom_bistar_subset(g, p, q);
      const HomCount eq5 = hom_bistar_indep(g, p, q);
      out.eq1_brute.compare(where, eq1, brute);
      out.eq5_brute.compare(where, eq5, brute);
      out.eq1_eq5.compare(where, eq1, eq5);
      out.bistar_sur.compare(where, sur_bistar_subset(g, p, q), sur_count(g, bistar.graph()));
    }
  }
  return out;
}

struct UnionPair {
  std::vector<SizeParameter> left;
  std::vector<SizeParameter> right;
};

struct UnionOutcome {
  bool predicate = false;
  bool direct = false;
  Agreement closed_vs_brute;
};

UnionOutcome check_union_pair(const UnionPair& pair, const std::string& tag) {
  UnionOutcome out;
  const Graph g = complete_bipartite_union(pair.left);
  const Graph h = complete_bipartite_union(pair.right);
  out.predicate = t2_equivalent(g, h).holds;
  const std::size_t gamma = std::max(pair.left.size(), pair.right.size());
  const std::size_t max_p = (std::size_t{1} << gamma) + 1;
  out.direct = true;
  for (std::size_t p = 1; p <= max_p; ++p) {
    const Graph star = make_star(p).graph();
    const HomCount left = hom_count(g, star);
    const HomCount right = hom_count(h, star);
    out.direct = out.direct && left == right;
    const std::string where = tag + " " + TreeShape::star(p).to_string();
    out.closed_vs_brute.compare(where + " left", hom_star(g, p), left);
    out.closed_vs_brute.compare(where + " right", hom_star(h, p), right);
  }
  return out;
}

// ---- constructions -------------------------------------------------------

// Number of pairs (a_i, c_j) by |N({a_i, c_j})|.
std::map<std::size_t, std::size_t> pair_neighbourhood_tally(const LabeledConstruction& c) {
  std::map<std::size_t, std::size_t> tally;
  for (std::size_t i = 1; i <= c.n; ++i) {
    for (std::size_t j = 1; j <= c.n; ++j) {
      const std::array<Vertex, 2> s = {c.a(i), c.c(j)};
      ++tally[neighborhood(c.graph, s).size()];
    }
  }
  return tally;
}

std::string degree_tally_text(const Graph& g) {
  std::map<std::size_t, std::size_t, std::greater<>> tally;
  for (Vertex v = 0; v < g.order(); ++v) ++tally[g.degree(v)];
  return tally_text(tally);
}

void check_g_pi(VerificationReport& report, std::size_t n, const Permutation& pi) {
  const LabeledConstruction c = build_g_pi(n, pi);
  const std::string tag = c.name + ": ";
  const Graph& g = c.graph;
  report.add(tag + "order", std::to_string(4 * n + 3), std::to_string(g.order()));
  report.add(tag + "edges", std::to_string(2 * n * n + 5 * n + 2), std::to_string(g.edge_count()));

  std::map<std::size_t, std::size_t, std::greater<>> expected_degrees;
  ++expected_degrees[2 * n + 2];
  ++expected_degrees[2 * n + 1];
  expected_degrees[n + 2] += n;
  expected_degrees[n + 1] += 3 * n + 1;
  report.add(tag + "degree multiset", tally_text(expected_degrees), degree_tally_text(g));

  std::vector<Vertex> top, second;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2 * n + 2) top.push_back(v);
    if (g.degree(v) == 2 * n + 1) second.push_back(v);
  }
  report.add(tag + "e is the only vertex of degree 2n+2", "e",
             top.size() == 1 ? c.labels[top[0]] : std::to_string(top.size()) + " vertices");
  report.add(tag + "f is the only vertex of degree 2n+1", "f",
             second.size() == 1 ? c.labels[second[0]] : std::to_string(second.size()) + " vertices");

  auto parts = bipartition(g);
  VertexSet expected_x = c.vertex_class('a');
  for (Vertex v : c.vertex_class('c')) expected_x.push_back(v);
  expected_x.push_back(c.e());
  std::sort(expected_x.begin(), expected_x.end());
  report.add(tag + "bipartition X = A u C u {e}", "yes",
             yes_no(parts && parts->x_side == expected_x));

  VertexSet heavy_x;
  if (parts) {
    for (Vertex v : parts->x_side) {
      if (g.degree(v) == n + 2) heavy_x.push_back(v);
    }
  }
  report.add(tag + "C = X-vertices of degree n+2", "yes", yes_no(heavy_x == c.vertex_class('c')));
  report.add(tag + "size parameter", size_text({2 * n + 1, 2 * n + 2}),
             parts ? size_text(size_parameter(g)) : "not bipartite");
  auto d = diameter(g);
  report.add(tag + "diameter", "3", d ? std::to_string(*d) : "infinite");
}

void check_g_minus_pi(VerificationReport& report, std::size_t n, const Permutation& pi) {
  const LabeledConstruction c = build_g_minus_pi(n, pi);
  const std::string tag = c.name + ": ";
  const Graph& g = c.graph;
  report.add(tag + "order", std::to_string(4 * n), std::to_string(g.order()));
  report.add(tag + "edges", std::to_string(n * n + n * n), std::to_string(g.edge_count()));
  report.add(tag + "degrees", std::to_string(n) + ":" + std::to_string(4 * n), degree_tally_text(g));
  report.add(tag + "connected", "yes", yes_no(is_connected(g)));
  report.add(tag + "size parameter", size_text({2 * n, 2 * n}),
             is_bipartite(g) && is_connected(g) ? size_text(size_parameter(g)) : "n/a");

  const std::size_t p = fixed_points(pi);
  std::map<std::size_t, std::size_t> expected;
  if (p > 0) expected[2 * n] = p;
  if (n > p) expected[2 * n - 1] = 2 * (n - p);
  if (n * n - 2 * n + p > 0) expected[2 * n - 2] = n * n - 2 * n + p;
  report.add(tag + "pairs (a_i,c_j) by |N|", tally_text(expected),
             tally_text(pair_neighbourhood_tally(c)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"formulas", "constructions", "counterexample",
                                                 "kral", "trees"};
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "formulas") return verify_formulas(options);
  if (name == "constructions") return verify_constructions(options);
  if (name == "counterexample") return verify_counterexample(options);
  if (name == "kral") return verify_kral(options);
  if (name == "trees") return verify_trees(options);
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

VerificationReport verify_closed_forms(const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report{"closed-forms", {}, {}};
  Rng rng(options.seed);

  std::vector<Graph> corpus;
  for (std::size_t i = 0; i < kFormulaGraphs; ++i) {
    corpus.push_back(random_connected_bipartite(rng, 2 + rng() % (kMaxFormulaOrder - 1)));
  }
  std::size_t well_formed = 0;
  for (const auto& g : corpus) {
    if (g.order() <= kMaxFormulaOrder && is_connected(g) && is_bipartite(g)) ++well_formed;
  }
  report.add("random connected bipartite graphs of order <= 8", std::to_string(kFormulaGraphs),
             std::to_string(well_formed));

  std::vector<FormulaOutcome> outcomes(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    outcomes[i] = check_formulas(corpus[i], "graph #" + std::to_string(i));
  });
  FormulaOutcome total;
  for (const auto& o : outcomes) {
    total.star_hom.merge(o.star_hom);
    total.star_sur.merge(o.star_sur);
    total.eq1_brute.merge(o.eq1_brute);
    total.eq5_brute.merge(o.eq5_brute);
    total.eq1_eq5.merge(o.eq1_eq5);
    total.bistar_sur.merge(o.bistar_sur);
  }
  add_agreement(report, "Hom(G, K_{1,p}) brute force = p^m + p^n, p <= 4", total.star_hom);
  add_agreement(report, "Sur(G, K_{1,p}) by enumeration = s(m,p) + s(n,p), p <= 4",
                total.star_sur);
  add_agreement(report, "Hom(G, B_{p,q}) subset formula = brute force, p,q <= 3",
                total.eq1_brute);
  add_agreement(report, "Hom(G, B_{p,q}) independent-set formula = brute force, p,q <= 3",
                total.eq5_brute);
  add_agreement(report, "Hom(G, B_{p,q}) subset formula = independent-set formula, p,q <= 3",
                total.eq1_eq5);
  add_agreement(report, "Sur(G, B_{p,q}) subset formula = inclusion-exclusion, p,q <= 3",
                total.bistar_sur);

  finish(report, start);
  return report;
}

VerificationReport verify_star_characterisation(const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report{"star-characterisation", {}, {}};
  Rng rng(options.seed + 1);

  std::vector<UnionPair> pairs;
  for (std::size_t i = 0; i < kUnionPairs; ++i) {
    UnionPair pair;
    pair.left = random_complete_bipartite_parts(rng, kMaxUnionComponents, kMaxUnionPart);
    if (rng() % 2 == 0) {
      pair.right = shifted_partner(rng, pair.left, kMaxUnionPart);
    } else {
      pair.right = random_complete_bipartite_parts(rng, kMaxUnionComponents, kMaxUnionPart);
    }
    pairs.push_back(std::move(pair));
  }
  std::vector<UnionOutcome> union_outcomes(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    union_outcomes[i] = check_union_pair(pairs[i], "pair #" + std::to_string(i));
  });
  Agreement predicate, closed;
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& o = union_outcomes[i];
    predicate.record(o.predicate == o.direct,
                     components_text(pairs[i].left) + " vs " + components_text(pairs[i].right) +
                         ": predicate " + yes_no(o.predicate) + ", star counts " +
                         yes_no(o.direct));
    closed.merge(o.closed_vs_brute);
    if (o.direct) ++equivalent;
  }
  add_agreement(report,
                "unions of complete bipartite graphs: t2 predicate = equal Hom(., K_{1,p}) "
                "for p <= 2^gamma + 1",
                predicate);
  add_agreement(report, "unions of complete bipartite graphs: star product formula = brute force",
                closed);
  report.add("corpus contains both equivalent and inequivalent pairs", "yes",
             yes_no(equivalent > 0 && equivalent < pairs.size()));

  const std::array<SizeParameter, 2> twin_paths = {SizeParameter{1, 2}, SizeParameter{1, 2}};
  const std::array<SizeParameter, 2> edge_claw = {SizeParameter{1, 1}, SizeParameter{1, 3}};
  const Graph g = complete_bipartite_union(twin_paths);
  const Graph h = complete_bipartite_union(edge_claw);
  const Graph cherry = make_star(2).graph();
  report.add("Hom(K_{1,2}+K_{1,2}, K_{1,2}) vs Hom(K_{1,1}+K_{1,3}, K_{1,2})", "36 vs 40",
             to_decimal(hom_count(g, cherry)) + " vs " + to_decimal(hom_count(h, cherry)));
  const EquivalenceReport t2 = t2_equivalent(g, h);
  report.add("K_{1,2}+K_{1,2} vs K_{1,1}+K_{1,3}: t2 first divergence", "K_{1,2}",
             t2.first_divergence.value_or(t2.holds ? "none (holds)" : "none"));

  const std::array<SizeParameter, 2> order_a = {SizeParameter{1, 2}, SizeParameter{1, 3}};
  const std::array<SizeParameter, 2> order_b = {SizeParameter{1, 3}, SizeParameter{1, 2}};
  report.add("K_{1,2}+K_{1,3} vs K_{1,3}+K_{1,2}: t2 holds", "yes",
             yes_no(t2_equivalent(complete_bipartite_union(order_a),
                                  complete_bipartite_union(order_b))
                        .holds));

  finish(report, start);
  return report;
}

VerificationReport verify_formulas(const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report{"formulas", {}, {}};
  for (auto part : {verify_closed_forms(options), verify_star_characterisation(options)}) {
    for (auto& check : part.checks) report.checks.push_back(std::move(check));
  }
  finish(report, start);
  return report;
}

VerificationReport verify_constructions(const SuiteOptions&) {
  const auto start = Clock::now();
  VerificationReport report{"constructions", {}, {}};

  const LabeledConstruction base = build_g_minus(3);
  report.add("G-(n=3): order", "12", std::to_string(base.graph.order()));
  report.add("G-(n=3): edges", "15", std::to_string(base.graph.edge_count()));
  VertexSet bc = base.vertex_class('b');
  for (Vertex v : base.vertex_class('c')) bc.push_back(v);
  const Graph matching = induced_subgraph(base.graph, bc);
  report.add("G-(n=3): B u C induces a perfect matching", "3 edges, all degrees 1",
             std::to_string(matching.edge_count()) + " edges, all degrees " +
                 (degree_sequence(matching) == std::vector<std::size_t>(6, 1) ? "1" : "mixed"));

  for (std::size_t n : {3, 4, 5}) {
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
    cycle += ")";
    check_g_pi(report, n, Permutation::identity(n));
    check_g_pi(report, n, parse_permutation(cycle, n));
  }

  std::vector<Permutation> reps;
  for (const char* text : kS4Representatives) reps.push_back(parse_permutation(text, 4));
  for (const auto& pi : reps) check_g_minus_pi(report, 4, pi);
  check_g_minus_pi(report, 5, Permutation::identity(5));
  check_g_minus_pi(report, 5, parse_permutation("(1 2 3 4 5)", 5));

  std::vector<LabeledConstruction> full, core;
  for (const auto& pi : reps) {
    full.push_back(build_g_pi(4, pi));
    core.push_back(build_g_minus_pi(4, pi));
  }
  struct PairResult {
    std::size_t i = 0;
    std::size_t j = 0;
    bool iso = false;
    bool valid_mapping = true;
    std::optional<bool> nse_core, nse_full;
  };
  std::vector<PairResult> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      PairResult r;
      r.i = i;
      r.j = j;
      pairs.push_back(r);
    }
  }
  parallel_for(pairs.size(), [&](std::size_t k) {
    auto& r = pairs[k];
    auto mapping = is_isomorphic(full[r.i].graph, full[r.j].graph);
    r.iso = mapping.has_value();
    if (mapping) r.valid_mapping = is_isomorphism(full[r.i].graph, full[r.j].graph, *mapping);
    if (fixed_points(reps[r.i]) == fixed_points(reps[r.j])) {
      r.nse_core = nse_equivalent(core[r.i].graph, core[r.j].graph).holds;
      r.nse_full = nse_equivalent(full[r.i].graph, full[r.j].graph).holds;
    }
  });
  for (const auto& r : pairs) {
    const std::string names =
        "pi1=" + reps[r.i].to_string() + ", pi2=" + reps[r.j].to_string();
    const bool conjugate = is_conjugate(reps[r.i], reps[r.j]);
    report.add("G_pi1 isomorphic to G_pi2 iff same cycle type, " + names,
               conjugate ? "isomorphic" : "not isomorphic",
               std::string(r.iso ? "isomorphic" : "not isomorphic") +
                   (r.valid_mapping ? "" : " (invalid mapping)"),
               r.iso == conjugate && r.valid_mapping);
    if (r.nse_core) {
      report.add("equal fixed points imply G-_pi1 ~ G-_pi2, " + names, "holds",
                 *r.nse_core ? "holds" : "fails");
      report.add("equal fixed points imply G_pi1 ~ G_pi2, " + names, "holds",
                 *r.nse_full ? "holds" : "fails");
    }
  }

  finish(report, start);
  return report;
}

VerificationReport verify_counterexample(const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report{"counterexample", {}, {}};
  const auto [first, second] = counterexample_pair();
  const Graph& g = first.graph;
  const Graph& h = second.graph;
  const std::string names = first.name + " vs " + second.name;

  report.add("orders", "19 vs 19",
             std::to_string(g.order()) + " vs " + std::to_string(h.order()));
  report.add("edges", "54 vs 54",
             std::to_string(g.edge_count()) + " vs " + std::to_string(h.edge_count()));
  report.add("cycle types", "[2,2] vs [4]",
             cycle_type(parse_permutation("(1 2)(3 4)", 4)).to_string() + " vs " +
                 cycle_type(parse_permutation("(1 2 3 4)", 4)).to_string());
  report.add("isomorphism", "absent", is_isomorphic(g, h) ? "present" : "absent");

  const auto g_side = smaller_side(g);
  const auto h_side = smaller_side(h);
  report.add("|X| (smaller side)", "9 vs 9",
             std::to_string(g_side.x.size()) + " vs " + std::to_string(h_side.x.size()));
  std::uint64_t g_total = 0, h_total = 0;
  for (const auto& [k, v] : nse_profile(g).entries) g_total += v;
  for (const auto& [k, v] : nse_profile(h).entries) h_total += v;
  report.add("profile entries cover every subset", "512 vs 512",
             std::to_string(g_total) + " vs " + std::to_string(h_total));
  const EquivalenceReport nse = nse_equivalent(g, h);
  report.add("neighbourhood size equivalence", "holds",
             nse.holds ? "holds" : "fails at " + nse.first_divergence.value_or("?"));

  const std::uint64_t expected_trees = tree_count_up_to(options.max_tree_order);
  const std::string tree_range = "trees of order <= " + std::to_string(options.max_tree_order);
  const EquivalenceReport brute =
      tree_equivalent_up_to(g, h, options.max_tree_order, CountMethod::kBruteForce);
  const EquivalenceReport decomp =
      tree_equivalent_up_to(g, h, options.max_tree_order, CountMethod::kDiam3Decomposition);
  report.add(tree_range, std::to_string(expected_trees), std::to_string(brute.evidence.size()));

  auto equal_rows = [](const EquivalenceReport& r) {
    Agreement a;
    for (const auto& e : r.evidence) a.record(e.left == e.right, e.instance + ": " + e.left + " vs " + e.right);
    return a;
  };
  add_agreement(report, "Hom counts equal on " + tree_range + ", brute force", equal_rows(brute));
  add_agreement(report, "Hom counts equal on " + tree_range + ", diameter-3 decomposition",
                equal_rows(decomp));

  Agreement methods;
  const std::size_t rows = std::min(brute.evidence.size(), decomp.evidence.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& b = brute.evidence[i];
    const auto& d = decomp.evidence[i];
    methods.record(b.left == d.left, b.instance + " (first): " + b.left + " vs " + d.left);
    methods.record(b.right == d.right, b.instance + " (second): " + b.right + " vs " + d.right);
  }
  if (brute.evidence.size() != decomp.evidence.size()) methods.record(false, "row count");
  add_agreement(report, "brute force = decomposition tree by tree, both graphs", methods);
  report.add(names + ": hom-equivalent on " + tree_range, "holds",
             brute.holds && decomp.holds ? "holds" : "fails");

  finish(report, start);
  return report;
}

VerificationReport verify_kral(const SuiteOptions&) {
  const auto start = Clock::now();
  VerificationReport report{"kral", {}, {}};
  const KralPair pair = kral_pair();
  const std::array<const Graph*, 2> graphs = {&pair.first, &pair.second};

  std::array<std::string, 2> edges, sizes, degrees;
  for (std::size_t i = 0; i < 2; ++i) {
    const Graph& g = *graphs[i];
    edges[i] = std::to_string(g.edge_count());
    sizes[i] = is_connected(g) && is_bipartite(g) ? size_text(size_parameter(g)) : "n/a";
    std::vector<std::size_t> xd;
    for (Vertex v : smaller_side(g).x) xd.push_back(g.degree(v));
    degrees[i] = multiset_text(xd);
  }
  report.add("edges", "10 vs 10", edges[0] + " vs " + edges[1]);
  report.add("size parameters", "(3,5) vs (3,5)", sizes[0] + " vs " + sizes[1]);
  report.add("X-degree multisets", "{2,3,5} vs {2,4,4}", degrees[0] + " vs " + degrees[1]);
  const EquivalenceReport nse = nse_equivalent(pair.first, pair.second);
  report.add("neighbourhood size equivalence", "fails", nse.holds ? "holds" : "fails");

  const auto c1 = independent_set_census(pair.first, *bipartition(pair.first));
  const auto c2 = independent_set_census(pair.second, *bipartition(pair.second));
  report.add("independent sets of type (1,2)", "4 vs 3",
             std::to_string(c1.count(1, 2)) + " vs " + std::to_string(c2.count(1, 2)));
  report.add("independent sets of type (2,1)", "0 vs 1",
             std::to_string(c1.count(2, 1)) + " vs " + std::to_string(c2.count(2, 1)));
  std::string other_diffs;
  std::map<std::pair<std::size_t, std::size_t>, bool> types;
  for (const auto& [k, v] : c1.counts) types[k] = true;
  for (const auto& [k, v] : c2.counts) types[k] = true;
  for (const auto& [k, unused] : types) {
    if (k == std::pair<std::size_t, std::size_t>{1, 2} ||
        k == std::pair<std::size_t, std::size_t>{2, 1}) {
      continue;
    }
    if (c1.count(k.first, k.second) != c2.count(k.first, k.second)) {
      other_diffs += (other_diffs.empty() ? "" : " ") + pair_text(k.first, k.second);
    }
  }
  report.add("all other independent-set types equal", "none differ",
             other_diffs.empty() ? "none differ" : other_diffs);

  Agreement eq1, eq5, brute, methods;
  for (std::size_t p = 1; p <= kMaxKralBistarLeaves; ++p) {
    for (std::size_t q = 1; q <= kMaxKralBistarLeaves; ++q) {
      const std::string where = "B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
      const Graph target = make_bistar(p, q).graph();
      std::array<HomCount, 2> s, ind, b;
      for (std::size_t i = 0; i < 2; ++i) {
        s[i] = hom_bistar_subset(*graphs[i], p, q);
        ind[i] = hom_bistar_indep(*graphs[i], p, q);
        b[i] = hom_count(*graphs[i], target);
        methods.compare(where + " graph " + std::to_string(i + 1) + " subset/brute", s[i], b[i]);
        methods.compare(where + " graph " + std::to_string(i + 1) + " census/brute", ind[i], b[i]);
      }
      eq1.compare(where, s[0], s[1]);
      eq5.compare(where, ind[0], ind[1]);
      brute.compare(where, b[0], b[1]);
    }
  }
  add_agreement(report, "Hom(H1, B_{p,q}) = Hom(H2, B_{p,q}), p,q <= 6, subset formula", eq1);
  add_agreement(report, "Hom(H1, B_{p,q}) = Hom(H2, B_{p,q}), p,q <= 6, independent-set formula",
                eq5);
  add_agreement(report, "Hom(H1, B_{p,q}) = Hom(H2, B_{p,q}), p,q <= 6, brute force", brute);
  add_agreement(report, "bistar formulas = brute force on both graphs", methods);

  finish(report, start);
  return report;
}

VerificationReport verify_trees(const SuiteOptions&) {
  const auto start = Clock::now();
  VerificationReport report{"trees", {}, {}};
  std::uint64_t total = 0;
  std::vector<std::vector<Tree>> by_order(kTreeCounts.size() + 1);
  for (std::size_t n = 1; n <= kTreeCounts.size(); ++n) {
    by_order[n] = enumerate_trees(n);
    total += by_order[n].size();
    report.add("trees on " + std::to_string(n) + " vertices", std::to_string(kTreeCounts[n - 1]),
               std::to_string(by_order[n].size()));
  }
  report.add("trees on at most 11 vertices", "436", std::to_string(total));

  for (std::size_t n = 1; n <= kMaxPairwiseCheckedOrder; ++n) {
    const auto& trees = by_order[n];
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) pairs.emplace_back(i, j);
    }
    std::vector<char> iso(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t k) {
      iso[k] = is_isomorphic(trees[pairs[k].first].graph(), trees[pairs[k].second].graph())
                   ? 1 : 0;
    });
    const auto clashes = static_cast<std::size_t>(std::count(iso.begin(), iso.end(), 1));
    report.add("trees on " + std::to_string(n) + " vertices pairwise non-isomorphic",
               "0 isomorphic pairs of " + std::to_string(pairs.size()),
               std::to_string(clashes) + " isomorphic pairs of " + std::to_string(pairs.size()));
  }

  finish(report, start);
  return report;
}

}  // namespace homtree
