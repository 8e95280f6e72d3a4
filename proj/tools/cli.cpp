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

#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homtree/constructions.hpp"
#include "homtree/edge_list.hpp"
#include "homtree/equivalence.hpp"
#include "homtree/errors.hpp"
#include "homtree/hom.hpp"
#include "homtree/permutation.hpp"
#include "homtree/report.hpp"
#include "homtree/suites.hpp"

namespace homtree::cli {

namespace {

using nlohmann::json;

struct NamedGraph {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;
};

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 4;
  std::string perm;
  std::string output;
  bool json = false;
};

std::vector<NamedGraph> build_family(const GenArgs& a) {
  auto from = [](LabeledConstruction c) {
    return NamedGraph{std::move(c.name), std::move(c.graph), std::move(c.labels)};
  };
  if (a.kind == "g-minus") return {from(build_g_minus(a.n))};
  if (a.kind == "g-minus-pi") return {from(build_g_minus_pi(a.n, parse_permutation(a.perm, a.n)))};
  if (a.kind == "g-pi") return {from(build_g_pi(a.n, parse_permutation(a.perm, a.n)))};
  if (a.kind == "kral") {
    KralPair pair = kral_pair();
    return {{"Kral H1", std::move(pair.first), pair.labels},
            {"Kral H2", std::move(pair.second), pair.labels}};
  }
  auto [first, second] = counterexample_pair();
  return {from(std::move(first)), from(std::move(second))};
}

// pair.el -> pair_1.el, pair_2.el
std::filesystem::path numbered_path(const std::filesystem::path& base, std::size_t index) {
  std::filesystem::path out = base;
  out.replace_filename(base.stem().string() + "_" + std::to_string(index) +
                       base.extension().string());
  return out;
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const auto graphs = build_family(a);
  json doc = {{"graphs", json::array()}};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& ng = graphs[i];
    const std::string text = write_graph(ng.graph, ng.name, ng.labels);
    std::optional<std::filesystem::path> path;
    if (!a.output.empty()) {
      path = graphs.size() == 1 ? std::filesystem::path(a.output)
                                : numbered_path(a.output, i + 1);
      write_text_file(*path, text);
    }
    if (a.json) {
      doc["graphs"].push_back({{"name", ng.name},
                               {"order", ng.graph.order()},
                               {"edge_count", ng.graph.edge_count()},
                               {"labels", ng.labels},
                               {"edges", edges_json(ng.graph)},
                               {"path", path ? json(path->string()) : json(nullptr)}});
    } else if (path) {
      out << "wrote " << path->string() << ": " << ng.name << ", " << ng.graph.order()
          << " vertices, " << ng.graph.edge_count() << " edges\n";
    } else {
      if (i > 0) out << '\n';
      out << text;
    }
  }
  if (a.json) out << doc.dump(2) << '\n';
  return kExitOk;
}

// hom ----------------------------------------------------------------------

struct HomArgs {
  std::string source;
  std::string target;
  std::string method = "brute";
  bool json = false;
};

int run_hom(const HomArgs& a, std::ostream& out) {
  const CountMethod method = *parse_count_method(a.method);
  const Graph source = read_graph_file(a.source).graph;
  const Graph target = read_graph_file(a.target).graph;
  HomCount count = method == CountMethod::kBruteForce ? hom_count(source, target)
                                                      : count_homs(source, Tree(target), method);
  if (a.json) {
    json doc = {{"source", a.source},
                {"target", a.target},
                {"method", a.method},
                {"count", to_decimal(count)}};
    out << doc.dump(2) << '\n';
  } else {
    out << to_decimal(count) << '\n';
  }
  return kExitOk;
}

// trees --------------------------------------------------------------------

struct TreesArgs {
  std::size_t order = 1;
  std::optional<std::size_t> max_diameter;
  bool json = false;
};

int run_trees(const TreesArgs& a, std::ostream& out) {
  const auto trees = enumerate_trees(a.order);
  json list = json::array();
  std::size_t shown = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i];
    if (a.max_diameter && t.diameter() > *a.max_diameter) continue;
    ++shown;
    const std::string label = tree_label(t, i);
    if (a.json) {
      list.push_back({{"index", i},
                      {"label", label},
                      {"diameter", t.diameter()},
                      {"edges", edges_json(t.graph())}});
    } else {
      out << label << ":";
      for (const auto& [u, v] : t.graph().edges()) out << ' ' << u << '-' << v;
      out << '\n';
    }
  }
  if (a.json) {
    json doc = {{"order", a.order}, {"count", shown}, {"trees", std::move(list)}};
    if (a.max_diameter) doc["max_diameter"] = *a.max_diameter;
    out << doc.dump(2) << '\n';
  } else {
    out << shown << " trees\n";
  }
  return kExitOk;
}

// equiv --------------------------------------------------------------------

struct EquivArgs {
  std::string relation;
  std::string left;
  std::string right;
  std::size_t max_tree_order = 11;
  std::string method = "brute";
  bool json = false;
};

int run_equiv(const EquivArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.left).graph;
  const Graph h = read_graph_file(a.right).graph;
  EquivalenceReport report;
  if (a.relation == "t1") {
    report = t1_equivalent(g, h);
  } else if (a.relation == "t2") {
    report = t2_equivalent(g, h);
  } else if (a.relation == "nse") {
    report = nse_equivalent(g, h);
  } else {
    report = tree_equivalent_up_to(g, h, a.max_tree_order, *parse_count_method(a.method));
  }
  out << (a.json ? render_json(report) : render_text(report));
  return report.holds ? kExitOk : kExitFailed;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  SuiteOptions options;
  bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<VerificationReport> reports;
  bool all = true;
  for (const auto& name : a.suites) {
    reports.push_back(run_suite(name, a.options));
    all = all && reports.back().overall();
    if (!a.json) out << render_text(reports.back());
  }
  if (a.json) out << render_json(reports);
  return all ? kExitOk : kExitFailed;
}

// search psum --------------------------------------------------------------

struct SearchArgs {
  std::size_t length = 0;
  std::uint64_t max_entry = 0;
  bool json = false;
};

std::string vector_text(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int run_search_psum(const SearchArgs& a, std::ostream& out) {
  const auto found = psum_collision_search(a.length, a.max_entry);
  if (a.json) {
    json doc = {{"length", a.length}, {"max_entry", a.max_entry}, {"collision", nullptr}};
    if (found) doc["collision"] = {{"first", found->first}, {"second", found->second}};
    out << doc.dump(2) << '\n';
  } else if (found) {
    out << "collision: " << vector_text(found->first) << " and " << vector_text(found->second)
        << " have the same subset sums\n";
  } else {
    out << "no collision among sorted vectors of length " << a.length << " with entries <= "
        << a.max_entry << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homomorphism counts into trees: constructions, counting and checks", "homtree"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a construction as an edge list");
  gen_cmd->add_option("kind", gen.kind, "g-minus, g-minus-pi, g-pi, kral or counterexample")
      ->required()
      ->check(CLI::IsMember({"g-minus", "g-minus-pi", "g-pi", "kral", "counterexample"}));
  gen_cmd->add_option("--n", gen.n, "Size of each vertex class (>= 3)")->capture_default_str();
  gen_cmd->add_option("--perm", gen.perm, "Permutation in cycle notation, e.g. \"(1 2)(3 4)\"");
  gen_cmd->add_option("-o,--output", gen.output,
                      "Output file; pairs go to <stem>_1<ext> and <stem>_2<ext>");
  gen_cmd->add_flag("--json", gen.json, "JSON output");

  HomArgs hom;
  auto* hom_cmd = app.add_subcommand("hom", "Count homomorphisms between two edge-list graphs");
  hom_cmd->add_option("--source", hom.source, "Source graph file")
      ->required()
      ->check(CLI::ExistingFile);
  hom_cmd->add_option("--target", hom.target, "Target graph file")
      ->required()
      ->check(CLI::ExistingFile);
  hom_cmd->add_option("--method", hom.method, "brute, closed or decomp")
      ->check(CLI::IsMember({"brute", "closed", "decomp"}))
      ->capture_default_str();
  hom_cmd->add_flag("--json", hom.json, "JSON output");

  TreesArgs trees;
  auto* trees_cmd = app.add_subcommand("trees", "List the free trees of a given order");
  trees_cmd->add_option("--order", trees.order, "Number of vertices")
      ->required()
      ->check(CLI::Range(1, 20));
  trees_cmd->add_option("--max-diameter", trees.max_diameter, "Keep trees up to this diameter");
  trees_cmd->add_flag("--json", trees.json, "JSON output");

  EquivArgs equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two graphs under an equivalence");
  equiv_cmd->add_option("relation", equiv.relation, "t1, t2, nse or trees")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "nse", "trees"}));
  equiv_cmd->add_option("left", equiv.left, "First graph file")->required()->check(CLI::ExistingFile);
  equiv_cmd->add_option("right", equiv.right, "Second graph file")
      ->required()
      ->check(CLI::ExistingFile);
  equiv_cmd->add_option("--max-tree-order", equiv.max_tree_order, "Largest tree order for 'trees'")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  equiv_cmd->add_option("--method", equiv.method, "Counting method for 'trees': brute or decomp")
      ->check(CLI::IsMember({"brute", "decomp"}))
      ->capture_default_str();
  equiv_cmd->add_flag("--json", equiv.json, "JSON output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suites", verify.suites, "formulas, constructions, counterexample, kral, trees")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-tree-order", verify.options.max_tree_order,
                         "Largest tree order in the counterexample suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.options.seed, "Seed for the random corpora")
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches");
  search_cmd->require_subcommand(1);
  auto* psum_cmd = search_cmd->add_subcommand(
      "psum", "Look for distinct sorted vectors with the same multiset of subset sums");
  psum_cmd->add_option("--len", search.length, "Vector length (<= 6)")->required();
  psum_cmd->add_option("--max", search.max_entry, "Largest entry (<= 12)")->required();
  psum_cmd->add_flag("--json", search.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*hom_cmd) return run_hom(hom, out);
    if (*trees_cmd) return run_trees(trees, out);
    if (*equiv_cmd) return run_equiv(equiv, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*psum_cmd) return run_search_psum(search, out);
  } catch (const ParseError& e) {
    err << "homtree: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "homtree: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace homtree::cli
