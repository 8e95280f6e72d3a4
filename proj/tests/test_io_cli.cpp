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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

#include "homtree/constructions.hpp"
#include "homtree/edge_list.hpp"
#include "homtree/errors.hpp"
#include "homtree/report.hpp"
#include "homtree/suites.hpp"

namespace homtree {
namespace {

namespace fs = std::filesystem;

TEST(EdgeList, ReadsMinimalFile) {
  const Graph g = read_graph("n 2\n0 1\n");
  EXPECT_EQ(g, build_graph(2, {{0, 1}}));
}

TEST(EdgeList, ToleratesCommentsBlanksAndDuplicates) {
  const auto doc = read_document("# triangle-free\n\n n 3 \n1 0\n0 1\n\t2   1\n# trailing\n");
  EXPECT_EQ(doc.name, "triangle-free");
  EXPECT_EQ(doc.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, RoundTripIsCanonical) {
  const std::string messy = "n 4\n3 2\n0 1\n2 1\n1 0\n";
  const std::string canonical = write_graph(read_graph(messy));
  EXPECT_EQ(canonical, "n 4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(write_graph(read_graph(canonical)), canonical);
}

TEST(EdgeList, LabelsRoundTrip) {
  const auto c = build_g_pi(4, parse_permutation("(1 2)(3 4)", 4));
  const std::string text = write_graph(c.graph, c.name, c.labels);
  const auto doc = read_document(text);
  EXPECT_EQ(doc.graph, c.graph);
  EXPECT_EQ(doc.labels, c.labels);
  EXPECT_EQ(doc.name, c.name);
  std::istringstream lines(text);
  std::string line;
  std::size_t edges = 0, labels = 0;
  bool order_line = false;
  while (std::getline(lines, line)) {
    if (line == "n 19") order_line = true;
    if (line.rfind("# label ", 0) == 0) ++labels;
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++edges;
  }
  EXPECT_TRUE(order_line);
  EXPECT_EQ(edges, 54u);
  EXPECT_EQ(labels, 19u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      read_graph(text);
    } catch (const ParseError& e) {
      return e.location();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n 3\n0 1\n0 7\n"), 3u);
  EXPECT_EQ(line_of("0 1\nn 2\n"), 1u);
  EXPECT_EQ(line_of("n 2\nn 2\n"), 2u);
  EXPECT_EQ(line_of("# c\nn 3\n0 1 2\n"), 3u);
  EXPECT_EQ(line_of("n 3\n1 1\n"), 2u);
  EXPECT_EQ(line_of("n x\n"), 1u);
  EXPECT_EQ(line_of("n 2\n0 -1\n"), 2u);
  EXPECT_THROW(read_graph("# only comments\n"), ParseError);
  EXPECT_THROW(write_graph(build_graph(2, {}), std::nullopt, std::vector<std::string>{"x"}),
               GraphError);
}

TEST(Report, OverallIsConjunction) {
  VerificationReport r{"demo", {}, {}};
  EXPECT_TRUE(r.overall());
  EXPECT_TRUE(r.add("same", "3", "3"));
  EXPECT_TRUE(r.overall());
  EXPECT_FALSE(r.add("differs", "3", "4"));
  EXPECT_FALSE(r.overall());
}

TEST(Report, JsonSchema) {
  VerificationReport r{"demo", {}, std::chrono::milliseconds(12)};
  r.add("big", "123456789012345678901234567890", "123456789012345678901234567890");
  const std::vector<VerificationReport> reports = {r};
  const auto doc = nlohmann::json::parse(render_json(reports));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["suite"], "demo");
  EXPECT_EQ(doc[0]["overall"], true);
  EXPECT_EQ(doc[0]["elapsed_ms"], 12);
  EXPECT_EQ(doc[0]["checks"][0]["actual"], "123456789012345678901234567890");
  EXPECT_TRUE(doc[0]["checks"][0]["pass"].is_boolean());

  EquivalenceReport e{"t2", false, {{"K_{1,2}", "36", "40"}}, "K_{1,2}"};
  const auto edoc = nlohmann::json::parse(render_json(e));
  EXPECT_EQ(edoc["first_divergence"], "K_{1,2}");
  EXPECT_EQ(edoc["evidence"][0]["left"], "36");
  e.first_divergence.reset();
  EXPECT_TRUE(nlohmann::json::parse(render_json(e))["first_divergence"].is_null());
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 5u);
  EXPECT_THROW(run_suite("nope"), PreconditionError);
  EXPECT_TRUE(run_suite("trees").overall());
}

// ---- command line ----

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "homtree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("homtree_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
  fs::path dir_;
};

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cli_run({}).status, 2);
  const auto r = cli_run({"gen", "g-pi", "--bogus"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(cli_run({"frobnicate"}).status, 2);
  EXPECT_EQ(cli_run({"gen", "g-omega"}).status, 2);
  EXPECT_EQ(cli_run({"--help"}).status, 0);
}

TEST_F(Cli, GenWritesConstruction) {
  const auto r = cli_run({"gen", "g-pi", "--n", "4", "--perm", "(1 2)(3 4)", "-o", file("g.el")});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = read_graph_file(file("g.el"));
  const auto c = build_g_pi(4, parse_permutation("(1 2)(3 4)", 4));
  EXPECT_EQ(doc.graph, c.graph);
  EXPECT_EQ(doc.labels, c.labels);
  EXPECT_EQ(doc.graph.order(), 19u);
}

TEST_F(Cli, GenPairsAndJson) {
  ASSERT_EQ(cli_run({"gen", "counterexample", "-o", file("pair.el")}).status, 0);
  EXPECT_TRUE(fs::exists(file("pair_1.el")));
  EXPECT_TRUE(fs::exists(file("pair_2.el")));
  const auto r = cli_run({"gen", "kral", "--json"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["graphs"].size(), 2u);
  EXPECT_EQ(doc["graphs"][0]["edge_count"], 10);
  const auto text = cli_run({"gen", "g-minus", "--n", "3"});
  EXPECT_EQ(read_graph(text.out), build_g_minus(3).graph);
}

TEST_F(Cli, GenRejectsBadInput) {
  EXPECT_EQ(cli_run({"gen", "g-pi", "--n", "4", "--perm", "(1 9)"}).status, 2);
  EXPECT_EQ(cli_run({"gen", "g-minus", "--n", "2"}).status, 2);
}

TEST_F(Cli, Hom) {
  const std::string src = write("p3.el", "n 3\n0 1\n1 2\n");
  const std::string star = write("k13.el", "n 4\n0 1\n0 2\n0 3\n");
  const std::string tri = write("tri.el", "n 3\n0 1\n1 2\n0 2\n");
  for (const char* method : {"brute", "closed", "decomp"}) {
    const auto r = cli_run({"hom", "--source", src, "--target", star, "--method", method});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "12\n");  // 3^1 + 3^2
  }
  const auto j = cli_run({"hom", "--source", src, "--target", star, "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["count"], "12");
  EXPECT_EQ(cli_run({"hom", "--source", src, "--target", tri}).out, "12\n");
  EXPECT_EQ(cli_run({"hom", "--source", src, "--target", tri, "--method", "closed"}).status, 2);
  EXPECT_EQ(cli_run({"hom", "--source", file("missing.el"), "--target", star}).status, 2);
  const std::string broken = write("broken.el", "n 2\n0 1 1\n");
  const auto b = cli_run({"hom", "--source", broken, "--target", star});
  EXPECT_EQ(b.status, 2);
  EXPECT_NE(b.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, Trees) {
  const auto r = cli_run({"trees", "--order", "5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("3 trees"), std::string::npos);
  const auto j = cli_run({"trees", "--order", "6", "--max-diameter", "3", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["count"], 3);  // K_{1,5}, B_{1,3}, B_{2,2}
  EXPECT_EQ(cli_run({"trees", "--order", "0"}).status, 2);
}

TEST_F(Cli, EquivExitStatus) {
  const std::string left = write("l.el", "n 6\n0 1\n0 2\n3 4\n3 5\n");
  const std::string right = write("r.el", "n 6\n0 1\n2 3\n2 4\n2 5\n");
  const auto r = cli_run({"equiv", "t2", left, right, "--json"});
  EXPECT_EQ(r.status, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["first_divergence"], "K_{1,2}");
  EXPECT_EQ(doc["holds"], false);
  EXPECT_EQ(cli_run({"equiv", "t1", left, right}).status, 0);

  ASSERT_EQ(cli_run({"gen", "counterexample", "-o", file("c.el")}).status, 0);
  EXPECT_EQ(cli_run({"equiv", "nse", file("c_1.el"), file("c_2.el")}).status, 0);
  EXPECT_EQ(cli_run({"equiv", "trees", "--max-tree-order", "6", file("c_1.el"), file("c_2.el")})
                .status,
            0);
  const std::string odd = write("odd.el", "n 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(cli_run({"equiv", "nse", odd, left}).status, 2);
}

TEST_F(Cli, Verify) {
  const auto r = cli_run({"verify", "kral", "--json"});
  EXPECT_EQ(r.status, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["suite"], "kral");
  EXPECT_EQ(cli_run({"verify", "everything"}).status, 2);
  EXPECT_EQ(cli_run({"verify", "counterexample", "--max-tree-order", "15"}).status, 2);
}

TEST_F(Cli, SearchPsum) {
  const auto r = cli_run({"search", "psum", "--len", "2", "--max", "3", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["collision"].is_null());
  EXPECT_EQ(cli_run({"search", "psum", "--len", "7", "--max", "3"}).status, 2);
  EXPECT_EQ(cli_run({"search"}).status, 2);
}

}  // namespace
}  // namespace homtree
