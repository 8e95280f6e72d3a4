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

#ifndef HOMTREE_EDGE_LIST_HPP
#define HOMTREE_EDGE_LIST_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homtree/graph.hpp"

namespace homtree {

// Edge-list text format:
//
//   # free-form comment lines, anywhere
//   n <order>
//   <u> <v>        one edge per line, 0-based, whitespace separated
//
// The writer emits an optional name comment, one "# label <v> <name>" line
// per labelled vertex, "n <order>", then edges with u < v in lexicographic
// order. Reading tolerates blank lines, duplicate edges and either edge
// orientation.
struct EdgeListDocument {
  std::optional<std::string> name;
  // Labels recovered from "# label" lines; empty if there were none.
  std::vector<std::string> labels;
  Graph graph;
};

// Throws ParseError carrying the 1-based line number.
EdgeListDocument read_document(std::string_view text);
Graph read_graph(std::string_view text);

// `labels` is either empty or has one entry per vertex.
std::string write_graph(const Graph& g, const std::optional<std::string>& name = {},
                        std::span<const std::string> labels = {});

// File helpers; I/O failures throw Error.
EdgeListDocument read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace homtree

#endif  // HOMTREE_EDGE_LIST_HPP
