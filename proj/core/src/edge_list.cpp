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

#include "homtree/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

std::optional<std::size_t> parse_index(std::string_view field) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

}  // namespace

EdgeListDocument read_document(std::string_view text) {
  EdgeListDocument doc;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::string>> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      auto fields = split_fields(body);
      if (fields.size() >= 3 && fields[0] == "label") {
        auto v = parse_index(fields[1]);
        if (!v) throw ParseError("line " + std::to_string(line_no) + ": bad label index", line_no);
        labels.emplace_back(*v, std::string(fields[2]));
      } else if (!doc.name && !body.empty()) {
        doc.name = std::string(body);
      }
      continue;
    }

    auto fields = split_fields(line);
    if (fields.size() == 2 && fields[0] == "n") {
      if (order) {
        throw ParseError("line " + std::to_string(line_no) + ": repeated 'n' line", line_no);
      }
      order = parse_index(fields[1]);
      if (!order) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex count", line_no);
      }
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected '<u> <v>' or 'n <order>'",
                       line_no);
    }
    if (!order) {
      throw ParseError("line " + std::to_string(line_no) + ": edge before 'n' line", line_no);
    }
    auto u = parse_index(fields[0]);
    auto v = parse_index(fields[1]);
    if (!u || !v) {
      throw ParseError("line " + std::to_string(line_no) + ": bad vertex index", line_no);
    }
    if (*u == *v || *u >= *order || *v >= *order) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid edge " +
                           std::string(fields[0]) + " " + std::string(fields[1]),
                       line_no);
    }
    edges.emplace_back(*u, *v);
  }
  if (!order) throw ParseError("missing 'n <order>' line", line_no);

  doc.graph = build_graph(*order, edges);
  if (!labels.empty()) {
    doc.labels.assign(*order, "");
    for (auto& [v, name] : labels) {
      if (v >= *order) throw ParseError("label index out of range", 0);
      doc.labels[v] = std::move(name);
    }
  }
  return doc;
}

Graph read_graph(std::string_view text) { return read_document(text).graph; }

std::string write_graph(const Graph& g, const std::optional<std::string>& name,
                        std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != g.order()) {
    throw GraphError("label count does not match graph order");
  }
  std::ostringstream out;
  if (name) out << "# " << *name << '\n';
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out << "# label " << v << ' ' << labels[v] << '\n';
  }
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

EdgeListDocument read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_document(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace homtree
