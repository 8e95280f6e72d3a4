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

#include "homtree/constructions.hpp"

#include <optional>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

enum class Augment { kNone, kHubs };

LabeledConstruction build(std::size_t n, const std::optional<Permutation>& pi,
                          Augment augment) {
  if (n < 3) throw PreconditionError("construction needs n >= 3");
  if (pi && pi->size() != n) {
    throw PreconditionError("permutation must act on " + std::to_string(n) +
                            " points");
  }
  LabeledConstruction out;
  out.n = n;
  const std::size_t order = augment == Augment::kHubs ? 4 * n + 3 : 4 * n;
  for (char cls : {'a', 'b', 'c', 'd'}) {
    for (std::size_t i = 1; i <= n; ++i) {
      out.labels.push_back(std::string(1, cls) + std::to_string(i));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) {
        edges.emplace_back(out.a(i), out.b(j));
        edges.emplace_back(out.c(i), out.d(j));
      }
    }
    edges.emplace_back(out.b(i), out.c(i));
    if (pi) edges.emplace_back(out.a(i), out.d((*pi)(i - 1) + 1));
  }
  if (augment == Augment::kHubs) {
    out.labels.insert(out.labels.end(), {"e", "f", "g"});
    for (std::size_t i = 1; i <= n; ++i) {
      edges.emplace_back(out.e(), out.b(i));
      edges.emplace_back(out.e(), out.d(i));
      edges.emplace_back(out.f(), out.a(i));
      edges.emplace_back(out.f(), out.c(i));
      edges.emplace_back(out.g(), out.c(i));
    }
    edges.emplace_back(out.e(), out.f());
    edges.emplace_back(out.e(), out.g());
  }
  out.graph = build_graph(order, edges);
  return out;
}

}  // namespace

VertexSet LabeledConstruction::vertex_class(char cls) const {
  VertexSet out;
  for (std::size_t i = 1; i <= n; ++i) {
    switch (cls) {
      case 'a': out.push_back(a(i)); break;
      case 'b': out.push_back(b(i)); break;
      case 'c': out.push_back(c(i)); break;
      case 'd': out.push_back(d(i)); break;
      default: throw PreconditionError(std::string("unknown vertex class ") + cls);
    }
  }
  return out;
}

LabeledConstruction build_g_minus(std::size_t n) {
  auto out = build(n, std::nullopt, Augment::kNone);
  out.name = "G-(n=" + std::to_string(n) + ")";
  return out;
}

LabeledConstruction build_g_minus_pi(std::size_t n, const Permutation& pi) {
  auto out = build(n, pi, Augment::kNone);
  out.name = "G-_pi(n=" + std::to_string(n) + ", pi=" + pi.to_string() + ")";
  return out;
}

LabeledConstruction build_g_pi(std::size_t n, const Permutation& pi) {
  auto out = build(n, pi, Augment::kHubs);
  out.name = "G_pi(n=" + std::to_string(n) + ", pi=" + pi.to_string() + ")";
  return out;
}

KralPair kral_pair() {
  // X = a b c -> 0 1 2, Y = d e f g h -> 3..7.
  enum : Vertex { a, b, c, d, e, f, g, h };
  auto complete_minus = [](std::initializer_list<Edge> missing) {
    std::vector<Edge> edges;
    for (Vertex x : {a, b, c}) {
      for (Vertex y : {d, e, f, g, h}) {
        bool skip = false;
        for (const Edge& m : missing) skip = skip || (m == Edge{x, y});
        if (!skip) edges.emplace_back(x, y);
      }
    }
    return build_graph(8, edges);
  };
  KralPair out{
      complete_minus({{a, d}, {a, e}, {a, f}, {b, g}, {b, h}}),
      complete_minus({{a, d}, {a, e}, {a, f}, {b, g}, {c, g}}),
      {"a", "b", "c", "d", "e", "f", "g", "h"},
  };
  return out;
}

std::pair<LabeledConstruction, LabeledConstruction> counterexample_pair() {
  return {build_g_pi(4, parse_permutation("(1 2)(3 4)", 4)),
          build_g_pi(4, parse_permutation("(1 2 3 4)", 4))};
}

}  // namespace homtree
