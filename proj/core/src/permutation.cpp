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

#include "homtree/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "homtree/errors.hpp"

namespace homtree {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::vector<std::vector<std::size_t>> cycles_of(const Permutation& p) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || hit[image]) {
      throw PreconditionError("permutation images are not a bijection");
    }
    hit[image] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("cannot compose permutations of different size");
  }
  std::vector<std::size_t> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles_of(*this)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lengths[i]);
  }
  return out + "]";
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  std::vector<std::size_t> images(n, kUnset);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;

  auto fail = [&](const std::string& what, std::size_t at) -> ParseError {
    return ParseError("permutation: " + what + " at offset " + std::to_string(at),
                      at);
  };
  auto skip_space = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  };

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('", pos);
    ++pos;

    std::vector<std::pair<std::size_t, std::size_t>> cycle;  // point, offset
    while (true) {
      skip_space();
      if (pos == text.size()) throw fail("unclosed '('", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail(std::string("unexpected '") + text[pos] + "'", pos);
      }
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::string_view digits = text.substr(start, pos - start);
      if (digits.size() > 1 && n <= 9) {
        for (std::size_t k = 0; k < digits.size(); ++k) {
          cycle.emplace_back(static_cast<std::size_t>(digits[k] - '0'), start + k);
        }
      } else {
        if (digits.size() > 9) throw fail("point too large", start);
        cycle.emplace_back(std::stoul(std::string(digits)), start);
      }
    }

    for (const auto& [point, at] : cycle) {
      if (point < 1 || point > n) {
        throw fail("point " + std::to_string(point) + " outside [1," +
                       std::to_string(n) + "]",
                   at);
      }
      if (used[point - 1]) {
        throw fail("repeated point " + std::to_string(point), at);
      }
      used[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i].first - 1] = cycle[(i + 1) % cycle.size()].first - 1;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] == kUnset) images[i] = i;
  }
  return Permutation(std::move(images));
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  for (const auto& cycle : cycles_of(p)) type.lengths.push_back(cycle.size());
  std::sort(type.lengths.begin(), type.lengths.end(), std::greater<>());
  return type;
}

std::size_t fixed_points(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) count += p(i) == i ? 1 : 0;
  return count;
}

std::size_t permutation_order(const Permutation& p) {
  std::size_t order = 1;
  for (std::size_t len : cycle_type(p).lengths) order = std::lcm(order, len);
  return order;
}

bool is_conjugate(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("permutations act on different numbers of points");
  }
  return cycle_type(a) == cycle_type(b);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace homtree
