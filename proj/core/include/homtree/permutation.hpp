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

#ifndef HOMTREE_PERMUTATION_HPP
#define HOMTREE_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace homtree {

// A bijection on {0, ..., n-1}. Text form is 1-based cycle notation.
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  // Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Cycles of length >= 2 in 1-based notation, e.g. "(1 2)(3 4)"; the
  // identity prints as "()".
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

// Cycle lengths in non-increasing order, fixed points included.
struct CycleType {
  std::vector<std::size_t> lengths;

  std::string to_string() const;
  bool operator==(const CycleType&) const = default;
};

// Parses 1-based cycle notation over n points: "(1 2)(3 4)", "(1,2,3)",
// "(1234)" or "" for the identity. Runs of digits with no separator are
// split per digit only when n <= 9. Throws ParseError with the character
// offset for malformed text, repeated points or points outside [1, n].
Permutation parse_permutation(std::string_view text, std::size_t n);

CycleType cycle_type(const Permutation& p);
std::size_t fixed_points(const Permutation& p);
// Least common multiple of the cycle lengths.
std::size_t permutation_order(const Permutation& p);
// Conjugate in S_n iff equal cycle types. Throws PreconditionError when the
// permutations act on different numbers of points.
bool is_conjugate(const Permutation& a, const Permutation& b);

// All n! permutations of n points in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace homtree

#endif  // HOMTREE_PERMUTATION_HPP
