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

#ifndef HOMTREE_COUNT_HPP
#define HOMTREE_COUNT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace homtree {

// Exact, non-negative, arbitrary-precision count.
using HomCount = mpz_class;

HomCount power(std::size_t base, std::size_t exponent);
HomCount binomial(std::size_t n, std::size_t k);

// Number of surjections [n] -> [m]:
//   s(n, m) = sum_{k=0..m} (-1)^k C(m, k) (m - k)^n,
// with s(0, 0) = 1.
HomCount surjection_number(std::size_t n, std::size_t m);

// Decimal digits, no sign, no separators.
std::string to_decimal(const HomCount& c);

}  // namespace homtree

#endif  // HOMTREE_COUNT_HPP
