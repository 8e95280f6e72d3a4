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

#include "homtree/count.hpp"

namespace homtree {

HomCount power(std::size_t base, std::size_t exponent) {
  HomCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

HomCount binomial(std::size_t n, std::size_t k) {
  HomCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

HomCount surjection_number(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  HomCount sum = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    HomCount term = binomial(m, k) * power(m - k, n);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::string to_decimal(const HomCount& c) { return c.get_str(10); }

}  // namespace homtree
