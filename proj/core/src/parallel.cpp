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

#include "homtree/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace homtree {

std::size_t worker_count() {
  std::size_t hardware = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const char* env = std::getenv("HOMTREE_THREADS");
  if (env == nullptr) return hardware;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return hardware;
  }
  return value;
}

}  // namespace homtree
