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

#ifndef HOMTREE_REPORT_HPP
#define HOMTREE_REPORT_HPP

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "homtree/equivalence.hpp"

namespace homtree {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Outcome of one verification suite. overall() is the conjunction of the
// pass flags; a suite with no checks passes vacuously.
struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::chrono::milliseconds elapsed{0};

  bool overall() const;
  // Records a check and returns its pass flag.
  bool add(std::string description, std::string expected, std::string actual);
  bool add(std::string description, std::string expected, std::string actual, bool pass);
};

// Human-readable rendering: one line per check, then a summary line.
std::string render_text(const VerificationReport& report);
// JSON array of {suite, checks[{description, expected, actual, pass}],
// overall, elapsed_ms}. Counts stay strings.
std::string render_json(std::span<const VerificationReport> reports);

std::string render_text(const EquivalenceReport& report);
// {relation, holds, evidence[{instance, left, right}], first_divergence}
// with first_divergence null when absent.
std::string render_json(const EquivalenceReport& report);

}  // namespace homtree

#endif  // HOMTREE_REPORT_HPP
