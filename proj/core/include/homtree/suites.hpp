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

#ifndef HOMTREE_SUITES_HPP
#define HOMTREE_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homtree/report.hpp"

namespace homtree {

struct SuiteOptions {
  // Trees of order up to this bound enter the counterexample comparison.
  std::size_t max_tree_order = 11;
  std::uint64_t seed = 20240601;
};

// formulas:       closed forms against brute force on random bipartite
//                 graphs; star-count characterisation on random unions of
//                 complete bipartite graphs.
// constructions:  construction facts, conjugacy versus isomorphism over the
//                 S_4 class representatives, equal fixed-point counts
//                 giving equal neighbourhood profiles.
// counterexample: G_{(12)(34)} versus G_{(1234)}.
// kral:           the two eight-vertex graphs separated by the
//                 neighbourhood profile but not by bistars.
// trees:          free-tree counts and pairwise non-isomorphism.
const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

// The two halves of "formulas", each drawing its corpus from its own seed.
VerificationReport verify_closed_forms(const SuiteOptions& options = {});
VerificationReport verify_star_characterisation(const SuiteOptions& options = {});
VerificationReport verify_formulas(const SuiteOptions& options = {});
VerificationReport verify_constructions(const SuiteOptions& options = {});
VerificationReport verify_counterexample(const SuiteOptions& options = {});
VerificationReport verify_kral(const SuiteOptions& options = {});
VerificationReport verify_trees(const SuiteOptions& options = {});

}  // namespace homtree

#endif  // HOMTREE_SUITES_HPP
