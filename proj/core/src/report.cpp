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

#include "homtree/report.hpp"

#include <sstream>

#include "json.hpp"

namespace homtree {

bool VerificationReport::overall() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool VerificationReport::add(std::string description, std::string expected,
                             std::string actual) {
  const bool pass = expected == actual;
  return add(std::move(description), std::move(expected), std::move(actual), pass);
}

bool VerificationReport::add(std::string description, std::string expected,
                             std::string actual, bool pass) {
  checks.push_back({std::move(description), std::move(expected), std::move(actual), pass});
  return pass;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) {
      out << "  ok    " << c.description << ": " << c.actual << '\n';
    } else {
      out << "  FAIL  " << c.description << ": expected " << c.expected << ", got " << c.actual
          << '\n';
    }
    if (c.pass) ++passed;
  }
  out << report.suite << ": " << passed << '/' << report.checks.size() << " checks passed, "
      << (report.overall() ? "PASS" : "FAIL") << " in " << report.elapsed.count() << " ms\n";
  return out.str();
}

std::string render_json(std::span<const VerificationReport> reports) {
  auto doc = nlohmann::json::array();
  for (const auto& r : reports) {
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"description", c.description},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
    }
    doc.push_back({{"suite", r.suite},
                   {"checks", std::move(checks)},
                   {"overall", r.overall()},
                   {"elapsed_ms", r.elapsed.count()}});
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const EquivalenceReport& report) {
  std::ostringstream out;
  for (const auto& e : report.evidence) {
    out << "  " << e.instance << ": " << e.left << " vs " << e.right << '\n';
  }
  out << report.relation << ": " << (report.holds ? "equivalent" : "not equivalent");
  if (report.first_divergence) out << " (first divergence: " << *report.first_divergence << ")";
  out << '\n';
  return out.str();
}

std::string render_json(const EquivalenceReport& report) {
  auto evidence = nlohmann::json::array();
  for (const auto& e : report.evidence) {
    evidence.push_back({{"instance", e.instance}, {"left", e.left}, {"right", e.right}});
  }
  nlohmann::json doc = {{"relation", report.relation},
                        {"holds", report.holds},
                        {"evidence", std::move(evidence)},
                        {"first_divergence", nullptr}};
  if (report.first_divergence) doc["first_divergence"] = *report.first_divergence;
  return doc.dump(2) + "\n";
}

}  // namespace homtree
