// Copyright 2026 The mapgen Authors.
//
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

#ifndef MAPGEN_VERIFY_HPP
#define MAPGEN_VERIFY_HPP

// Verification suites over the series, the bijections and the oracle, and
// the numbered acceptance run.

#include <string>
#include <vector>

#include "mapgen/recursion.hpp"

namespace mapgen {

struct CheckResult {
  std::string name;
  bool passed = true;
  // a known divergence from a published value, reported but not failing
  bool expected_divergence = false;
  std::string detail;  // summary, or the first counterexample
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text(bool timings = false) const;
  std::string to_json() const;
};

struct VerifyConfig {
  Family family = Family::kEulerian;
  WeightSpec weights = WeightSpec::regular(4);
  int m = 3;
  int order = 8;
  int i_max = 5;
  int N = 3;
  int max_edges = 4;
  int max_black = 2;
  int max_marks = 2;
};

/// identities, roundtrip, face-colored, contfrac or all. `all` is the
/// acceptance run and ignores the config.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg);
std::vector<std::string> suite_names();

/// Acceptance criteria 1..11; 0 runs every one.
SuiteReport acceptance(int criterion = 0);
constexpr int kAcceptanceCriteria = 11;

}  // namespace mapgen

#endif  // MAPGEN_VERIFY_HPP
