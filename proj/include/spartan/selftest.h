// Copyright 2026 The Spartan Authors
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

#ifndef SPARTAN_SELFTEST_H_
#define SPARTAN_SELFTEST_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spartan {

struct SelftestOptions {
  int max_n = 6;         // exhaustive corpus covers 2..max_n
  int samples = 300;     // random connected graphs for each of n = 7, 8
  double p = 0.4;
  std::uint64_t seed = 7;
  int threads = 0;       // 0: hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long long checked = 0;
  long long failures = 0;
  std::string detail;  // first failure, if any
  double seconds = 0;
};

struct SelftestReport {
  SelftestOptions options;
  long long graphs = 0;
  std::vector<CriterionResult> criteria;  // ids 1..8
  bool pass = false;
};

// Runs the eight acceptance criteria over the exhaustive and random
// corpora. on_result is called as each criterion is settled.
SelftestReport run_selftest(
    const SelftestOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace spartan

#endif  // SPARTAN_SELFTEST_H_
