// Copyright 2026 The lfcs Authors
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

#ifndef LFCS_ALGORITHMS_HPP_
#define LFCS_ALGORITHMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfcs/clock.hpp"
#include "lfcs/cmsa.hpp"
#include "lfcs/instance.hpp"

namespace lfcs {

enum class Algorithm { kApprox, kRandSample, kLs2, kLs4, kIlp, kCmsa, kOracle };

// Names used on the command line and in CSV files:
// approx, rand, ls2, ls4, ilp, cmsa, oracle.
const char* ToString(Algorithm algo);
Algorithm ParseAlgorithm(const std::string& name);  // throws ConfigInvalid
std::vector<Algorithm> ParseAlgorithmList(const std::string& comma_separated);

struct RunOptions {
  Algorithm algo = Algorithm::kCmsa;
  double time_limit = 600.0;
  std::uint64_t seed = 1;
  int n_rand = 10000;
  // Overrides the size-selected parameter profile of cmsa.
  std::optional<CmsaParams> cmsa;
  std::optional<int> target_obj;
  bool virtual_clock = false;
};

struct RunResult {
  Solution solution;
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::string status;
  std::vector<TrajectoryPoint> trajectory;
};

// Runs one algorithm on one instance. status is "optimal", "cutoff",
// "time_limit" or "done" (heuristics run to completion).
RunResult run_algorithm(const Instance& inst, const RunOptions& options);

}  // namespace lfcs

#endif  // LFCS_ALGORITHMS_HPP_
