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

#ifndef LFCS_CMSA_HPP_
#define LFCS_CMSA_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lfcs/baselines.hpp"
#include "lfcs/clock.hpp"
#include "lfcs/instance.hpp"

namespace lfcs {

// Parameters of the self-adaptive construct-merge-solve loop.
struct CmsaParams {
  double alpha_lb = 0.2;
  double alpha_ub = 1.0;
  double alpha_red = 0.05;
  double t_ilp = 10.0;
  double t_prop = 0.7;
  double time_limit = 600.0;
  std::uint64_t seed = 1;

  // Upper bound on the number of constructions per iteration.
  int n_a_cap = 64;
  // Stop once the incumbent reaches this value.
  std::optional<int> target_obj;
  bool virtual_clock = false;
  // When set, the incumbent trajectory is written here as "t<TAB>obj" lines.
  std::optional<std::filesystem::path> trajectory_log;

  // Throws ConfigInvalid.
  void Validate() const;
};

// Tuned profiles: "small" for n <= 100, "large" above.
CmsaParams SmallProfile();
CmsaParams LargeProfile();
CmsaParams ProfileFor(int n);
// "small" / "large"; throws ConfigInvalid otherwise.
CmsaParams ProfileByName(const std::string& name);

// Randomised copy of s_bsf: each deletion position is, with probability
// 1 - alpha_bsf, swapped for a uniformly chosen position carrying the same
// symbol that is not yet deleted. The chain is re-derived by LCS. The number
// of deletions never changes.
Solution modify_components(const Instance& inst, const Solution& s_bsf,
                           double alpha_bsf, Rng& rng);

struct CmsaResult {
  Solution best;
  std::vector<TrajectoryPoint> trajectory;
  int iterations = 0;
  double elapsed = 0.0;
  // True when the loop ended because the incumbent hit an upper bound or the
  // target value rather than the time limit.
  bool stopped_early = false;
};

// Observable state after each solve phase; used by tests.
struct CmsaStep {
  int iteration = 0;
  double alpha_bsf = 0.0;
  int n_a = 1;
  int obj_bsf = 0;
  int obj_solved = 0;
  double t_solve = 0.0;
};

CmsaResult adapt_cmsa_solve(const Instance& inst, const CmsaParams& params,
                            std::vector<CmsaStep>* steps = nullptr);

// sum over symbols of min(count in A, count in B + count in M): every
// counted A-position is either deleted against M or matched into B.
int ObjectiveUpperBound(const Instance& inst);

}  // namespace lfcs

#endif  // LFCS_CMSA_HPP_
