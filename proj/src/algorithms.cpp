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

#include "lfcs/algorithms.hpp"

#include <sstream>

#include "lfcs/baselines.hpp"
#include "lfcs/errors.hpp"
#include "lfcs/subproblem.hpp"

namespace lfcs {

const char* ToString(Algorithm algo) {
  switch (algo) {
    case Algorithm::kApprox:
      return "approx";
    case Algorithm::kRandSample:
      return "rand";
    case Algorithm::kLs2:
      return "ls2";
    case Algorithm::kLs4:
      return "ls4";
    case Algorithm::kIlp:
      return "ilp";
    case Algorithm::kCmsa:
      return "cmsa";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kApprox, Algorithm::kRandSample, Algorithm::kLs2,
                      Algorithm::kLs4, Algorithm::kIlp, Algorithm::kCmsa,
                      Algorithm::kOracle}) {
    if (name == ToString(a)) return a;
  }
  throw ConfigInvalid("unknown algorithm '" + name + "'");
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& comma_separated) {
  std::vector<Algorithm> out;
  std::istringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(ParseAlgorithm(item));
  }
  if (out.empty()) throw ConfigInvalid("empty algorithm list");
  return out;
}

RunResult run_algorithm(const Instance& inst, const RunOptions& options) {
  SearchContext ctx(options.virtual_clock ? Clock::Virtual() : Clock::Wall());
  RunResult result;
  result.status = "done";

  switch (options.algo) {
    case Algorithm::kApprox:
      result.solution = approx_solve(inst, &ctx);
      break;
    case Algorithm::kRandSample:
      result.solution = rand_sample_solve(inst, {options.n_rand, options.seed}, &ctx);
      break;
    case Algorithm::kLs2:
    case Algorithm::kLs4: {
      const int k = options.algo == Algorithm::kLs2 ? 2 : 4;
      result.solution = local_search_solve(inst, {k}, &ctx);
      break;
    }
    case Algorithm::kIlp: {
      SolveLimits limits;
      limits.time_limit = options.time_limit;
      limits.ctx = &ctx;
      SolverOutcome out = solve_full_ilp(inst, limits);
      result.solution = std::move(out.solution);
      result.status = ToString(out.status);
      break;
    }
    case Algorithm::kCmsa: {
      CmsaParams params = options.cmsa.value_or(ProfileFor(inst.n()));
      params.time_limit = options.time_limit;
      params.seed = options.seed;
      params.virtual_clock = options.virtual_clock;
      if (options.target_obj) params.target_obj = options.target_obj;
      CmsaResult out = adapt_cmsa_solve(inst, params);
      result.solution = std::move(out.best);
      result.trajectory = std::move(out.trajectory);
      result.time_to_best = result.trajectory.empty() ? 0.0 : result.trajectory.back().seconds;
      result.total_time = out.elapsed;
      if (result.time_to_best > result.total_time) result.time_to_best = result.total_time;
      result.status = out.stopped_early ? "bound_reached" : "time_limit";
      return result;
    }
    case Algorithm::kOracle:
      result.solution = brute_force_solve(inst);
      ctx.clock.ChargeCells(static_cast<std::int64_t>(inst.n() + 1) * (inst.len_b() + 1));
      ctx.Improved(result.solution.obj);
      result.status = "optimal";
      break;
  }
  result.trajectory = ctx.trajectory;
  result.time_to_best = ctx.TimeToBest();
  result.total_time = ctx.clock.Elapsed();
  if (result.time_to_best > result.total_time) result.time_to_best = result.total_time;
  return result;
}

}  // namespace lfcs
