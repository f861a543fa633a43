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

#include "lfcs/cmsa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>

#include "lfcs/errors.hpp"
#include "lfcs/subproblem.hpp"

namespace lfcs {

void CmsaParams::Validate() const {
  if (!(0.0 <= alpha_lb && alpha_lb <= alpha_ub && alpha_ub <= 1.0)) {
    throw ConfigInvalid("need 0 <= alpha_lb <= alpha_ub <= 1");
  }
  if (!(alpha_red > 0.0)) throw ConfigInvalid("alpha_red must be positive");
  if (!(t_ilp > 0.0)) throw ConfigInvalid("t_ilp must be positive");
  if (!(0.0 <= t_prop && t_prop <= 1.0)) throw ConfigInvalid("t_prop must lie in [0, 1]");
  if (!(time_limit >= 0.0)) throw ConfigInvalid("time_limit must be non-negative");
  if (n_a_cap < 1) throw ConfigInvalid("n_a_cap must be at least 1");
}

CmsaParams SmallProfile() {
  CmsaParams p;
  p.alpha_lb = 0.2;
  p.alpha_ub = 1.0;
  p.t_ilp = 10.0;
  p.t_prop = 0.7;
  p.alpha_red = 0.05;
  return p;
}

CmsaParams LargeProfile() {
  CmsaParams p;
  p.alpha_lb = 0.25;
  p.alpha_ub = 0.95;
  p.t_ilp = 30.0;
  p.t_prop = 0.2;
  p.alpha_red = 0.1;
  return p;
}

CmsaParams ProfileFor(int n) { return n <= 100 ? SmallProfile() : LargeProfile(); }

CmsaParams ProfileByName(const std::string& name) {
  if (name == "small") return SmallProfile();
  if (name == "large") return LargeProfile();
  throw ConfigInvalid("unknown parameter profile '" + name + "'");
}

Solution modify_components(const Instance& inst, const Solution& s_bsf,
                           double alpha_bsf, Rng& rng) {
  const int n = inst.n();
  std::array<std::vector<int>, 256> by_symbol;
  for (int p = 1; p <= n; ++p) by_symbol[static_cast<Symbol>(inst.a[p - 1])].push_back(p);

  std::vector<char> in_set(n + 1, 0);
  for (int p : s_bsf.deleted) in_set[p] = 1;

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<int> free_positions;
  for (int i : s_bsf.deleted) {
    if (!(coin(rng) > alpha_bsf)) continue;
    free_positions.clear();
    for (int p : by_symbol[static_cast<Symbol>(inst.a[i - 1])]) {
      if (!in_set[p]) free_positions.push_back(p);
    }
    if (free_positions.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, free_positions.size() - 1);
    const int replacement = free_positions[pick(rng)];
    in_set[i] = 0;
    in_set[replacement] = 1;
  }

  std::vector<int> deleted;
  deleted.reserve(s_bsf.deleted.size());
  for (int p = 1; p <= n; ++p)
    if (in_set[p]) deleted.push_back(p);
  return MakeSolution(inst, std::move(deleted));
}

int ObjectiveUpperBound(const Instance& inst) {
  std::array<int, 256> in_a{};
  std::array<int, 256> in_b{};
  for (char c : inst.a) ++in_a[static_cast<Symbol>(c)];
  for (char c : inst.b) ++in_b[static_cast<Symbol>(c)];
  int bound = 0;
  for (int c = 0; c < 256; ++c) {
    bound += std::min(in_a[c], in_b[c] + inst.fill.count(static_cast<Symbol>(c)));
  }
  return bound;
}

namespace {

// Probabilities are kept in millionths so that repeated +/- alpha_red steps
// do not drift.
constexpr std::int64_t kUnit = 1'000'000;

std::int64_t ToUnits(double p) { return std::llround(p * static_cast<double>(kUnit)); }
double FromUnits(std::int64_t u) { return static_cast<double>(u) / static_cast<double>(kUnit); }

}  // namespace

CmsaResult adapt_cmsa_solve(const Instance& inst, const CmsaParams& params,
                            std::vector<CmsaStep>* steps) {
  params.Validate();
  SearchContext ctx(params.virtual_clock ? Clock::Virtual() : Clock::Wall());
  Rng rng(params.seed);
  const std::int64_t cells = static_cast<std::int64_t>(inst.n() + 1) * (inst.len_b() + 1);

  const std::int64_t lb = ToUnits(params.alpha_lb);
  const std::int64_t ub = ToUnits(params.alpha_ub);
  const std::int64_t red = ToUnits(params.alpha_red);
  const std::int64_t red_up = ToUnits(params.alpha_red / 10.0);

  const int upper_bound = ObjectiveUpperBound(inst);
  auto done = [&](int obj) {
    return obj >= upper_bound || (params.target_obj && obj >= *params.target_obj);
  };

  CmsaResult result;
  Solution s_bsf = rand_sample_construct(inst, rng);
  ctx.clock.ChargeCells(cells);
  ctx.Improved(s_bsf.obj);

  std::int64_t alpha = lb;
  int n_a = 1;
  bool warned_cap = false;

  while (ctx.clock.Elapsed() < params.time_limit) {
    if (done(s_bsf.obj)) {
      result.stopped_early = true;
      break;
    }
    ++result.iterations;

    std::vector<Solution> batch{s_bsf};
    for (int l = 0; l < n_a && ctx.clock.Elapsed() < params.time_limit; ++l) {
      Solution s = modify_components(inst, s_bsf, FromUnits(alpha), rng);
      ctx.clock.ChargeCells(cells);
      const bool better = s.obj > s_bsf.obj;
      batch.push_back(s);
      if (better) {
        s_bsf = std::move(s);
        ctx.Improved(s_bsf.obj);
      }
    }

    const ComponentPool pool = merge(inst, batch);
    SolveLimits limits;
    limits.time_limit = std::min(params.t_ilp, std::max(0.0, params.time_limit - ctx.clock.Elapsed()));
    limits.cutoff = s_bsf.obj;
    limits.ctx = &ctx;
    SolverOutcome solved = solve_restricted(inst, pool, limits);
    // The restricted chain can be shorter than the residual's LCS.
    Solution s_prime = MakeSolution(inst, std::move(solved.solution.deleted));
    ctx.clock.ChargeCells(cells);
    const int solved_obj = s_prime.obj;

    if (solved.t_solve < params.t_prop * params.t_ilp && alpha > lb) {
      alpha = std::max(lb, alpha - red);
    }
    if (s_prime.obj > s_bsf.obj) {
      s_bsf = std::move(s_prime);
      n_a = 1;
      alpha = ub;
    } else if (s_prime.obj < s_bsf.obj) {
      if (n_a == 1) {
        alpha = std::min(alpha + red_up, ub);
      } else {
        n_a = 1;
        alpha = ub;
      }
    } else {
      if (n_a < params.n_a_cap) {
        ++n_a;
      } else if (!warned_cap) {
        std::clog << "adapt-cmsa: number of constructions capped at " << params.n_a_cap
                  << " on " << inst.name << "\n";
        warned_cap = true;
      }
    }

    if (steps != nullptr) {
      steps->push_back({result.iterations, FromUnits(alpha), n_a, s_bsf.obj,
                        solved_obj, solved.t_solve});
    }
  }
  if (!result.stopped_early && done(s_bsf.obj)) result.stopped_early = true;

  result.best = std::move(s_bsf);
  result.trajectory = ctx.trajectory;
  result.elapsed = ctx.clock.Elapsed();

  if (params.trajectory_log) {
    std::ofstream log(*params.trajectory_log, std::ios::binary | std::ios::app);
    if (!log) throw IoError("cannot write trajectory log " + params.trajectory_log->string());
    for (const TrajectoryPoint& p : result.trajectory) log << p.seconds << '\t' << p.obj << '\n';
  }
  return result;
}

}  // namespace lfcs
