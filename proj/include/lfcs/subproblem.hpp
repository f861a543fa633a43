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

#ifndef LFCS_SUBPROBLEM_HPP_
#define LFCS_SUBPROBLEM_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "lfcs/clock.hpp"
#include "lfcs/instance.hpp"
#include "lfcs/lcs.hpp"

namespace lfcs {

// Merged solution components defining a restricted subproblem: the union of
// the solutions' matching chains and the union of their deletion sets.
class ComponentPool {
 public:
  ComponentPool() = default;
  ComponentPool(const Instance& inst, std::vector<Match> match_b,
                std::vector<int> match_am);

  const MatchSet& match_b() const { return match_b_; }
  const std::vector<int>& match_am() const { return match_am_; }
  // Number of pool deletion positions carrying symbol s.
  int a_count(Symbol s) const { return a_count_[s]; }

  // Solutions the pool was merged from; their values seed the solver.
  const std::vector<Solution>& seeds() const { return seeds_; }
  void AddSeed(Solution s) { seeds_.push_back(std::move(s)); }

  bool empty() const { return match_b_.empty() && match_am_.empty(); }

 private:
  MatchSet match_b_;
  std::vector<int> match_am_;
  std::array<int, 256> a_count_{};
  std::vector<Solution> seeds_;
};

ComponentPool merge(const Instance& inst, std::span<const Solution> solutions);

// The pool of the unrestricted model: every matching, every position whose
// symbol occurs in M.
ComponentPool full_pool(const Instance& inst);

enum class SolveStatus { kOptimal, kCutoffImproved, kTimeLimit };

const char* ToString(SolveStatus status);

struct SolveLimits {
  double time_limit = std::numeric_limits<double>::infinity();
  // Stop as soon as a solution with obj > cutoff is found.
  std::optional<int> cutoff;
  std::optional<std::int64_t> node_limit;
  std::stop_token stop;
  // Optional clock to charge (virtual mode) and to report improvements to.
  SearchContext* ctx = nullptr;
};

struct SolverOutcome {
  Solution solution;
  double t_solve = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  std::int64_t nodes = 0;
};

// Interface of exact subproblem solvers. Implementations maximise
// |deletions| + |chain| over the pool subject to the chain being conflict
// free, no A-position being deleted and matched, and per-symbol budgets.
class SubproblemSolver {
 public:
  virtual ~SubproblemSolver() = default;
  virtual std::string name() const = 0;
  virtual SolverOutcome Solve(const Instance& inst, const ComponentPool& pool,
                              const SolveLimits& limits) const = 0;
};

// Depth-first branch and bound over matching chains. For a fixed chain the
// best deletion set decomposes per symbol, so only the chain is branched on.
class ChainBranchAndBound final : public SubproblemSolver {
 public:
  std::string name() const override { return "bnb"; }
  SolverOutcome Solve(const Instance& inst, const ComponentPool& pool,
                      const SolveLimits& limits) const override;
};

// Returns the solver registered under name ("bnb" is built in), or nullptr.
std::unique_ptr<SubproblemSolver> MakeSubproblemSolver(const std::string& name);

SolverOutcome solve_restricted(const Instance& inst, const ComponentPool& pool,
                               const SolveLimits& limits = {});

SolverOutcome solve_full_ilp(const Instance& inst, const SolveLimits& limits = {});

// Best deletion set for a fixed chain: per symbol, the smallest pool
// positions not used by the chain, up to the budget.
Solution CompleteChain(const Instance& inst, const ComponentPool& pool,
                       std::vector<Match> chain);

// Exhaustive optimum for n <= 20 (throws InstanceTooLarge otherwise).
int brute_force_oracle(const Instance& inst);
Solution brute_force_solve(const Instance& inst);

// Writes the restricted integer program in CPLEX LP format so an external
// MIP solver can be used. Conflict constraints are listed pairwise.
struct LpModelStats {
  std::int64_t x_vars = 0;
  std::int64_t y_vars = 0;
  std::int64_t conflict_rows = 0;
  std::int64_t column_rows = 0;
  std::int64_t row_rows = 0;
  std::int64_t budget_rows = 0;
};
LpModelStats WriteLpModel(std::ostream& out, const Instance& inst,
                          const ComponentPool& pool);

}  // namespace lfcs

#endif  // LFCS_SUBPROBLEM_HPP_
