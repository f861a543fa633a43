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

#include "lfcs/subproblem.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "lfcs/errors.hpp"

namespace lfcs {

ComponentPool::ComponentPool(const Instance& inst, std::vector<Match> match_b,
                             std::vector<int> match_am) {
  for (const Match& p : match_b) {
    if (p.i < 1 || p.i > inst.n() || p.j < 1 || p.j > inst.len_b()) {
      throw IndexOutOfRange("pool pair outside the instance");
    }
    if (inst.a[p.i - 1] != inst.b[p.j - 1]) {
      throw Error("pool pair joins different symbols");
    }
  }
  match_b_ = MatchSet(std::move(match_b), inst.n(), inst.len_b());

  std::sort(match_am.begin(), match_am.end());
  match_am.erase(std::unique(match_am.begin(), match_am.end()), match_am.end());
  for (int p : match_am) {
    if (p < 1 || p > inst.n()) throw IndexOutOfRange("pool position outside A");
    const Symbol s = static_cast<Symbol>(inst.a[p - 1]);
    if (inst.fill.count(s) == 0) {
      throw BudgetViolation("pool deletion position carries a symbol absent from M");
    }
    ++a_count_[s];
  }
  match_am_ = std::move(match_am);
}

ComponentPool merge(const Instance& inst, std::span<const Solution> solutions) {
  std::vector<Match> pairs;
  std::vector<int> positions;
  for (const Solution& s : solutions) {
    pairs.insert(pairs.end(), s.chain.begin(), s.chain.end());
    positions.insert(positions.end(), s.deleted.begin(), s.deleted.end());
  }
  ComponentPool pool(inst, std::move(pairs), std::move(positions));
  for (const Solution& s : solutions) pool.AddSeed(s);
  return pool;
}

ComponentPool full_pool(const Instance& inst) {
  MatchSet all = all_matchings(inst.a, inst.b);
  std::vector<int> positions;
  for (int p = 1; p <= inst.n(); ++p) {
    if (inst.fill.count(static_cast<Symbol>(inst.a[p - 1])) > 0) positions.push_back(p);
  }
  return ComponentPool(inst, all.pairs(), std::move(positions));
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kCutoffImproved:
      return "cutoff";
    case SolveStatus::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

Solution CompleteChain(const Instance& inst, const ComponentPool& pool,
                       std::vector<Match> chain) {
  std::vector<char> matched(inst.n() + 1, 0);
  for (const Match& p : chain) matched[p.i] = 1;
  std::array<int, 256> used{};
  Solution s;
  for (int p : pool.match_am()) {
    if (matched[p]) continue;
    const Symbol c = static_cast<Symbol>(inst.a[p - 1]);
    if (used[c] < inst.fill.count(c)) {
      ++used[c];
      s.deleted.push_back(p);
    }
  }
  s.chain = std::move(chain);
  s.obj = s.r() + static_cast<int>(s.chain.size());
  return s;
}

namespace {

// Search over maximal chains of the pool.
//
// For a chain X, the best deletion count is
//   sum_s min(M_s, a_s - u_s(X)) = base + sum_s min(u_s(X), slack_s)
//                                  - (chain pairs on pool deletion positions)
// where u_s counts chain pairs sitting on pool deletion positions of symbol
// s, base = sum_s min(M_s, a_s) and slack_s = max(0, a_s - M_s). Hence the
// objective is base plus the chain weight, where a pair on a non-deletion
// position weighs 1 and a pair on a deletion position of symbol s weighs 1
// only while fewer than slack_s such pairs are used. Weights are
// non-negative, so some optimal chain is maximal and every node only needs
// to branch on the Pareto-minimal successors of its last pair.
class ChainSearch {
 public:
  ChainSearch(const Instance& inst, const ComponentPool& pool,
              const SolveLimits& limits)
      : inst_(inst),
        pool_(pool),
        limits_(limits),
        n_(inst.n()),
        m_(inst.len_b()),
        w_(m_ + 2),
        start_(std::chrono::steady_clock::now()) {
    virtual_ = limits.ctx != nullptr && limits.ctx->clock.is_virtual();
    node_limit_ = limits.node_limit.value_or(std::numeric_limits<std::int64_t>::max());
    if (virtual_ && std::isfinite(limits.time_limit)) {
      const double budget = std::max(0.0, limits.time_limit) / Clock::kSecondsPerNode;
      node_limit_ = std::min<std::int64_t>(node_limit_, static_cast<std::int64_t>(budget));
    }
  }

  SolverOutcome Run() {
    Prepare();
    SolverOutcome out;

    // Incumbents that need no search.
    for (const Solution& seed : pool_.seeds()) {
      std::vector<Match> chain;
      for (const Match& p : seed.chain)
        if (pool_.match_b().contains(p)) chain.push_back(p);
      Offer(ChainValue(chain), chain);
    }
    {
      std::vector<Match> chain = TraceTable(full_);
      Offer(ChainValue(chain), chain);
      chain = TraceTable(plain_);
      Offer(ChainValue(chain), chain);
    }

    const int total_slack = TotalSlack(slack_);
    const int root_bound = base_ + std::min(full_[Idx(1, 1)], plain_[Idx(1, 1)] + total_slack);
    if (!CutoffHit() && best_value_ < root_bound) {
      std::vector<int> remaining(tracked_.size());
      for (std::size_t t = 0; t < tracked_.size(); ++t) remaining[t] = slack_[tracked_[t]];
      remaining_ = std::move(remaining);
      Dfs(0, 0, base_, total_slack);
    }

    if (CutoffHit()) {
      out.status = SolveStatus::kCutoffImproved;
    } else if (stopped_) {
      out.status = SolveStatus::kTimeLimit;
    } else {
      out.status = SolveStatus::kOptimal;
    }
    out.solution = CompleteChain(inst_, pool_, DropIdlePairs(best_chain_));
    assert(out.solution.obj == best_value_);
    out.nodes = nodes_;
    if (virtual_) {
      limits_.ctx->clock.ChargeNodes(nodes_);
      out.t_solve = static_cast<double>(nodes_) * Clock::kSecondsPerNode;
    } else {
      out.t_solve = Elapsed();
    }
    return out;
  }

 private:
  std::size_t Idx(int i, int j) const { return static_cast<std::size_t>(i) * w_ + j; }

  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void Prepare() {
    is_del_.assign(n_ + 2, 0);
    for (int p : pool_.match_am()) is_del_[p] = 1;
    base_ = 0;
    slack_.fill(0);
    tracked_index_.fill(-1);
    for (int c = 0; c < 256; ++c) {
      const int a = pool_.a_count(static_cast<Symbol>(c));
      if (a == 0) continue;
      const int budget = inst_.fill.count(static_cast<Symbol>(c));
      base_ += std::min(a, budget);
      slack_[c] = std::max(0, a - budget);
      if (slack_[c] > 0) {
        tracked_index_[c] = static_cast<int>(tracked_.size());
        tracked_.push_back(c);
      }
    }

    // Suffix tables over (i, j): longest pool chain in the quadrant, and the
    // same counting only pairs on non-deletion positions.
    const std::size_t cells = static_cast<std::size_t>(n_ + 2) * w_;
    full_.assign(cells, 0);
    plain_.assign(cells, 0);
    in_pool_.assign(cells, 0);
    for (const Match& p : pool_.match_b().pairs()) in_pool_[Idx(p.i, p.j)] = 1;
    for (int i = n_; i >= 1; --i) {
      for (int j = m_; j >= 1; --j) {
        const std::size_t k = Idx(i, j);
        int f = std::max(full_[Idx(i + 1, j)], full_[Idx(i, j + 1)]);
        int g = std::max(plain_[Idx(i + 1, j)], plain_[Idx(i, j + 1)]);
        if (in_pool_[k]) {
          f = std::max(f, full_[Idx(i + 1, j + 1)] + 1);
          g = std::max(g, plain_[Idx(i + 1, j + 1)] + (is_del_[i] ? 0 : 1));
        }
        full_[k] = f;
        plain_[k] = g;
      }
    }
    if (virtual_) limits_.ctx->clock.ChargeCells(static_cast<std::int64_t>(cells));
  }

  // A chain attaining table[1][1], smallest pairs first.
  std::vector<Match> TraceTable(const std::vector<int>& table) const {
    const bool weighted = &table == &plain_;
    std::vector<Match> chain;
    int i = 1;
    int j = 1;
    while (i <= n_ && j <= m_ && table[Idx(i, j)] > 0) {
      const int here = table[Idx(i, j)];
      const int gain = weighted ? (is_del_[i] ? 0 : 1) : 1;
      if (in_pool_[Idx(i, j)] && table[Idx(i + 1, j + 1)] + gain == here) {
        chain.push_back({i, j});
        ++i;
        ++j;
      } else if (table[Idx(i, j + 1)] == here) {
        ++j;
      } else {
        ++i;
      }
    }
    return chain;
  }

  static int TotalSlack(const std::array<int, 256>& slack) {
    int total = 0;
    for (int v : slack) total += v;
    return total;
  }

  int ChainValue(const std::vector<Match>& chain) const {
    std::array<int, 256> left = slack_;
    int value = base_;
    for (const Match& p : chain) {
      if (!is_del_[p.i]) {
        ++value;
      } else {
        int& r = left[static_cast<Symbol>(inst_.a[p.i - 1])];
        if (r > 0) {
          --r;
          ++value;
        }
      }
    }
    return value;
  }

  // Pairs on deletion positions whose symbol has no slack left add nothing;
  // without them the position is deleted instead, at equal value.
  std::vector<Match> DropIdlePairs(const std::vector<Match>& chain) const {
    std::array<int, 256> left = slack_;
    std::vector<Match> kept;
    kept.reserve(chain.size());
    for (const Match& p : chain) {
      if (is_del_[p.i]) {
        int& r = left[static_cast<Symbol>(inst_.a[p.i - 1])];
        if (r == 0) continue;
        --r;
      }
      kept.push_back(p);
    }
    return kept;
  }

  void Offer(int value, const std::vector<Match>& chain) {
    if (value <= best_value_) return;
    best_value_ = value;
    best_chain_ = chain;
    if (limits_.ctx != nullptr) limits_.ctx->Improved(value);
  }

  bool CutoffHit() const {
    return limits_.cutoff.has_value() && best_value_ > *limits_.cutoff;
  }

  bool ShouldStop() {
    if (stopped_) return true;
    if (nodes_ >= node_limit_) return stopped_ = true;
    if ((nodes_ & 255) == 0) {
      if (limits_.stop.stop_requested()) return stopped_ = true;
      if (!virtual_ && Elapsed() >= limits_.time_limit) return stopped_ = true;
    }
    return false;
  }

  std::string MemoKey(int i, int j) const {
    std::string key(8 + 2 * remaining_.size(), '\0');
    std::memcpy(key.data(), &i, 4);
    std::memcpy(key.data() + 4, &j, 4);
    for (std::size_t t = 0; t < remaining_.size(); ++t) {
      const auto r = static_cast<std::uint16_t>(remaining_[t]);
      std::memcpy(key.data() + 8 + 2 * t, &r, 2);
    }
    return key;
  }

  struct Child {
    int i;
    int j;
    int bound;
    bool consumes_slack;
  };

  void Dfs(int li, int lj, int value, int total_remaining) {
    ++nodes_;
    if (value > best_value_) {
      Offer(value, chain_);
      if (CutoffHit()) return;
    }
    if (ShouldStop()) return;

    // Pareto-minimal successors of (li, lj).
    std::vector<Child> children;
    int min_j = m_ + 1;
    for (int r = li + 1; r <= n_ && min_j > lj + 1; ++r) {
      const std::span<const int> cols = pool_.match_b().by_a(r);
      const auto it = std::upper_bound(cols.begin(), cols.end(), lj);
      if (it == cols.end() || *it >= min_j) continue;
      min_j = *it;
      Child c{r, *it, 0, false};
      int gain = 1;
      int rem = total_remaining;
      if (is_del_[r]) {
        const int t = tracked_index_[static_cast<Symbol>(inst_.a[r - 1])];
        if (t >= 0 && remaining_[t] > 0) {
          c.consumes_slack = true;
          --rem;
        } else {
          gain = 0;
        }
      }
      const std::size_t k = Idx(r + 1, c.j + 1);
      c.bound = value + gain + std::min(full_[k], plain_[k] + rem);
      children.push_back(c);
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& x, const Child& y) { return x.bound > y.bound; });

    for (const Child& c : children) {
      if (c.bound <= best_value_) break;
      const bool del = is_del_[c.i] != 0;
      const int gain = del ? (c.consumes_slack ? 1 : 0) : 1;
      int t = -1;
      if (c.consumes_slack) {
        t = tracked_index_[static_cast<Symbol>(inst_.a[c.i - 1])];
        --remaining_[t];
      }
      const int child_value = value + gain;
      bool expand = true;
      std::string key = MemoKey(c.i, c.j);
      auto found = memo_.find(key);
      if (found != memo_.end()) {
        if (found->second >= child_value) {
          expand = false;
        } else {
          found->second = child_value;
        }
      } else if (memo_.size() < kMemoCapacity) {
        memo_.emplace(std::move(key), child_value);
      }
      if (expand) {
        chain_.push_back({c.i, c.j});
        Dfs(c.i, c.j, child_value, total_remaining - (c.consumes_slack ? 1 : 0));
        chain_.pop_back();
      }
      if (t >= 0) ++remaining_[t];
      if (stopped_ || CutoffHit()) return;
    }
  }

  static constexpr std::size_t kMemoCapacity = 4'000'000;

  const Instance& inst_;
  const ComponentPool& pool_;
  const SolveLimits& limits_;
  const int n_;
  const int m_;
  const int w_;
  std::chrono::steady_clock::time_point start_;
  bool virtual_ = false;
  std::int64_t node_limit_ = 0;

  std::vector<char> is_del_;
  int base_ = 0;
  std::array<int, 256> slack_{};
  std::array<int, 256> tracked_index_{};
  std::vector<int> tracked_;
  std::vector<int> full_;
  std::vector<int> plain_;
  std::vector<char> in_pool_;

  std::vector<int> remaining_;
  std::vector<Match> chain_;
  std::unordered_map<std::string, int> memo_;

  int best_value_ = -1;
  std::vector<Match> best_chain_;
  std::int64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

SolverOutcome ChainBranchAndBound::Solve(const Instance& inst, const ComponentPool& pool,
                                         const SolveLimits& limits) const {
  if (pool.empty()) return {};
  return ChainSearch(inst, pool, limits).Run();
}

std::unique_ptr<SubproblemSolver> MakeSubproblemSolver(const std::string& name) {
  if (name.empty() || name == "bnb") return std::make_unique<ChainBranchAndBound>();
  return nullptr;
}

SolverOutcome solve_restricted(const Instance& inst, const ComponentPool& pool,
                               const SolveLimits& limits) {
  return ChainBranchAndBound().Solve(inst, pool, limits);
}

SolverOutcome solve_full_ilp(const Instance& inst, const SolveLimits& limits) {
  return solve_restricted(inst, full_pool(inst), limits);
}

namespace {

constexpr int kBruteForceMaxN = 20;

}  // namespace

Solution brute_force_solve(const Instance& inst) {
  if (inst.n() > kBruteForceMaxN) {
    throw InstanceTooLarge("brute force limited to n <= " + std::to_string(kBruteForceMaxN));
  }
  std::vector<int> eligible;
  for (int p = 1; p <= inst.n(); ++p) {
    if (inst.fill.count(static_cast<Symbol>(inst.a[p - 1])) > 0) eligible.push_back(p);
  }
  std::array<int, 256> used{};
  std::vector<int> current;
  std::vector<int> best;
  int best_obj = -1;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == eligible.size()) {
      const int obj = objective(inst, current);
      if (obj > best_obj) {
        best_obj = obj;
        best = current;
      }
      return;
    }
    visit(k + 1);
    const int p = eligible[k];
    const Symbol s = static_cast<Symbol>(inst.a[p - 1]);
    if (used[s] < inst.fill.count(s)) {
      ++used[s];
      current.push_back(p);
      visit(k + 1);
      current.pop_back();
      --used[s];
    }
  };
  visit(0);
  return MakeSolution(inst, std::move(best));
}

int brute_force_oracle(const Instance& inst) { return brute_force_solve(inst).obj; }

LpModelStats WriteLpModel(std::ostream& out, const Instance& inst,
                          const ComponentPool& pool) {
  LpModelStats stats;
  const auto& pairs = pool.match_b().pairs();
  auto x = [](const Match& p) { return "x_" + std::to_string(p.i) + "_" + std::to_string(p.j); };
  auto y = [](int i) { return "y_" + std::to_string(i); };

  out << "\\ restricted LFCS model\nMaximize\n obj:";
  bool first = true;
  for (int i : pool.match_am()) {
    out << (first ? " " : " + ") << y(i);
    first = false;
  }
  for (const Match& p : pairs) {
    out << (first ? " " : " + ") << x(p);
    first = false;
  }
  if (first) out << " 0";
  out << "\nSubject To\n";

  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (!in_conflict(pairs[a], pairs[b])) continue;
      out << " c" << ++stats.conflict_rows << ": " << x(pairs[a]) << " + " << x(pairs[b])
          << " <= 1\n";
    }
  }
  for (int j = 1; j <= inst.len_b(); ++j) {
    const auto rows = pool.match_b().by_b(j);
    if (rows.empty()) continue;
    out << " col" << j << ":";
    for (std::size_t t = 0; t < rows.size(); ++t) {
      out << (t == 0 ? " " : " + ") << x({rows[t], j});
    }
    out << " <= 1\n";
    ++stats.column_rows;
  }
  for (int i : pool.match_am()) {
    out << " row" << i << ": " << y(i);
    for (int j : pool.match_b().by_a(i)) out << " + " << x({i, j});
    out << " <= 1\n";
    ++stats.row_rows;
  }
  for (int c = 0; c < 256; ++c) {
    if (pool.a_count(static_cast<Symbol>(c)) == 0) continue;
    out << " budget" << c << ":";
    bool lead = true;
    for (int i : pool.match_am()) {
      if (static_cast<Symbol>(inst.a[i - 1]) != c) continue;
      out << (lead ? " " : " + ") << y(i);
      lead = false;
    }
    out << " <= " << inst.fill.count(static_cast<Symbol>(c)) << "\n";
    ++stats.budget_rows;
  }
  out << "Binary\n";
  for (int i : pool.match_am()) out << " " << y(i) << "\n";
  for (const Match& p : pairs) out << " " << x(p) << "\n";
  out << "End\n";
  stats.x_vars = static_cast<std::int64_t>(pairs.size());
  stats.y_vars = static_cast<std::int64_t>(pool.match_am().size());
  return stats;
}

}  // namespace lfcs
