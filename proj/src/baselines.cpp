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

#include "lfcs/baselines.hpp"

#include <algorithm>
#include <array>

#include "lfcs/errors.hpp"
#include "lfcs/lcs.hpp"

namespace lfcs {

namespace {

std::int64_t Cells(const Instance& inst) {
  return static_cast<std::int64_t>(inst.n() + 1) * (inst.len_b() + 1);
}

}  // namespace

std::vector<int> greedy_match(std::string_view a_prime, const Multiset& m) {
  Multiset available = m;
  std::vector<int> taken;
  for (std::size_t i = 0; i < a_prime.size(); ++i) {
    if (available.Remove(static_cast<Symbol>(a_prime[i]))) {
      taken.push_back(static_cast<int>(i) + 1);
    }
  }
  return taken;
}

Solution approx_solve(const Instance& inst, SearchContext* ctx) {
  const ChainResult base = lcs(inst.a, inst.b);
  std::vector<char> in_lcs(inst.n() + 1, 0);
  for (const Match& p : base.chain) in_lcs[p.i] = 1;

  std::string rest;
  std::vector<int> origin;
  for (int p = 1; p <= inst.n(); ++p) {
    if (in_lcs[p]) continue;
    rest.push_back(inst.a[p - 1]);
    origin.push_back(p);
  }
  std::vector<int> deleted;
  for (int q : greedy_match(rest, inst.fill)) deleted.push_back(origin[q - 1]);

  Solution s = MakeSolution(inst, std::move(deleted));
  if (ctx != nullptr) {
    ctx->clock.ChargeCells(2 * Cells(inst));
    ctx->Improved(s.obj);
  }
  return s;
}

std::vector<int> rand_sample_deletions(const Instance& inst, Rng& rng) {
  std::array<std::vector<int>, 256> by_symbol;
  for (int p = 1; p <= inst.n(); ++p) {
    by_symbol[static_cast<Symbol>(inst.a[p - 1])].push_back(p);
  }
  std::vector<int> deleted;
  for (int c = 0; c < 256; ++c) {
    std::vector<int>& pos = by_symbol[c];
    const int take =
        std::min<int>(static_cast<int>(pos.size()), inst.fill.count(static_cast<Symbol>(c)));
    if (take == 0) continue;
    // Partial Fisher-Yates: the first `take` entries become a uniform sample.
    for (int t = 0; t < take; ++t) {
      std::uniform_int_distribution<int> pick(t, static_cast<int>(pos.size()) - 1);
      std::swap(pos[t], pos[pick(rng)]);
    }
    deleted.insert(deleted.end(), pos.begin(), pos.begin() + take);
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

Solution rand_sample_construct(const Instance& inst, Rng& rng) {
  return MakeSolution(inst, rand_sample_deletions(inst, rng));
}

Solution rand_sample_construct(const Instance& inst, std::uint64_t seed) {
  Rng rng(seed);
  return rand_sample_construct(inst, rng);
}

Solution rand_sample_solve(const Instance& inst, const RandSampleConfig& cfg,
                           SearchContext* ctx) {
  if (cfg.n_rand < 1) throw ConfigInvalid("n_rand must be positive");
  Rng rng(cfg.seed);
  std::vector<int> best;
  int best_obj = -1;
  for (int t = 0; t < cfg.n_rand; ++t) {
    std::vector<int> deleted = rand_sample_deletions(inst, rng);
    const int obj = objective(inst, deleted);
    if (ctx != nullptr) ctx->clock.ChargeCells(Cells(inst));
    if (obj > best_obj) {
      best_obj = obj;
      best = std::move(deleted);
      if (ctx != nullptr) ctx->Improved(obj);
    }
  }
  return MakeSolution(inst, std::move(best));
}

Solution local_search_solve(const Instance& inst, const LocalSearchConfig& cfg,
                            const Solution& start, SearchContext* ctx,
                            LocalSearchStats* stats) {
  const int n = inst.n();
  if (cfg.k < 1) throw ConfigInvalid("window width k must be at least 1");
  if (n == 0) return start;
  const int k = std::min(cfg.k, n);

  std::vector<char> flag(n + 1, 0);
  std::array<int, 256> used{};
  for (int p : start.deleted) {
    flag[p] = 1;
    ++used[static_cast<Symbol>(inst.a[p - 1])];
  }
  int best = objective(inst, start.deleted);
  if (ctx != nullptr) ctx->Improved(best);

  std::vector<int> candidate;
  LocalSearchStats local;
  bool improved = true;
  while (improved) {
    improved = false;
    std::int64_t evaluated = 0;
    for (int w = 1; w + k - 1 <= n; ++w) {
      for (unsigned pattern = 0; pattern < (1u << k); ++pattern) {
        // Budget check against the incumbent with the window replaced.
        std::array<int, 256> trial = used;
        bool same = true;
        for (int b = 0; b < k; ++b) {
          const int p = w + b;
          const int want = (pattern >> b) & 1u;
          if (want != flag[p]) {
            same = false;
            trial[static_cast<Symbol>(inst.a[p - 1])] += want ? 1 : -1;
          }
        }
        if (same) continue;
        bool feasible = true;
        for (int b = 0; b < k && feasible; ++b) {
          const Symbol s = static_cast<Symbol>(inst.a[w + b - 1]);
          feasible = trial[s] <= inst.fill.count(s);
        }
        if (!feasible) continue;

        candidate.clear();
        for (int p = 1; p <= n; ++p) {
          const bool del = (p >= w && p < w + k) ? ((pattern >> (p - w)) & 1u) : flag[p];
          if (del) candidate.push_back(p);
        }
        const int obj = objective(inst, candidate);
        ++evaluated;
        if (ctx != nullptr) ctx->clock.ChargeCells(Cells(inst));
        if (obj > best) {
          best = obj;
          improved = true;
          used = trial;
          for (int b = 0; b < k; ++b) flag[w + b] = (pattern >> b) & 1u;
          if (ctx != nullptr) ctx->Improved(obj);
        }
      }
    }
    local.candidates += evaluated;
    local.candidates_per_sweep.push_back(evaluated);
    ++local.sweeps;
  }
  if (stats != nullptr) *stats = std::move(local);

  std::vector<int> deleted;
  for (int p = 1; p <= n; ++p)
    if (flag[p]) deleted.push_back(p);
  return MakeSolution(inst, std::move(deleted));
}

Solution local_search_solve(const Instance& inst, const LocalSearchConfig& cfg,
                            SearchContext* ctx) {
  return local_search_solve(inst, cfg, MakeSolution(inst, {}), ctx);
}

}  // namespace lfcs
