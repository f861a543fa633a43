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

#ifndef LFCS_BASELINES_HPP_
#define LFCS_BASELINES_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "lfcs/clock.hpp"
#include "lfcs/instance.hpp"

namespace lfcs {

using Rng = std::mt19937_64;

struct RandSampleConfig {
  int n_rand = 10000;
  std::uint64_t seed = 1;
};

struct LocalSearchConfig {
  int k = 2;
};

// Left-to-right scan of a_prime taking every position whose symbol is still
// available in a running copy of m. Returns 1-based positions of a_prime.
std::vector<int> greedy_match(std::string_view a_prime, const Multiset& m);

// LCS of A and B first, then greedy_match on what is left of A.
Solution approx_solve(const Instance& inst, SearchContext* ctx = nullptr);

// For each symbol, deletes min(count in A, count in M) of its A-positions
// chosen uniformly without replacement.
std::vector<int> rand_sample_deletions(const Instance& inst, Rng& rng);
Solution rand_sample_construct(const Instance& inst, Rng& rng);
Solution rand_sample_construct(const Instance& inst, std::uint64_t seed);

// Best of cfg.n_rand constructions drawn from one RNG stream seeded with
// cfg.seed; the first of equally good samples is kept.
Solution rand_sample_solve(const Instance& inst, const RandSampleConfig& cfg,
                           SearchContext* ctx = nullptr);

struct LocalSearchStats {
  std::int64_t candidates = 0;
  int sweeps = 0;
  std::vector<std::int64_t> candidates_per_sweep;
};

// Windowed hill climber: for every window of k consecutive A-positions, all
// 2^k deletion patterns of the window are tried on top of the incumbent and
// the first improvement is accepted. Sweeps repeat until one full sweep
// brings no improvement.
Solution local_search_solve(const Instance& inst, const LocalSearchConfig& cfg,
                            const Solution& start, SearchContext* ctx = nullptr,
                            LocalSearchStats* stats = nullptr);

// Local search from the solution with no deletions.
Solution local_search_solve(const Instance& inst, const LocalSearchConfig& cfg,
                            SearchContext* ctx = nullptr);

}  // namespace lfcs

#endif  // LFCS_BASELINES_HPP_
