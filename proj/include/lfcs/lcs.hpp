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

#ifndef LFCS_LCS_HPP_
#define LFCS_LCS_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "lfcs/instance.hpp"

namespace lfcs {

struct ChainResult {
  int length = 0;
  // Strictly increasing in both coordinates, 1-based.
  std::vector<Match> chain;
};

// LCS of x and y with a witness chain. Among all optimal chains the one that
// is lexicographically smallest in (i, j) order is returned.
ChainResult lcs(std::string_view x, std::string_view y);

// Length only, two rolling rows.
int lcs_length(std::string_view x, std::string_view y);

// A deduplicated set of matchings together with its row/column projections:
// by_a(i) lists the B-positions matched to A-position i, by_b(j) the
// A-positions matched to B-position j.
class MatchSet {
 public:
  MatchSet() = default;
  // Pairs may arrive unsorted and with duplicates. n and m bound the
  // coordinates (pairs must satisfy 1 <= i <= n, 1 <= j <= m).
  MatchSet(std::vector<Match> pairs, int n, int m);

  const std::vector<Match>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  int n() const { return n_; }
  int m() const { return m_; }

  std::span<const int> by_a(int i) const;
  std::span<const int> by_b(int j) const;
  bool contains(Match p) const;

 private:
  std::vector<Match> pairs_;  // sorted by (i, j)
  int n_ = 0;
  int m_ = 0;
  std::vector<int> row_start_;
  std::vector<int> col_start_;
  std::vector<int> col_rows_;
  std::vector<int> row_cols_;
};

// Every (i, j) with a[i] == b[j].
MatchSet all_matchings(std::string_view a, std::string_view b);

// Maximum chain of pairwise non-conflicting matchings from pool, skipping
// pairs whose A-position is listed in forbidden_a. O(P log P).
ChainResult longest_chain(const MatchSet& pool,
                          std::span<const int> forbidden_a = {});

}  // namespace lfcs

#endif  // LFCS_LCS_HPP_
