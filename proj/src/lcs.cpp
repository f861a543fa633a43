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

#include "lfcs/lcs.hpp"

#include <algorithm>
#include <cassert>

namespace lfcs {

ChainResult lcs(std::string_view x, std::string_view y) {
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  ChainResult out;
  if (n == 0 || m == 0) return out;

  // Suffix table: table[i * w + j] = LCS(x[i..], y[j..]).
  const int w = m + 1;
  std::vector<int> table(static_cast<std::size_t>(n + 1) * w, 0);
  for (int i = n - 1; i >= 0; --i) {
    int* row = &table[static_cast<std::size_t>(i) * w];
    const int* next = row + w;
    for (int j = m - 1; j >= 0; --j) {
      row[j] = x[i] == y[j] ? next[j + 1] + 1 : std::max(next[j], row[j + 1]);
    }
  }
  out.length = table[0];

  // Forward traceback: use A-position i if some optimal chain from (i, j)
  // does, pairing it with the smallest admissible j'.
  int i = 0;
  int j = 0;
  while (i < n && j < m) {
    const int target = table[static_cast<std::size_t>(i) * w + j];
    if (target == 0) break;
    const int* next = &table[static_cast<std::size_t>(i + 1) * w];
    int pick = -1;
    for (int jj = j; jj < m; ++jj) {
      if (y[jj] == x[i] && next[jj + 1] + 1 == target) {
        pick = jj;
        break;
      }
    }
    if (pick >= 0) {
      out.chain.push_back({i + 1, pick + 1});
      j = pick + 1;
    }
    ++i;
  }
  assert(static_cast<int>(out.chain.size()) == out.length);
  return out;
}

int lcs_length(std::string_view x, std::string_view y) {
  if (x.empty() || y.empty()) return 0;
  if (y.size() > x.size()) std::swap(x, y);
  const std::size_t m = y.size();
  std::vector<int> prev(m + 1, 0);
  std::vector<int> cur(m + 1, 0);
  for (char cx : x) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = cx == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

MatchSet::MatchSet(std::vector<Match> pairs, int n, int m) : n_(n), m_(m) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);

  row_start_.assign(n + 2, 0);
  col_start_.assign(m + 2, 0);
  for (const Match& p : pairs_) {
    assert(p.i >= 1 && p.i <= n && p.j >= 1 && p.j <= m);
    ++row_start_[p.i + 1];
    ++col_start_[p.j + 1];
  }
  for (int i = 1; i <= n + 1; ++i) row_start_[i] += row_start_[i - 1];
  for (int j = 1; j <= m + 1; ++j) col_start_[j] += col_start_[j - 1];

  row_cols_.resize(pairs_.size());
  col_rows_.resize(pairs_.size());
  std::vector<int> fill = col_start_;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    row_cols_[k] = pairs_[k].j;  // pairs_ is row-major already
    col_rows_[fill[pairs_[k].j]++] = pairs_[k].i;
  }
}

std::span<const int> MatchSet::by_a(int i) const {
  if (i < 1 || i > n_) return {};
  return std::span<const int>(row_cols_).subspan(
      row_start_[i], row_start_[i + 1] - row_start_[i]);
}

std::span<const int> MatchSet::by_b(int j) const {
  if (j < 1 || j > m_) return {};
  return std::span<const int>(col_rows_).subspan(
      col_start_[j], col_start_[j + 1] - col_start_[j]);
}

bool MatchSet::contains(Match p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

MatchSet all_matchings(std::string_view a, std::string_view b) {
  std::vector<Match> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == b[j]) {
        pairs.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      }
    }
  }
  return MatchSet(std::move(pairs), static_cast<int>(a.size()),
                  static_cast<int>(b.size()));
}

ChainResult longest_chain(const MatchSet& pool, std::span<const int> forbidden_a) {
  std::vector<char> forbidden(pool.n() + 2, 0);
  for (int p : forbidden_a) {
    if (p >= 1 && p <= pool.n()) forbidden[p] = 1;
  }
  // (i asc, j desc): within one row at most one pair can enter a strictly
  // increasing subsequence on j.
  std::vector<Match> order;
  order.reserve(pool.size());
  for (const Match& p : pool.pairs()) {
    if (!forbidden[p.i]) order.push_back(p);
  }
  std::sort(order.begin(), order.end(), [](Match x, Match y) {
    return x.i != y.i ? x.i < y.i : x.j > y.j;
  });

  std::vector<int> tail_j;     // smallest tail j for each length
  std::vector<int> tail_idx;   // index into order of that tail
  std::vector<int> parent(order.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int j = order[k].j;
    const auto it = std::lower_bound(tail_j.begin(), tail_j.end(), j);
    const std::size_t len = it - tail_j.begin();
    parent[k] = len > 0 ? tail_idx[len - 1] : -1;
    if (it == tail_j.end()) {
      tail_j.push_back(j);
      tail_idx.push_back(static_cast<int>(k));
    } else {
      *it = j;
      tail_idx[len] = static_cast<int>(k);
    }
  }

  ChainResult out;
  out.length = static_cast<int>(tail_j.size());
  for (int k = out.length > 0 ? tail_idx.back() : -1; k >= 0; k = parent[k]) {
    out.chain.push_back(order[k]);
  }
  std::reverse(out.chain.begin(), out.chain.end());
  return out;
}

}  // namespace lfcs
