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

// Fixtures and slow reference implementations shared by the test binaries.
// Nothing here calls into the library's solvers.

#ifndef LFCS_TESTS_TEST_UTIL_HPP_
#define LFCS_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lfcs/instance.hpp"

namespace lfcs::testing {

inline Instance Example1() {
  Instance inst;
  inst.name = "ex1";
  inst.a = "EGHGBCBEGECEEHDA";
  inst.b = "EGGHHD";
  inst.fill = Multiset::FromSequence("EDBCBEGEEAG");
  return inst;
}

inline std::vector<int> Example1Deletions() { return {4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16}; }

inline Instance Make(std::string a, std::string b, std::string m) {
  Instance inst;
  inst.name = "t";
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.fill = Multiset::FromSequence(m);
  return inst;
}

// Plain quadratic LCS length.
inline int NaiveLcs(const std::string& x, const std::string& y) {
  std::vector<std::vector<int>> t(x.size() + 1, std::vector<int>(y.size() + 1, 0));
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      t[i][j] = x[i - 1] == y[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[x.size()][y.size()];
}

// Optimum by enumerating every subset of A as the deletion set.
inline int NaiveOptimum(const Instance& inst) {
  const int n = inst.n();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::array<int, 256> used{};
    bool ok = true;
    std::string rest;
    int r = 0;
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<Symbol>(inst.a[i]);
      if (mask & (1u << i)) {
        if (++used[s] > inst.fill.count(s)) {
          ok = false;
          break;
        }
        ++r;
      } else {
        rest.push_back(inst.a[i]);
      }
    }
    if (ok) best = std::max(best, r + NaiveLcs(rest, inst.b));
  }
  return best;
}

inline std::string RandomString(std::mt19937_64& rng, int len, int sigma) {
  std::uniform_int_distribution<int> d(0, sigma - 1);
  std::string s;
  for (int i = 0; i < len; ++i) s.push_back(static_cast<char>('A' + d(rng)));
  return s;
}

inline Instance RandomInstance(std::mt19937_64& rng, int n, int sigma) {
  std::uniform_int_distribution<int> lb(0, n);
  std::uniform_int_distribution<int> lm(0, n / 2 + 1);
  return Make(RandomString(rng, n, sigma), RandomString(rng, lb(rng), sigma),
              RandomString(rng, lm(rng), sigma));
}

// Seeded random walks over the digits 0..9, named song1, song2, ...
inline std::vector<std::pair<std::string, std::string>> RandomWalkProfiles(int count, int length,
                                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> start(0, 9);
  std::uniform_int_distribution<int> step(-1, 1);
  std::vector<std::pair<std::string, std::string>> out;
  for (int c = 0; c < count; ++c) {
    int level = start(rng);
    std::string s;
    for (int t = 0; t < length; ++t) {
      s.push_back(static_cast<char>('0' + level));
      level = std::clamp(level + step(rng), 0, 9);
    }
    out.emplace_back("song" + std::to_string(c + 1), s);
  }
  return out;
}

}  // namespace lfcs::testing

#endif  // LFCS_TESTS_TEST_UTIL_HPP_
