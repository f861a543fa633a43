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

#ifndef LFCS_INSTANCE_HPP_
#define LFCS_INSTANCE_HPP_

#include <array>
#include <compare>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfcs {

using Symbol = unsigned char;

// A matching between position i of A and position j of B (both 1-based).
struct Match {
  int i = 0;
  int j = 0;
  auto operator<=>(const Match&) const = default;
};

// Two distinct matchings conflict when they cannot both appear in one common
// subsequence, i.e. they share a coordinate or cross.
constexpr bool in_conflict(Match p, Match q) {
  if (p == q) return false;
  return (p.i <= q.i && p.j >= q.j) || (p.i >= q.i && p.j <= q.j);
}

// Multiset of symbols, stored as per-symbol counts.
class Multiset {
 public:
  Multiset() = default;
  static Multiset FromSequence(std::string_view symbols);

  int count(Symbol s) const { return counts_[s]; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void Add(Symbol s, int times = 1);
  // Removes one occurrence; returns false if none is left.
  bool Remove(Symbol s);

  // Canonical rendering: symbols in ascending byte order, each repeated by
  // its count.
  std::string ToSequence() const;

  const std::array<int, 256>& counts() const { return counts_; }

  bool operator==(const Multiset&) const = default;

 private:
  std::array<int, 256> counts_{};
  int size_ = 0;
};

// An LFCSP instance (A, B, M).
struct Instance {
  std::string name;
  std::string a;
  std::string b;
  Multiset fill;

  int n() const { return static_cast<int>(a.size()); }
  int len_b() const { return static_cast<int>(b.size()); }
  int k() const { return fill.size(); }
  // Symbols present in A, B or M, ascending.
  std::vector<Symbol> Alphabet() const;
  int sigma() const { return static_cast<int>(Alphabet().size()); }
};

// A solution in the deletion view: positions of A matched against M
// (sorted, 1-based) and a matching chain between the residual string and B,
// in original A coordinates. obj is cached.
struct Solution {
  std::vector<int> deleted;
  std::vector<Match> chain;
  int obj = 0;

  int r() const { return static_cast<int>(deleted.size()); }
};

struct Evaluation {
  int obj = 0;
  std::vector<Match> chain;
};

// r + LCS(A', B) for A' = A without `deleted`, together with the chain
// realising the LCS. Throws BudgetViolation / IndexOutOfRange.
Evaluation evaluate(const Instance& inst, std::span<const int> deleted);

// Same value as evaluate(...).obj without the traceback; O(|B|) memory.
int objective(const Instance& inst, std::span<const int> deleted);

// Builds a Solution whose chain and obj come from evaluate.
Solution MakeSolution(const Instance& inst, std::vector<int> deleted);

enum class CheckMode {
  // obj must equal evaluate's value for the deletion set.
  kStrict,
  // obj must equal r + |chain|; the chain need not be optimal.
  kStructural,
};

struct CheckResult {
  bool ok = true;
  std::vector<std::string> problems;
  explicit operator bool() const { return ok; }
};

CheckResult check_solution(const Instance& inst, const Solution& s,
                           CheckMode mode = CheckMode::kStrict);

// Text format: A, B and the multiset M on three newline-terminated lines.
Instance ReadInstance(std::istream& in, std::string name = "");
Instance ReadInstanceFile(const std::filesystem::path& path);
void WriteInstance(std::ostream& out, const Instance& inst);
void WriteInstanceFile(const std::filesystem::path& path, const Instance& inst);

// Renders a solution witness: "del: p1 p2 ..." and "chain: (i,j) ...".
std::string FormatSolution(const Solution& s);

}  // namespace lfcs

#endif  // LFCS_INSTANCE_HPP_
