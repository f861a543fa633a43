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

#include "lfcs/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lfcs/errors.hpp"
#include "lfcs/lcs.hpp"

namespace lfcs {

Multiset Multiset::FromSequence(std::string_view symbols) {
  Multiset m;
  for (char c : symbols) m.Add(static_cast<Symbol>(c));
  return m;
}

void Multiset::Add(Symbol s, int times) {
  counts_[s] += times;
  size_ += times;
}

bool Multiset::Remove(Symbol s) {
  if (counts_[s] == 0) return false;
  --counts_[s];
  --size_;
  return true;
}

std::string Multiset::ToSequence() const {
  std::string out;
  out.reserve(size_);
  for (int s = 0; s < 256; ++s) out.append(counts_[s], static_cast<char>(s));
  return out;
}

std::vector<Symbol> Instance::Alphabet() const {
  std::array<bool, 256> seen{};
  for (char c : a) seen[static_cast<Symbol>(c)] = true;
  for (char c : b) seen[static_cast<Symbol>(c)] = true;
  for (int s = 0; s < 256; ++s)
    if (fill.count(static_cast<Symbol>(s)) > 0) seen[s] = true;
  std::vector<Symbol> out;
  for (int s = 0; s < 256; ++s)
    if (seen[s]) out.push_back(static_cast<Symbol>(s));
  return out;
}

namespace {

// Validates the deletion set and returns the residual string together with
// the original (1-based) A-position of each residual symbol.
std::string Residual(const Instance& inst, std::span<const int> deleted,
                     std::vector<int>* origin) {
  const int n = inst.n();
  std::vector<char> removed(n + 1, 0);
  std::array<int, 256> used{};
  for (int p : deleted) {
    if (p < 1 || p > n) {
      throw IndexOutOfRange("deletion position " + std::to_string(p) +
                            " outside 1.." + std::to_string(n));
    }
    if (removed[p]) {
      throw IndexOutOfRange("deletion position " + std::to_string(p) +
                            " listed twice");
    }
    removed[p] = 1;
    const Symbol s = static_cast<Symbol>(inst.a[p - 1]);
    if (++used[s] > inst.fill.count(s)) {
      throw BudgetViolation("symbol '" + std::string(1, static_cast<char>(s)) +
                            "' deleted more often than M allows");
    }
  }
  std::string residual;
  residual.reserve(n - deleted.size());
  if (origin != nullptr) origin->clear();
  for (int p = 1; p <= n; ++p) {
    if (removed[p]) continue;
    residual.push_back(inst.a[p - 1]);
    if (origin != nullptr) origin->push_back(p);
  }
  return residual;
}

}  // namespace

Evaluation evaluate(const Instance& inst, std::span<const int> deleted) {
  std::vector<int> origin;
  const std::string residual = Residual(inst, deleted, &origin);
  ChainResult res = lcs(residual, inst.b);
  for (Match& p : res.chain) p.i = origin[p.i - 1];
  return {static_cast<int>(deleted.size()) + res.length, std::move(res.chain)};
}

int objective(const Instance& inst, std::span<const int> deleted) {
  const std::string residual = Residual(inst, deleted, nullptr);
  return static_cast<int>(deleted.size()) + lcs_length(residual, inst.b);
}

Solution MakeSolution(const Instance& inst, std::vector<int> deleted) {
  std::sort(deleted.begin(), deleted.end());
  Evaluation ev = evaluate(inst, deleted);
  Solution s;
  s.deleted = std::move(deleted);
  s.chain = std::move(ev.chain);
  s.obj = ev.obj;
  return s;
}

CheckResult check_solution(const Instance& inst, const Solution& s,
                           CheckMode mode) {
  CheckResult result;
  auto fail = [&result](std::string msg) {
    result.ok = false;
    result.problems.push_back(std::move(msg));
  };
  const int n = inst.n();
  const int m = inst.len_b();

  std::vector<char> is_deleted(n + 1, 0);
  std::array<int, 256> used{};
  bool positions_valid = true;
  for (std::size_t k = 0; k < s.deleted.size(); ++k) {
    const int p = s.deleted[k];
    if (p < 1 || p > n) {
      fail("deletion position " + std::to_string(p) + " out of range");
      positions_valid = false;
      continue;
    }
    if (k > 0 && s.deleted[k - 1] >= p) fail("deletion positions not strictly ascending");
    if (is_deleted[p]) fail("deletion position " + std::to_string(p) + " repeated");
    is_deleted[p] = 1;
    ++used[static_cast<Symbol>(inst.a[p - 1])];
  }
  for (int c = 0; c < 256; ++c) {
    if (used[c] > inst.fill.count(static_cast<Symbol>(c))) {
      fail("budget of symbol '" + std::string(1, static_cast<char>(c)) +
           "' exceeded");
    }
  }

  for (std::size_t k = 0; k < s.chain.size(); ++k) {
    const Match p = s.chain[k];
    if (p.i < 1 || p.i > n || p.j < 1 || p.j > m) {
      fail("chain pair out of range");
      positions_valid = false;
      continue;
    }
    if (inst.a[p.i - 1] != inst.b[p.j - 1]) fail("chain pair joins different symbols");
    if (is_deleted[p.i]) {
      fail("A-position " + std::to_string(p.i) + " both deleted and matched");
    }
    if (k > 0 && (s.chain[k - 1].i >= p.i || s.chain[k - 1].j >= p.j)) {
      fail("chain not strictly increasing");
    }
  }

  if (s.obj != s.r() + static_cast<int>(s.chain.size())) {
    fail("obj differs from r + |chain|");
  }
  if (mode == CheckMode::kStrict && result.ok && positions_valid) {
    const int expected = objective(inst, s.deleted);
    if (expected != s.obj) {
      fail("obj " + std::to_string(s.obj) + " differs from evaluated " +
           std::to_string(expected));
    }
  }
  return result;
}

Instance ReadInstance(std::istream& in, std::string name) {
  Instance inst;
  inst.name = std::move(name);
  std::string lines[3];
  for (int k = 0; k < 3; ++k) {
    if (!std::getline(in, lines[k])) {
      throw ParseError("instance text needs three lines, got " + std::to_string(k));
    }
    for (char c : lines[k]) {
      if (c == '\r' || c == ' ' || c == '\t') {
        throw ParseError("whitespace inside instance line " + std::to_string(k + 1));
      }
    }
  }
  inst.a = std::move(lines[0]);
  inst.b = std::move(lines[1]);
  inst.fill = Multiset::FromSequence(lines[2]);
  return inst;
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadInstance(in, path.stem().string());
}

void WriteInstance(std::ostream& out, const Instance& inst) {
  out << inst.a << '\n' << inst.b << '\n' << inst.fill.ToSequence() << '\n';
}

void WriteInstanceFile(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  WriteInstance(out, inst);
  if (!out) throw IoError("write failed for " + path.string());
}

std::string FormatSolution(const Solution& s) {
  std::ostringstream os;
  os << "del:";
  for (int p : s.deleted) os << ' ' << p;
  os << "\nchain:";
  for (const Match& p : s.chain) os << " (" << p.i << ',' << p.j << ')';
  os << '\n';
  return os.str();
}

}  // namespace lfcs
