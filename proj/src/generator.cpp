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

#include "lfcs/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "lfcs/errors.hpp"

namespace lfcs {

namespace {

constexpr std::string_view kSymbols =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
    "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

char AlphabetSymbol(int k) { return kSymbols.at(static_cast<std::size_t>(k)); }
int MaxAlphabetSize() { return static_cast<int>(kSymbols.size()); }

void GeneratorConfig::Validate() const {
  if (n < 8) throw ConfigInvalid("n must be at least 8");
  if (sigma_size < 2 || sigma_size > n) throw ConfigInvalid("need 2 <= sigma <= n");
  if (sigma_size > MaxAlphabetSize()) throw ConfigInvalid("alphabet too large");
  if (!(discard_fraction > 0.0 && discard_fraction <= 1.0)) {
    throw ConfigInvalid("discard fraction must lie in (0, 1]");
  }
}

GenerationTrace generate_with_trace(const GeneratorConfig& cfg) {
  cfg.Validate();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> symbol(0, cfg.sigma_size - 1);
  std::bernoulli_distribution modify(0.5);
  std::uniform_int_distribution<int> operation(0, 2);
  std::uniform_int_distribution<int> other(0, cfg.sigma_size - 2);

  GenerationTrace trace;
  std::string a;
  a.reserve(cfg.n);
  for (int t = 0; t < cfg.n; ++t) a.push_back(AlphabetSymbol(symbol(rng)));

  std::string& b_mod = trace.b_mod;
  for (char c : a) {
    if (!modify(rng)) {
      b_mod.push_back(c);
      continue;
    }
    switch (operation(rng)) {
      case 0:  // duplication
        b_mod.push_back(c);
        b_mod.push_back(c);
        break;
      case 1:  // deletion
        break;
      default: {  // substitution by a different symbol
        const int current = static_cast<int>(kSymbols.find(c));
        int k = other(rng);
        if (k >= current) ++k;
        b_mod.push_back(AlphabetSymbol(k));
      }
    }
  }

  const int max_len = cfg.n / 8;
  std::uniform_int_distribution<int> seg_len(1, max_len);
  const int total = static_cast<int>(b_mod.size());
  for (int pos = 0; pos < total;) {
    const int len = std::min(seg_len(rng), total - pos);
    trace.segments.emplace_back(pos, pos + len);
    pos += len;
  }

  const int count = static_cast<int>(trace.segments.size());
  const int drop = std::min(
      count, static_cast<int>(std::ceil(cfg.discard_fraction * count - 1e-9)));
  std::vector<int> order(count);
  for (int k = 0; k < count; ++k) order[k] = k;
  for (int t = 0; t < drop; ++t) {
    std::uniform_int_distribution<int> pick(t, count - 1);
    std::swap(order[t], order[pick(rng)]);
  }
  trace.discarded.assign(order.begin(), order.begin() + drop);
  std::sort(trace.discarded.begin(), trace.discarded.end());

  Instance& inst = trace.instance;
  inst.a = std::move(a);
  std::vector<char> gone(count, 0);
  for (int k : trace.discarded) gone[k] = 1;
  for (int k = 0; k < count; ++k) {
    const auto [begin, end] = trace.segments[k];
    const std::string_view piece(b_mod.data() + begin, end - begin);
    if (gone[k]) {
      for (char c : piece) inst.fill.Add(static_cast<Symbol>(c));
    } else {
      inst.b.append(piece);
    }
  }
  inst.name = "gen_n" + std::to_string(cfg.n) + "_s" + std::to_string(cfg.sigma_size) +
              "_seed" + std::to_string(cfg.seed);
  return trace;
}

Instance generate_instance(const GeneratorConfig& cfg) {
  return generate_with_trace(cfg).instance;
}

BenchmarkSet ParseBenchmarkSet(const std::string& name) {
  if (name == "small") return BenchmarkSet::kSmall;
  if (name == "large") return BenchmarkSet::kLarge;
  throw ConfigInvalid("unknown benchmark set '" + name + "'");
}

const char* ToString(BenchmarkSet set) {
  return set == BenchmarkSet::kSmall ? "small" : "large";
}

std::vector<BenchmarkGroup> BenchmarkGroups(BenchmarkSet set) {
  std::vector<BenchmarkGroup> groups;
  if (set == BenchmarkSet::kSmall) {
    for (int n : {16, 32, 48, 64, 80}) {
      for (int sigma : {n / 8, n / 4, n / 2}) groups.push_back({n, sigma, 100});
    }
  } else {
    for (int n : {200, 400, 500, 600, 800, 1000}) {
      for (int sigma : {4, 20}) groups.push_back({n, sigma, 10});
    }
  }
  return groups;
}

std::uint64_t DeriveSeed(std::uint64_t master_seed, int n, int sigma, int index) {
  std::uint64_t h = SplitMix(master_seed);
  h = SplitMix(h ^ static_cast<std::uint64_t>(n));
  h = SplitMix(h ^ static_cast<std::uint64_t>(sigma));
  return SplitMix(h ^ static_cast<std::uint64_t>(index));
}

std::string InstanceFileName(BenchmarkSet set, int n, int sigma, int index) {
  return std::string(ToString(set)) + "_n" + std::to_string(n) + "_s" +
         std::to_string(sigma) + "_i" + std::to_string(index) + ".lfcs";
}

std::vector<ManifestRow> generate_benchmark(BenchmarkSet set,
                                            const std::filesystem::path& out_dir,
                                            std::uint64_t master_seed) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<ManifestRow> rows;
  for (const BenchmarkGroup& g : BenchmarkGroups(set)) {
    for (int index = 0; index < g.instances; ++index) {
      GeneratorConfig cfg;
      cfg.n = g.n;
      cfg.sigma_size = g.sigma;
      cfg.seed = DeriveSeed(master_seed, g.n, g.sigma, index);
      Instance inst = generate_instance(cfg);
      const std::string file = InstanceFileName(set, g.n, g.sigma, index);
      WriteInstanceFile(out_dir / file, inst);
      rows.push_back({ToString(set), g.n, g.sigma, index, cfg.seed, file});
    }
  }
  std::ofstream out(out_dir / "manifest.csv", std::ios::binary);
  if (!out) throw IoError("cannot write manifest in " + out_dir.string());
  WriteManifest(out, rows);
  return rows;
}

void WriteManifest(std::ostream& out, const std::vector<ManifestRow>& rows) {
  out << "group,n,sigma,index,seed,path\n";
  for (const ManifestRow& r : rows) {
    out << r.group << ',' << r.n << ',' << r.sigma << ',' << r.index << ',' << r.seed << ','
        << r.path << '\n';
  }
}

std::vector<ManifestRow> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line != "group,n,sigma,index,seed,path") throw ParseError("bad manifest header");
  std::vector<ManifestRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    ManifestRow r;
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 6) throw ParseError("bad manifest row: " + line);
    r.group = f[0];
    r.n = std::stoi(f[1]);
    r.sigma = std::stoi(f[2]);
    r.index = std::stoi(f[3]);
    r.seed = std::stoull(f[4]);
    r.path = f[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lfcs
