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

#ifndef LFCS_GENERATOR_HPP_
#define LFCS_GENERATOR_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lfcs/instance.hpp"

namespace lfcs {

struct GeneratorConfig {
  int n = 16;
  int sigma_size = 4;
  std::uint64_t seed = 1;
  double discard_fraction = 0.3;

  void Validate() const;  // throws ConfigInvalid
};

// Intermediate products of one generation, kept for inspection.
struct GenerationTrace {
  Instance instance;
  std::string b_mod;
  // Segment boundaries of b_mod as [begin, end) offsets, in order.
  std::vector<std::pair<int, int>> segments;
  std::vector<int> discarded;  // indices into segments, ascending
};

// Symbol used for alphabet index k: 'A'..'Z', then 'a'..'z', '0'..'9' and
// printable punctuation.
char AlphabetSymbol(int k);
int MaxAlphabetSize();

// A is uniform over the alphabet; every symbol of A is, with probability
// 1/2, duplicated, deleted or substituted to give b_mod; b_mod is cut into
// segments of length 1..floor(n/8); ceil(discard_fraction * #segments)
// random segments go to M and the rest, concatenated, form B.
GenerationTrace generate_with_trace(const GeneratorConfig& cfg);
Instance generate_instance(const GeneratorConfig& cfg);

enum class BenchmarkSet { kSmall, kLarge };

BenchmarkSet ParseBenchmarkSet(const std::string& name);  // throws ConfigInvalid
const char* ToString(BenchmarkSet set);

struct BenchmarkGroup {
  int n = 0;
  int sigma = 0;
  int instances = 0;
};

std::vector<BenchmarkGroup> BenchmarkGroups(BenchmarkSet set);

struct ManifestRow {
  std::string group;
  int n = 0;
  int sigma = 0;
  int index = 0;
  std::uint64_t seed = 0;
  std::string path;
};

// Seed of one instance, derived from the master seed, group and index.
std::uint64_t DeriveSeed(std::uint64_t master_seed, int n, int sigma, int index);

std::string InstanceFileName(BenchmarkSet set, int n, int sigma, int index);

// Writes every instance of the set plus manifest.csv into out_dir.
std::vector<ManifestRow> generate_benchmark(BenchmarkSet set,
                                            const std::filesystem::path& out_dir,
                                            std::uint64_t master_seed);

void WriteManifest(std::ostream& out, const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> ReadManifest(const std::filesystem::path& path);

}  // namespace lfcs

#endif  // LFCS_GENERATOR_HPP_
