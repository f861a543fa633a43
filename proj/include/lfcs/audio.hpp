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

#ifndef LFCS_AUDIO_HPP_
#define LFCS_AUDIO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfcs/algorithms.hpp"
#include "lfcs/instance.hpp"

namespace lfcs {

// Per-second loudness of a song as symbols '0'..'9'.
struct EnergyProfile {
  std::string name;
  std::string symbols;

  int length() const { return static_cast<int>(symbols.size()); }
};

struct AudioQuery {
  std::string b;
  Multiset m;
  double rem = 0.0;
  std::string reference_name;
};

// Decoded PCM, channels averaged, samples scaled to [-1, 1].
struct PcmAudio {
  int sample_rate = 0;
  int channels = 0;
  int bits_per_sample = 0;
  std::vector<double> mono;
};

// RIFF/WAVE with 8/16/24/32-bit integer PCM or 32-bit float samples,
// including WAVE_FORMAT_EXTENSIBLE. Throws MalformedWav / UnsupportedEncoding.
PcmAudio DecodeWav(std::span<const std::uint8_t> bytes);

// 16-bit PCM mono encoder for fixtures and tools.
std::vector<std::uint8_t> EncodeWav16(std::span<const double> samples, int sample_rate);

// RMS of every complete one-second window, binned against the loudest
// window: symbol = min(9, floor(10 * rms / max_rms)). A silent song maps to
// all '0'. The trailing partial second is dropped.
EnergyProfile profile_from_pcm(const PcmAudio& audio, std::string name);
EnergyProfile profile_from_wav(std::span<const std::uint8_t> wav_bytes, std::string name);
EnergyProfile profile_from_wav_file(const std::filesystem::path& path);

// Per symbol, the minimum count over all profiles.
Multiset common_histogram(std::span<const EnergyProfile> profiles);

Multiset Histogram(std::string_view symbols);

// Removes m from the reference at seeded random positions, then
// floor(rem * |B0|) further random positions. For one seed the removals for
// a larger rem are a superset of those for a smaller rem.
AudioQuery build_query(const EnergyProfile& reference, const Multiset& m, double rem,
                       std::uint64_t seed);

struct IdentifyOptions {
  Algorithm algo = Algorithm::kCmsa;
  double budget = 10.0;  // seconds per candidate
  std::uint64_t seed = 1;
  // Keep only the prefilter_k candidates whose histogram is closest (L1) to
  // the query's B plus M; 0 keeps all.
  int prefilter_k = 0;
  int workers = 1;
};

struct Ranked {
  std::string name;
  int score = 0;
  double time_s = 0.0;
};

// Scores every candidate by its LFCS value against the query and ranks by
// score descending, ties by name.
std::vector<Ranked> identify(std::span<const EnergyProfile> db, const AudioQuery& query,
                             const IdentifyOptions& options);

// Profile files: line 1 the name, line 2 the symbols.
void WriteProfile(std::ostream& out, const EnergyProfile& profile);
void WriteProfileFile(const std::filesystem::path& path, const EnergyProfile& profile);
EnergyProfile ReadProfileFile(const std::filesystem::path& path);
// Every regular file in dir, ordered by file name.
std::vector<EnergyProfile> ReadProfileDb(const std::filesystem::path& dir);

// rank,name,score,time_s,algo
void WriteIdentifyReport(std::ostream& out, const std::vector<Ranked>& ranking,
                         Algorithm algo);

}  // namespace lfcs

#endif  // LFCS_AUDIO_HPP_
