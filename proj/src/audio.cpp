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

#include "lfcs/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <future>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "lfcs/errors.hpp"

namespace lfcs {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

bool Tag(const std::uint8_t* p, const char* tag) { return std::memcmp(p, tag, 4) == 0; }

double DecodeSample(const std::uint8_t* p, std::uint16_t format, int bits) {
  if (format == kFormatFloat) {
    float f;
    std::uint32_t raw = ReadU32(p);
    std::memcpy(&f, &raw, sizeof f);
    return static_cast<double>(f);
  }
  switch (bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return static_cast<std::int16_t>(ReadU16(p)) / 32768.0;
    case 24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    default:
      return static_cast<std::int32_t>(ReadU32(p)) / 2147483648.0;
  }
}

// FNV-1a, stable across platforms.
std::uint64_t HashName(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

PcmAudio DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !Tag(bytes.data(), "RIFF") || !Tag(bytes.data() + 8, "WAVE")) {
    throw MalformedWav("missing RIFF/WAVE header");
  }
  bool have_fmt = false;
  std::uint16_t format = 0;
  int channels = 0;
  int rate = 0;
  int bits = 0;
  int block_align = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (Tag(chunk, "fmt ")) {
      if (size < 16 || available < 16) throw MalformedWav("truncated fmt chunk");
      const std::uint8_t* f = chunk + 8;
      format = ReadU16(f);
      channels = ReadU16(f + 2);
      rate = static_cast<int>(ReadU32(f + 4));
      block_align = ReadU16(f + 12);
      bits = ReadU16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 40 || available < 40) throw MalformedWav("truncated extensible fmt chunk");
        format = ReadU16(f + 24);
      }
      have_fmt = true;
    } else if (Tag(chunk, "data")) {
      data = chunk + 8;
      data_size = std::min(size, available);  // tolerate an overstated size
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw MalformedWav("no fmt chunk");
  if (data == nullptr) throw MalformedWav("no data chunk");
  if (channels < 1 || rate < 1) throw MalformedWav("invalid channel count or sample rate");

  const bool int_ok = format == kFormatPcm && (bits == 8 || bits == 16 || bits == 24 || bits == 32);
  const bool float_ok = format == kFormatFloat && bits == 32;
  if (!int_ok && !float_ok) {
    throw UnsupportedEncoding("format " + std::to_string(format) + " with " +
                              std::to_string(bits) + " bits per sample");
  }
  const int bytes_per_sample = bits / 8;
  if (block_align != bytes_per_sample * channels) throw MalformedWav("inconsistent block alignment");

  PcmAudio audio;
  audio.sample_rate = rate;
  audio.channels = channels;
  audio.bits_per_sample = bits;
  const std::size_t frames = data_size / block_align;
  audio.mono.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    const std::uint8_t* frame = data + f * block_align;
    for (int c = 0; c < channels; ++c) sum += DecodeSample(frame + c * bytes_per_sample, format, bits);
    audio.mono[f] = sum / channels;
  }
  return audio;
}

std::vector<std::uint8_t> EncodeWav16(std::span<const double> samples, int sample_rate) {
  std::vector<std::uint8_t> out;
  auto put16 = [&out](std::uint32_t v) {
    out.push_back(v & 0xff);
    out.push_back((v >> 8) & 0xff);
  };
  auto put32 = [&](std::uint32_t v) {
    put16(v & 0xffff);
    put16(v >> 16);
  };
  auto tag = [&out](const char* t) { out.insert(out.end(), t, t + 4); };
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  tag("RIFF");
  put32(36 + data_bytes);
  tag("WAVE");
  tag("fmt ");
  put32(16);
  put16(kFormatPcm);
  put16(1);
  put32(static_cast<std::uint32_t>(sample_rate));
  put32(static_cast<std::uint32_t>(sample_rate) * 2);
  put16(2);
  put16(16);
  tag("data");
  put32(data_bytes);
  for (double s : samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const auto v = static_cast<std::int16_t>(std::lround(clamped * 32767.0));
    put16(static_cast<std::uint16_t>(v));
  }
  return out;
}

EnergyProfile profile_from_pcm(const PcmAudio& audio, std::string name) {
  EnergyProfile profile;
  profile.name = std::move(name);
  const std::size_t window = static_cast<std::size_t>(audio.sample_rate);
  const std::size_t seconds = window == 0 ? 0 : audio.mono.size() / window;
  std::vector<double> rms(seconds, 0.0);
  for (std::size_t s = 0; s < seconds; ++s) {
    double sum = 0.0;
    for (std::size_t t = s * window; t < (s + 1) * window; ++t) sum += audio.mono[t] * audio.mono[t];
    rms[s] = std::sqrt(sum / static_cast<double>(window));
  }
  const double peak = rms.empty() ? 0.0 : *std::max_element(rms.begin(), rms.end());
  for (double e : rms) {
    int level = 0;
    if (peak > 0.0) level = std::min(9, static_cast<int>(std::floor(10.0 * e / peak)));
    profile.symbols.push_back(static_cast<char>('0' + level));
  }
  return profile;
}

EnergyProfile profile_from_wav(std::span<const std::uint8_t> wav_bytes, std::string name) {
  return profile_from_pcm(DecodeWav(wav_bytes), std::move(name));
}

EnergyProfile profile_from_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return profile_from_wav(bytes, path.stem().string());
}

Multiset Histogram(std::string_view symbols) { return Multiset::FromSequence(symbols); }

Multiset common_histogram(std::span<const EnergyProfile> profiles) {
  Multiset out;
  if (profiles.empty()) return out;
  std::array<int, 256> counts = Histogram(profiles.front().symbols).counts();
  for (const EnergyProfile& p : profiles.subspan(1)) {
    const Multiset h = Histogram(p.symbols);
    for (int c = 0; c < 256; ++c) counts[c] = std::min(counts[c], h.count(static_cast<Symbol>(c)));
  }
  for (int c = 0; c < 256; ++c) {
    if (counts[c] > 0) out.Add(static_cast<Symbol>(c), counts[c]);
  }
  return out;
}

AudioQuery build_query(const EnergyProfile& reference, const Multiset& m, double rem,
                       std::uint64_t seed) {
  if (!(rem >= 0.0 && rem < 1.0)) throw ConfigInvalid("rem must lie in [0, 1)");
  const Multiset have = Histogram(reference.symbols);
  for (int c = 0; c < 256; ++c) {
    if (m.count(static_cast<Symbol>(c)) > have.count(static_cast<Symbol>(c))) {
      throw HistogramUnderflow("M needs more '" + std::string(1, static_cast<char>(c)) +
                               "' than " + reference.name + " contains");
    }
  }

  std::mt19937_64 rng(seed);
  const int n = reference.length();
  std::vector<char> removed(n, 0);

  // Remove M: per symbol, a uniform sample of its occurrences.
  std::array<std::vector<int>, 256> by_symbol;
  for (int p = 0; p < n; ++p) by_symbol[static_cast<Symbol>(reference.symbols[p])].push_back(p);
  for (int c = 0; c < 256; ++c) {
    std::vector<int>& pos = by_symbol[c];
    const int take = m.count(static_cast<Symbol>(c));
    for (int t = 0; t < take; ++t) {
      std::uniform_int_distribution<int> pick(t, static_cast<int>(pos.size()) - 1);
      std::swap(pos[t], pos[pick(rng)]);
      removed[pos[t]] = 1;
    }
  }
  std::vector<int> kept;
  for (int p = 0; p < n; ++p)
    if (!removed[p]) kept.push_back(p);

  // Degradation: a fixed random order of B0's positions, prefix removed.
  std::vector<int> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t drop = static_cast<std::size_t>(std::floor(rem * static_cast<double>(kept.size())));
  std::vector<char> dropped(kept.size(), 0);
  for (std::size_t t = 0; t < drop; ++t) dropped[order[t]] = 1;

  AudioQuery q;
  q.m = m;
  q.rem = rem;
  q.reference_name = reference.name;
  for (std::size_t t = 0; t < kept.size(); ++t) {
    if (!dropped[t]) q.b.push_back(reference.symbols[kept[t]]);
  }
  return q;
}

std::vector<Ranked> identify(std::span<const EnergyProfile> db, const AudioQuery& query,
                             const IdentifyOptions& options) {
  std::vector<const EnergyProfile*> candidates;
  for (const EnergyProfile& p : db) candidates.push_back(&p);

  if (options.prefilter_k > 0 && options.prefilter_k < static_cast<int>(candidates.size())) {
    Multiset evidence = Histogram(query.b);
    for (int c = 0; c < 256; ++c) evidence.Add(static_cast<Symbol>(c), query.m.count(static_cast<Symbol>(c)));
    auto distance = [&evidence](const EnergyProfile* p) {
      const Multiset h = Histogram(p->symbols);
      int d = 0;
      for (int c = 0; c < 256; ++c) d += std::abs(h.count(static_cast<Symbol>(c)) - evidence.count(static_cast<Symbol>(c)));
      return d;
    };
    std::vector<std::pair<int, const EnergyProfile*>> scored;
    for (const EnergyProfile* p : candidates) scored.emplace_back(distance(p), p);
    std::sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : x.second->name < y.second->name;
    });
    candidates.clear();
    for (int k = 0; k < options.prefilter_k; ++k) candidates.push_back(scored[k].second);
  }

  auto score_one = [&](const EnergyProfile* p) {
    Instance inst;
    inst.name = p->name;
    inst.a = p->symbols;
    inst.b = query.b;
    inst.fill = query.m;
    RunOptions run;
    run.algo = options.algo;
    run.time_limit = options.budget;
    run.seed = options.seed ^ HashName(p->name);
    const RunResult r = run_algorithm(inst, run);
    return Ranked{p->name, r.solution.obj, r.total_time};
  };

  std::vector<Ranked> ranking(candidates.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.workers));
  for (std::size_t begin = 0; begin < candidates.size(); begin += workers) {
    const std::size_t end = std::min(candidates.size(), begin + workers);
    std::vector<std::future<Ranked>> pending;
    for (std::size_t k = begin; k < end; ++k) {
      pending.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                   score_one, candidates[k]));
    }
    for (std::size_t k = begin; k < end; ++k) ranking[k] = pending[k - begin].get();
  }
  std::sort(ranking.begin(), ranking.end(), [](const Ranked& x, const Ranked& y) {
    return x.score != y.score ? x.score > y.score : x.name < y.name;
  });
  return ranking;
}

void WriteProfile(std::ostream& out, const EnergyProfile& profile) {
  out << profile.name << '\n' << profile.symbols << '\n';
}

void WriteProfileFile(const std::filesystem::path& path, const EnergyProfile& profile) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  WriteProfile(out, profile);
}

EnergyProfile ReadProfileFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  EnergyProfile p;
  if (!std::getline(in, p.name) || !std::getline(in, p.symbols)) {
    throw ParseError("profile file needs a name line and a symbol line: " + path.string());
  }
  for (char c : p.symbols) {
    if (c < '0' || c > '9') throw ParseError("profile symbols must be digits: " + path.string());
  }
  if (p.symbols.empty()) throw ParseError("empty profile: " + path.string());
  return p;
}

std::vector<EnergyProfile> ReadProfileDb(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<EnergyProfile> db;
  for (const auto& f : files) db.push_back(ReadProfileFile(f));
  return db;
}

void WriteIdentifyReport(std::ostream& out, const std::vector<Ranked>& ranking, Algorithm algo) {
  out << "rank,name,score,time_s,algo\n";
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    out << k + 1 << ',' << ranking[k].name << ',' << ranking[k].score << ',' << std::fixed
        << std::setprecision(3) << ranking[k].time_s << ',' << ToString(algo) << '\n';
  }
}

}  // namespace lfcs
