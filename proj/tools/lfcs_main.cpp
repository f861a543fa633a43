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

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lfcs/algorithms.hpp"
#include "lfcs/audio.hpp"
#include "lfcs/bench.hpp"
#include "lfcs/errors.hpp"
#include "lfcs/generator.hpp"
#include "lfcs/instance.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::atomic<bool> g_interrupted{false};

extern "C" void OnInterrupt(int) { g_interrupted.store(true); }

// Explicit profile, or the size-selected one when only LFCS_LOG is set.
std::optional<lfcs::CmsaParams> CmsaFor(const std::string& profile, int n) {
  const char* log = std::getenv("LFCS_LOG");
  const bool logging = log != nullptr && *log != '\0';
  if (profile.empty() && !logging) return std::nullopt;
  lfcs::CmsaParams params = profile.empty() ? lfcs::ProfileFor(n) : lfcs::ProfileByName(profile);
  if (logging) params.trajectory_log = fs::path(log);
  return params;
}

struct SolveArgs {
  std::string algo = "cmsa";
  std::string instance;
  double time_limit = 600.0;
  std::uint64_t seed = 1;
  int n_rand = 10000;
  std::string profile;
  bool print_solution = false;
  bool virtual_time = false;
};

int CmdSolve(const SolveArgs& a) {
  const lfcs::Instance inst = lfcs::ReadInstanceFile(a.instance);
  lfcs::RunOptions run;
  run.algo = lfcs::ParseAlgorithm(a.algo);
  run.time_limit = a.time_limit;
  run.seed = a.seed;
  run.n_rand = a.n_rand;
  run.virtual_clock = a.virtual_time;
  run.cmsa = CmsaFor(a.profile, inst.n());
  const lfcs::RunResult result = lfcs::run_algorithm(inst, run);
  lfcs::WriteRunRecordHeader(std::cout);
  lfcs::WriteRunRecord(std::cout, lfcs::MakeRunRecord(inst, run.algo, a.seed, result));
  if (a.print_solution) std::cout << lfcs::FormatSolution(result.solution);
  return kExitOk;
}

struct GenerateArgs {
  std::string set;
  int n = 0;
  int sigma = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int CmdGenerate(const GenerateArgs& a) {
  if (!a.set.empty()) {
    const auto rows = lfcs::generate_benchmark(lfcs::ParseBenchmarkSet(a.set), a.out, a.seed);
    std::cout << "wrote " << rows.size() << " instances to " << a.out << "\n";
    return kExitOk;
  }
  if (a.n <= 0 || a.sigma <= 0) throw lfcs::ConfigInvalid("need --set or both --n and --sigma");
  lfcs::GeneratorConfig cfg;
  cfg.n = a.n;
  cfg.sigma_size = a.sigma;
  cfg.seed = a.seed;
  const lfcs::Instance inst = lfcs::generate_instance(cfg);
  if (a.out.empty() || a.out == "-") {
    lfcs::WriteInstance(std::cout, inst);
  } else {
    lfcs::WriteInstanceFile(a.out, inst);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string dir;
  std::string algos = "cmsa";
  double time_limit = 600.0;
  std::uint64_t seed = 1;
  int n_rand = 10000;
  int workers = 1;
  std::string out = "results";
  std::string profile;
  bool virtual_time = false;
};

int CmdBench(const BenchArgs& a) {
  lfcs::BenchOptions opt;
  opt.algos = lfcs::ParseAlgorithmList(a.algos);
  opt.time_limit = a.time_limit;
  opt.seed = a.seed;
  opt.n_rand = a.n_rand;
  opt.workers = a.workers;
  opt.virtual_clock = a.virtual_time;
  if (!a.profile.empty()) opt.cmsa_profile = a.profile;
  if (!fs::is_directory(a.dir)) throw lfcs::IoError("not a directory: " + a.dir);
  const auto instances = lfcs::ListInstances(a.dir);

  fs::create_directories(a.out);
  std::ofstream rows(fs::path(a.out) / "results.csv", std::ios::binary);
  if (!rows) throw lfcs::IoError("cannot write " + a.out + "/results.csv");
  lfcs::WriteRunRecordHeader(rows);
  rows.flush();

  std::signal(SIGINT, OnInterrupt);
  std::signal(SIGTERM, OnInterrupt);
  const auto records = lfcs::run_bench(instances, opt, &rows, &g_interrupted);

  std::ofstream agg(fs::path(a.out) / "aggregate.csv", std::ios::binary);
  if (!agg) throw lfcs::IoError("cannot write " + a.out + "/aggregate.csv");
  lfcs::WriteAggregate(agg, lfcs::Aggregate(records));
  std::cout << "wrote " << records.size() << " runs to " << a.out << "\n";
  return g_interrupted.load() ? kExitRuntime : kExitOk;
}

struct FeatureArgs {
  std::vector<std::string> instances;
  std::string dir;
  std::string out;
};

int CmdFeatures(const FeatureArgs& a) {
  std::vector<fs::path> paths(a.instances.begin(), a.instances.end());
  if (!a.dir.empty()) {
    for (const auto& p : lfcs::ListInstances(a.dir)) paths.push_back(p);
  }
  if (paths.empty()) throw lfcs::ConfigInvalid("need --instance or --dir");
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) throw lfcs::IoError("cannot write " + a.out);
    out = &file;
  }
  lfcs::WriteFeaturesHeader(*out);
  for (const auto& p : paths) lfcs::WriteFeatures(*out, lfcs::ReadInstanceFile(p));
  return kExitOk;
}

struct ProfileArgs {
  std::string wav;
  std::string out;
};

int CmdAudioProfile(const ProfileArgs& a) {
  const lfcs::EnergyProfile profile = lfcs::profile_from_wav_file(a.wav);
  if (a.out.empty() || a.out == "-") {
    lfcs::WriteProfile(std::cout, profile);
  } else {
    lfcs::WriteProfileFile(a.out, profile);
  }
  return kExitOk;
}

struct IdentifyArgs {
  std::string db;
  std::string query;
  double rem = 0.0;
  std::string algo = "cmsa";
  double budget = 10.0;
  std::uint64_t seed = 1;
  int prefilter = 0;
  int workers = 1;
  std::string out;
};

int CmdAudioIdentify(const IdentifyArgs& a) {
  const std::vector<lfcs::EnergyProfile> db = lfcs::ReadProfileDb(a.db);
  if (db.empty()) throw lfcs::IoError("no profiles in " + a.db);
  const lfcs::EnergyProfile reference = lfcs::ReadProfileFile(a.query);
  std::vector<lfcs::EnergyProfile> all = db;
  all.push_back(reference);
  const lfcs::Multiset m = lfcs::common_histogram(all);
  const lfcs::AudioQuery query = lfcs::build_query(reference, m, a.rem, a.seed);

  lfcs::IdentifyOptions opt;
  opt.algo = lfcs::ParseAlgorithm(a.algo);
  opt.budget = a.budget;
  opt.seed = a.seed;
  opt.prefilter_k = a.prefilter;
  opt.workers = a.workers;
  const auto ranking = lfcs::identify(db, query, opt);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) throw lfcs::IoError("cannot write " + a.out);
    out = &file;
  }
  lfcs::WriteIdentifyReport(*out, ranking, opt.algo);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest filled common subsequence solvers and benchmark harness"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Run one algorithm on one instance");
  cmd_solve->add_option("--algo", solve.algo, "approx|rand|ls2|ls4|ilp|cmsa|oracle")
      ->capture_default_str();
  cmd_solve->add_option("--instance", solve.instance, "Instance file")->required();
  cmd_solve->add_option("--time-limit", solve.time_limit, "Seconds")->capture_default_str();
  cmd_solve->add_option("--seed", solve.seed)->capture_default_str();
  cmd_solve->add_option("--n-rand", solve.n_rand, "Samples for rand")->capture_default_str();
  cmd_solve->add_option("--profile", solve.profile, "cmsa parameters: small|large");
  cmd_solve->add_flag("--print-solution", solve.print_solution, "Print deletions and chain");
  cmd_solve->add_flag("--virtual-time", solve.virtual_time, "Deterministic operation-count clock");

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate instances");
  cmd_gen->add_option("--set", gen.set, "small|large benchmark set");
  cmd_gen->add_option("--n", gen.n, "Length of A for a single instance");
  cmd_gen->add_option("--sigma", gen.sigma, "Alphabet size for a single instance");
  cmd_gen->add_option("--seed", gen.seed)->capture_default_str();
  cmd_gen->add_option("--out", gen.out, "Output directory (set) or file (single)");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Run algorithms over a benchmark directory");
  cmd_bench->add_option("--dir", bench.dir, "Benchmark directory")->required();
  cmd_bench->add_option("--algo", bench.algos, "Comma-separated algorithms")
      ->capture_default_str();
  cmd_bench->add_option("--time-limit", bench.time_limit, "Seconds per run")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed)->capture_default_str();
  cmd_bench->add_option("--n-rand", bench.n_rand)->capture_default_str();
  cmd_bench->add_option("--workers", bench.workers)->capture_default_str();
  cmd_bench->add_option("--out", bench.out, "Output directory")->capture_default_str();
  cmd_bench->add_option("--profile", bench.profile, "cmsa parameters: small|large");
  cmd_bench->add_flag("--virtual-time", bench.virtual_time, "Deterministic operation-count clock");

  FeatureArgs feat;
  auto* cmd_feat = app.add_subcommand("features", "Write instance features CSV");
  cmd_feat->add_option("--instance", feat.instances, "Instance files");
  cmd_feat->add_option("--dir", feat.dir, "Benchmark directory");
  cmd_feat->add_option("--out", feat.out, "Output CSV (default stdout)");

  auto* cmd_audio = app.add_subcommand("audio", "Energy-profile song identification");
  cmd_audio->require_subcommand(1);
  ProfileArgs prof;
  auto* cmd_prof = cmd_audio->add_subcommand("profile", "WAV file to energy profile");
  cmd_prof->add_option("--wav", prof.wav)->required();
  cmd_prof->add_option("--out", prof.out, "Profile file (default stdout)");
  IdentifyArgs ident;
  auto* cmd_ident = cmd_audio->add_subcommand("identify", "Rank database songs for a query");
  cmd_ident->add_option("--db", ident.db, "Directory of .prof files")->required();
  cmd_ident->add_option("--query", ident.query, "Reference profile")->required();
  cmd_ident->add_option("--rem", ident.rem, "Extra removal fraction")->capture_default_str();
  cmd_ident->add_option("--algo", ident.algo)->capture_default_str();
  cmd_ident->add_option("--budget", ident.budget, "Seconds per candidate")
      ->capture_default_str();
  cmd_ident->add_option("--seed", ident.seed)->capture_default_str();
  cmd_ident->add_option("--prefilter", ident.prefilter, "Keep k nearest histograms, 0 = all")
      ->capture_default_str();
  cmd_ident->add_option("--workers", ident.workers)->capture_default_str();
  cmd_ident->add_option("--out", ident.out, "Report CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_solve) return CmdSolve(solve);
    if (*cmd_gen) return CmdGenerate(gen);
    if (*cmd_bench) return CmdBench(bench);
    if (*cmd_feat) return CmdFeatures(feat);
    if (*cmd_prof) return CmdAudioProfile(prof);
    if (*cmd_ident) return CmdAudioIdentify(ident);
  } catch (const lfcs::ConfigInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
