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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "lfcs/audio.hpp"
#include "lfcs/bench.hpp"
#include "lfcs/generator.hpp"
#include "test_util.hpp"

using namespace lfcs;
namespace fs = std::filesystem;

namespace {

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lfcs_bench_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Writes instances of one small group with the benchmark seed derivation.
std::vector<fs::path> Group(const fs::path& dir, int n, int sigma, int count) {
  std::vector<ManifestRow> rows;
  std::vector<fs::path> paths;
  for (int i = 0; i < count; ++i) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.sigma_size = sigma;
    cfg.seed = DeriveSeed(1, n, sigma, i);
    Instance inst = generate_instance(cfg);
    const std::string file = InstanceFileName(BenchmarkSet::kSmall, n, sigma, i);
    WriteInstanceFile(dir / file, inst);
    rows.push_back({"small", n, sigma, i, cfg.seed, file});
    paths.push_back(dir / file);
  }
  std::ofstream m(dir / "manifest.csv", std::ios::binary);
  WriteManifest(m, rows);
  return paths;
}

int Run(const std::string& args, const fs::path& out = {}) {
  std::string cmd = std::string(LFCS_CLI_PATH) + " " + args;
  if (!out.empty()) cmd += " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// obj column of the single data row of a solve report.
int SolveObj(const fs::path& out) {
  std::istringstream in(Slurp(out));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::vector<std::string> f;
  std::istringstream ss(row);
  for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
  return f.size() == 11 ? std::stoi(f[7]) : -1;
}

}  // namespace

TEST_CASE("run_bench rows, aggregates and determinism") {
  const fs::path dir = Scratch("det");
  Group(dir, 32, 8, 4);
  BenchOptions opt;
  opt.algos = {Algorithm::kApprox, Algorithm::kRandSample, Algorithm::kLs2, Algorithm::kCmsa};
  opt.time_limit = 0.5;
  opt.n_rand = 200;
  opt.virtual_clock = true;
  const auto instances = ListInstances(dir);
  REQUIRE(instances.size() == 4);

  std::ostringstream a, b;
  WriteRunRecordHeader(a);
  WriteRunRecordHeader(b);
  const auto rows = run_bench(instances, opt, &a);
  run_bench(instances, opt, &b);
  CHECK(a.str() == b.str());
  REQUIRE(rows.size() == 16);
  CHECK(a.str().find('\r') == std::string::npos);

  for (const RunRecord& r : rows) {
    CHECK(r.obj >= 0);
    CHECK(r.time_to_best_s <= r.total_time_s);
    CHECK(r.n == 32);
  }

  std::map<std::string, std::pair<double, int>> sums;
  for (const RunRecord& r : rows) {
    sums[r.algo].first += r.obj;
    ++sums[r.algo].second;
  }
  const auto agg = Aggregate(rows);
  REQUIRE(agg.size() == 4);
  CHECK(agg[0].algo == "approx");
  for (const AggregateRow& g : agg) {
    CHECK(g.count == 4);
    CHECK(g.mean_obj == doctest::Approx(sums[g.algo].first / sums[g.algo].second));
  }

  fs::path csv = dir / "results.csv";
  {
    std::ofstream f(csv, std::ios::binary);
    f << a.str();
  }
  const auto back = ReadRunRecords(csv);
  REQUIRE(back.size() == rows.size());
  CHECK(back[5].algo == rows[5].algo);
  CHECK(back[5].obj == rows[5].obj);
  fs::remove_all(dir);
}

TEST_CASE("run_bench honours an interrupt") {
  const fs::path dir = Scratch("int");
  Group(dir, 16, 4, 3);
  std::atomic<bool> stop{true};
  BenchOptions opt;
  opt.algos = {Algorithm::kApprox};
  CHECK(run_bench(ListInstances(dir), opt, nullptr, &stop).empty());
  fs::remove_all(dir);
}

TEST_CASE("features") {
  std::ostringstream out;
  WriteFeaturesHeader(out);
  WriteFeatures(out, lfcs::testing::Example1());
  CHECK(out.str() == "instance,sigma,n,len_b,k\nex1,7,16,6,11\n");
}

TEST_CASE("n=16 sigma=4: rand, cmsa and the library oracle reach the exhaustive optimum") {
  const fs::path dir = Scratch("n16");
  const auto paths = Group(dir, 16, 4, 30);
  double naive = 0;
  for (const auto& p : paths) naive += lfcs::testing::NaiveOptimum(ReadInstanceFile(p));
  BenchOptions opt;
  opt.algos = {Algorithm::kRandSample, Algorithm::kCmsa, Algorithm::kOracle};
  opt.time_limit = 2;
  const auto agg = Aggregate(run_bench(ListInstances(dir), opt));
  REQUIRE(agg.size() == 3);
  for (const AggregateRow& g : agg) {
    CHECK(g.count == 30);
    CHECK(g.mean_obj * 30 == doctest::Approx(naive));
  }
  fs::remove_all(dir);
}

TEST_CASE("cli solve") {
  const fs::path dir = Scratch("cli_solve");
  WriteInstanceFile(dir / "ex1.lfcs", lfcs::testing::Example1());
  WriteInstanceFile(dir / "empty.lfcs", lfcs::testing::Make("", "", ""));
  const fs::path out = dir / "out.txt";

  CHECK(Run("solve --algo cmsa --instance " + (dir / "ex1.lfcs").string() +
                " --time-limit 5 --seed 1",
            out) == 0);
  CHECK(SolveObj(out) == 15);
  CHECK(Run("solve --algo approx --instance " + (dir / "ex1.lfcs").string(), out) == 0);
  CHECK(SolveObj(out) >= 9);
  CHECK(Run("solve --algo ilp --instance " + (dir / "empty.lfcs").string(), out) == 0);
  CHECK(SolveObj(out) == 0);

  CHECK(Run("solve --algo oracle --print-solution --instance " + (dir / "ex1.lfcs").string(),
            out) == 0);
  CHECK(Slurp(out).find("del: ") != std::string::npos);

  CHECK(Run("solve --algo nope --instance " + (dir / "ex1.lfcs").string(), out) == 1);
  CHECK(Run("solve --bogus-flag", out) == 1);
  CHECK(Run("solve --instance " + (dir / "missing.lfcs").string(), out) == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli trajectory log") {
  const fs::path dir = Scratch("cli_log");
  WriteInstanceFile(dir / "ex1.lfcs", lfcs::testing::Example1());
  const fs::path log = dir / "traj.tsv";
  CHECK(Run("solve --algo cmsa --time-limit 2 --instance " + (dir / "ex1.lfcs").string(),
            dir / "out.txt") == 0);
  CHECK_FALSE(fs::exists(log));
  const std::string env = "LFCS_LOG=" + log.string() + " ";
  const std::string cmd = env + LFCS_CLI_PATH + " solve --algo cmsa --time-limit 2 --instance " +
                          (dir / "ex1.lfcs").string() + " > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(Slurp(log).find("\t15\n") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cli generate, bench and features") {
  const fs::path dir = Scratch("cli_bench");
  CHECK(Run("generate --set large --seed 7 --out " + (dir / "large").string(), dir / "g.txt") == 0);
  CHECK(ReadManifest(dir / "large" / "manifest.csv").size() == 120);
  CHECK(Run("generate --n 32 --sigma 4 --seed 3 --out " + (dir / "one.lfcs").string(),
            dir / "g.txt") == 0);
  CHECK(ReadInstanceFile(dir / "one.lfcs").n() == 32);

  const fs::path small = dir / "small";
  fs::create_directories(small);
  Group(small, 16, 2, 3);
  const std::string bench = "bench --dir " + small.string() +
                            " --algo approx,rand,cmsa --time-limit 1 --n-rand 100 --virtual-time";
  CHECK(Run(bench + " --out " + (dir / "r1").string(), dir / "b.txt") == 0);
  CHECK(Run(bench + " --out " + (dir / "r2").string(), dir / "b.txt") == 0);
  CHECK(Slurp(dir / "r1" / "results.csv") == Slurp(dir / "r2" / "results.csv"));
  CHECK(Slurp(dir / "r1" / "aggregate.csv") == Slurp(dir / "r2" / "aggregate.csv"));
  CHECK(ReadRunRecords(dir / "r1" / "results.csv").size() == 9);
  CHECK(Slurp(dir / "r1" / "aggregate.csv").rfind("n,sigma,algo,count,mean_obj,mean_time_s\n", 0) == 0);

  CHECK(Run("features --dir " + small.string() + " --out " + (dir / "f.csv").string(),
            dir / "b.txt") == 0);
  const std::string f = Slurp(dir / "f.csv");
  CHECK(f.rfind("instance,sigma,n,len_b,k\n", 0) == 0);
  CHECK(std::count(f.begin(), f.end(), '\n') == 4);

  CHECK(Run("bench --dir " + (dir / "nowhere").string(), dir / "b.txt") == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli audio") {
  const fs::path dir = Scratch("cli_audio");
  std::vector<double> x(3 * 8000, 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = t < 8000 ? 0.0 : 0.8 * ((t / 20) % 2 ? 1 : -1);
  const auto wav = EncodeWav16(x, 8000);
  {
    std::ofstream f(dir / "s.wav", std::ios::binary);
    f.write(reinterpret_cast<const char*>(wav.data()), static_cast<std::streamsize>(wav.size()));
  }
  CHECK(Run("audio profile --wav " + (dir / "s.wav").string() + " --out " +
                (dir / "s.prof").string(),
            dir / "o.txt") == 0);
  CHECK(ReadProfileFile(dir / "s.prof").symbols == "099");

  fs::create_directories(dir / "db");
  for (auto& [name, symbols] : lfcs::testing::RandomWalkProfiles(8, 50, 2024)) {
    WriteProfileFile(dir / "db" / (name + ".prof"), {name, symbols});
  }
  CHECK(Run("audio identify --db " + (dir / "db").string() + " --query " +
                (dir / "db" / "song3.prof").string() +
                " --rem 0.2 --algo cmsa --budget 1 --out " + (dir / "rank.csv").string(),
            dir / "o.txt") == 0);
  const std::string report = Slurp(dir / "rank.csv");
  CHECK(report.rfind("rank,name,score,time_s,algo\n1,song3,", 0) == 0);
  CHECK(std::count(report.begin(), report.end(), '\n') == 9);
  fs::remove_all(dir);
}
