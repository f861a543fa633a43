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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfcs/audio.hpp"
#include "lfcs/baselines.hpp"
#include "lfcs/bench.hpp"
#include "lfcs/cmsa.hpp"
#include "lfcs/generator.hpp"
#include "lfcs/lcs.hpp"
#include "lfcs/subproblem.hpp"
#include "test_util.hpp"

using namespace lfcs;
namespace fs = std::filesystem;

namespace {

using Seconds = std::chrono::duration<double>;

double Since(std::chrono::steady_clock::time_point t0) {
  return Seconds(std::chrono::steady_clock::now() - t0).count();
}

int g_failed = 0;

void Report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

Instance Generated(int n, int sigma, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.sigma_size = sigma;
  cfg.seed = seed;
  return generate_instance(cfg);
}

// The 200 instances of criteria 2 and 3.
std::vector<Instance> TinyInstances() {
  std::vector<Instance> out;
  std::uint64_t seed = 1000;
  for (int k = 0; k < 200; ++k) {
    const int n = 8 + 2 * (k % 3);
    const int sigma = (k / 3) % 2 == 0 ? 2 : 4;
    out.push_back(Generated(n, sigma, seed++));
  }
  return out;
}

void Criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Instance ex = lfcs::testing::Example1();
  const int bf = brute_force_oracle(ex);
  const int ilp = solve_full_ilp(ex).solution.obj;
  CmsaParams p = SmallProfile();
  p.time_limit = 5.0;
  const int cmsa = adapt_cmsa_solve(ex, p).best.obj;
  const int approx = approx_solve(ex).obj;
  const double t = Since(t0);
  std::ostringstream d;
  d << "oracle=" << bf << " ilp=" << ilp << " cmsa=" << cmsa << " approx=" << approx << " time="
    << t << "s";
  Report(1, "golden example", bf == 15 && ilp == 15 && cmsa == 15 && approx >= 9 && t < 5.0,
         d.str());
}

void Criteria2And3(const std::vector<Instance>& tiny) {
  const auto t0 = std::chrono::steady_clock::now();
  int mismatches = 0, violations = 0;
  double worst = 1.0;
  for (const Instance& inst : tiny) {
    const int opt = brute_force_oracle(inst);
    if (solve_full_ilp(inst).solution.obj != opt) ++mismatches;
    const int a = approx_solve(inst).obj;
    if (opt > 0) {
      const double ratio = static_cast<double>(a) / opt;
      worst = std::min(worst, ratio);
      if (5 * a < 3 * opt) ++violations;
    }
  }
  const double t = Since(t0);
  std::ostringstream d2;
  d2 << mismatches << " mismatches on " << tiny.size() << " instances, time=" << t << "s";
  Report(2, "oracle equivalence", mismatches == 0 && t < 600.0, d2.str());
  std::ostringstream d3;
  d3 << violations << " violations, worst ratio " << worst;
  Report(3, "approximation guarantee", violations == 0, d3.str());
}

void Criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Group {
    int n, sigma;
  };
  const std::vector<Group> groups{{16, 2}, {16, 4}, {16, 8}, {32, 4}, {32, 8}, {32, 16}};
  int miss16 = 0, miss32 = 0;
  std::ostringstream per;
  for (const Group& g : groups) {
    int miss = 0;
    for (int i = 0; i < 30; ++i) {
      const Instance inst = Generated(g.n, g.sigma, DeriveSeed(1, g.n, g.sigma, i));
      const int opt = g.n <= 20 ? brute_force_oracle(inst) : solve_full_ilp(inst).solution.obj;
      CmsaParams p = SmallProfile();
      p.time_limit = 60.0;
      p.seed = 1;
      p.target_obj = opt;
      if (adapt_cmsa_solve(inst, p).best.obj != opt) ++miss;
    }
    (g.n == 16 ? miss16 : miss32) += miss;
    per << " n" << g.n << "s" << g.sigma << ":" << miss;
  }
  std::ostringstream d;
  d << "misses n=16 " << miss16 << ", n=32 " << miss32 << " (" << per.str().substr(1)
    << "), time=" << Since(t0) << "s";
  Report(4, "small-benchmark parity", miss16 == 0 && miss32 <= 1, d.str());
}

void Criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  double cmsa = 0, ls2 = 0, rnd = 0;
  for (int i = 0; i < 10; ++i) {
    const Instance inst = Generated(200, 4, DeriveSeed(1, 200, 4, i));
    RunOptions run;
    run.time_limit = 60.0;
    run.seed = 1;
    run.algo = Algorithm::kCmsa;
    cmsa += run_algorithm(inst, run).solution.obj;
    run.algo = Algorithm::kLs2;
    ls2 += run_algorithm(inst, run).solution.obj;
    run.algo = Algorithm::kRandSample;
    rnd += run_algorithm(inst, run).solution.obj;
  }
  cmsa /= 10;
  ls2 /= 10;
  rnd /= 10;
  std::ostringstream d;
  d << "mean cmsa=" << cmsa << " ls2=" << ls2 << " rand=" << rnd << ", time=" << Since(t0) << "s";
  Report(5, "large trend", cmsa >= ls2 - 0.5 && ls2 >= rnd, d.str());
}

// Longest chain by quadratic DP over the pairs, skipping deleted positions.
int QuadraticChain(const std::vector<Match>& pairs, std::uint32_t deleted_mask) {
  std::vector<Match> p;
  for (const Match& m : pairs)
    if (!(deleted_mask & (1u << (m.i - 1)))) p.push_back(m);
  std::vector<int> best(p.size(), 1);
  int out = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (p[b].i < p[a].i && p[b].j < p[a].j) best[a] = std::max(best[a], best[b] + 1);
    out = std::max(out, best[a]);
  }
  return out;
}

int PoolOracle(const Instance& inst, const ComponentPool& pool) {
  const std::vector<int>& am = pool.match_am();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << am.size()); ++mask) {
    std::array<int, 256> used{};
    std::uint32_t del = 0;
    int r = 0;
    bool ok = true;
    for (std::size_t k = 0; k < am.size(); ++k) {
      if (!(mask & (1u << k))) continue;
      const auto s = static_cast<Symbol>(inst.a[am[k] - 1]);
      ok = ok && ++used[s] <= inst.fill.count(s);
      del |= 1u << (am[k] - 1);
      ++r;
    }
    if (ok) best = std::max(best, r + QuadraticChain(pool.match_b().pairs(), del));
  }
  return best;
}

std::string BenchCsv(const std::vector<fs::path>& files) {
  BenchOptions opt;
  opt.algos = {Algorithm::kRandSample, Algorithm::kLs2, Algorithm::kCmsa};
  opt.time_limit = 0.5;
  opt.n_rand = 500;
  opt.virtual_clock = true;
  std::ostringstream out;
  WriteRunRecordHeader(out);
  WriteAggregate(out, Aggregate(run_bench(files, opt, &out)));
  return out.str();
}

void Criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> broken;

  // Incumbent monotonicity.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CmsaParams p = LargeProfile();
    p.time_limit = 1.0;
    p.t_ilp = 0.02;
    p.virtual_clock = true;
    p.seed = seed;
    std::vector<CmsaStep> steps;
    const CmsaResult r = adapt_cmsa_solve(Generated(150, 4, seed), p, &steps);
    bool ok = !r.trajectory.empty() && r.trajectory.back().obj == r.best.obj;
    for (std::size_t k = 1; k < r.trajectory.size(); ++k)
      ok = ok && r.trajectory[k].obj > r.trajectory[k - 1].obj &&
           r.trajectory[k].seconds >= r.trajectory[k - 1].seconds;
    for (std::size_t k = 1; k < steps.size(); ++k) ok = ok && steps[k].obj_bsf >= steps[k - 1].obj_bsf;
    if (!ok) {
      broken.push_back("monotonicity");
      break;
    }
  }

  // Cardinality and budgets under the randomized swap.
  {
    std::mt19937_64 gen(5);
    Rng rng(6);
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
      const Instance inst = lfcs::testing::RandomInstance(gen, 4 + t % 20, 2 + t % 5);
      const Solution s = rand_sample_construct(inst, rng);
      const Solution m = modify_components(inst, s, alpha(rng), rng);
      if (m.r() != s.r() || !check_solution(inst, m).ok) {
        broken.push_back("modify_components");
        break;
      }
    }
  }

  // Restricted solver against exhaustive pool enumeration.
  {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
      const Instance inst = lfcs::testing::RandomInstance(rng, 6 + t % 7, 2 + t % 3);
      std::vector<Solution> sols;
      for (int k = 0; k < 3; ++k) sols.push_back(rand_sample_construct(inst, rng()));
      const ComponentPool pool = merge(inst, sols);
      if (solve_restricted(inst, pool).solution.obj != PoolOracle(inst, pool)) {
        broken.push_back("pool enumeration");
        break;
      }
    }
  }

  // longest_chain against lcs.
  {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 30);
    for (int t = 0; t < 500; ++t) {
      const std::string x = lfcs::testing::RandomString(rng, len(rng), 2 + t % 6);
      const std::string y = lfcs::testing::RandomString(rng, len(rng), 2 + t % 6);
      const int want = lfcs::testing::NaiveLcs(x, y);
      if (longest_chain(all_matchings(x, y)).length != want || lcs(x, y).length != want) {
        broken.push_back("longest_chain");
        break;
      }
    }
  }

  // Generator conservation.
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 16 + static_cast<int>(seed % 5) * 16;
    cfg.sigma_size = 2 + static_cast<int>(seed % 7);
    cfg.seed = seed;
    const GenerationTrace tr = generate_with_trace(cfg);
    if (tr.instance.len_b() + tr.instance.k() != static_cast<int>(tr.b_mod.size()) ||
        tr.instance.n() != cfg.n) {
      broken.push_back("conservation");
      break;
    }
  }

  // Bitwise-identical CSVs on rerun.
  {
    const fs::path dir = fs::temp_directory_path() / "lfcs_acceptance_csv";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::vector<fs::path> files;
    for (int i = 0; i < 4; ++i) {
      files.push_back(dir / ("i" + std::to_string(i) + ".lfcs"));
      WriteInstanceFile(files.back(), Generated(48, 6, DeriveSeed(3, 48, 6, i)));
    }
    if (BenchCsv(files) != BenchCsv(files)) broken.push_back("determinism");
    fs::remove_all(dir);
  }

  std::ostringstream d;
  d << (broken.empty() ? "all 6 properties hold" : "broken:");
  for (const auto& b : broken) d << ' ' << b;
  d << ", time=" << Since(t0) << "s";
  Report(6, "property suites", broken.empty(), d.str());
}

void Criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<EnergyProfile> db;
  for (auto& [name, symbols] : lfcs::testing::RandomWalkProfiles(8, 50, 2024)) db.push_back({name, symbols});
  const Multiset m = common_histogram(db);
  IdentifyOptions opt;
  opt.algo = Algorithm::kIlp;
  opt.budget = 60;
  const auto ranking = identify(db, build_query(db[2], m, 0.0, 1), opt);
  const bool first = ranking.front().name == "song3" && ranking.front().score == 50;
  bool monotone = true;
  int prev = ranking.front().score;
  std::ostringstream scores;
  const std::vector<EnergyProfile> ref{db[2]};
  for (double rem : {0.2, 0.4, 0.6, 0.8}) {
    const int s = identify(ref, build_query(db[2], m, rem, 1), opt).front().score;
    monotone = monotone && s <= prev;
    prev = s;
    scores << ' ' << s;
  }
  const double t = Since(t0);
  std::ostringstream d;
  d << "top=" << ranking.front().name << " score=" << ranking.front().score
    << ", scores over rem:" << scores.str() << ", time=" << t << "s";
  Report(7, "audio round trip", first && monotone && t < 120.0, d.str());
}

void Criterion8() {
  constexpr int kRate = 8000;
  auto sine = [](double seconds, double amp) {
    std::vector<double> x(static_cast<std::size_t>(std::lround(seconds * kRate)));
    for (std::size_t t = 0; t < x.size(); ++t) x[t] = amp * std::sin(2 * std::numbers::pi * 440.0 * t / kRate);
    return x;
  };
  const std::string silence = profile_from_wav(EncodeWav16(std::vector<double>(10 * kRate, 0.0), kRate), "s").symbols;
  const std::string tone = profile_from_wav(EncodeWav16(sine(3.0, 1.0), kRate), "t").symbols;
  const auto partial_wav = EncodeWav16(sine(2.7, 0.5), kRate);
  const std::string partial = profile_from_wav(partial_wav, "p").symbols;
  std::ostringstream a, b;
  WriteProfile(a, profile_from_wav(partial_wav, "p"));
  WriteProfile(b, profile_from_wav(partial_wav, "p"));
  const bool pass = silence == "0000000000" && tone == "999" && partial.size() == 2 && a.str() == b.str();
  std::ostringstream d;
  d << "silence=" << silence << " tone=" << tone << " 2.7s length=" << partial.size()
    << (a.str() == b.str() ? " rerun identical" : " rerun differs");
  Report(8, "wav discretization", pass, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  // Optional list of criterion numbers to run, default all.
  std::vector<bool> run(9, argc <= 1);
  for (int k = 1; k < argc; ++k) {
    const int c = std::atoi(argv[k]);
    if (c >= 1 && c <= 8) run[c] = true;
  }
  if (run[1]) Criterion1();
  if (run[2] || run[3]) Criteria2And3(TinyInstances());
  if (run[4]) Criterion4();
  if (run[5]) Criterion5();
  if (run[6]) Criterion6();
  if (run[7]) Criterion7();
  if (run[8]) Criterion8();
  std::printf("%s: %d failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
  return g_failed == 0 ? 0 : 1;
}
