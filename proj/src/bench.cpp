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

#include "lfcs/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "lfcs/errors.hpp"
#include "lfcs/generator.hpp"

namespace lfcs {

namespace {

std::string Fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

RunRecord MakeRunRecord(const Instance& inst, Algorithm algo, std::uint64_t seed,
                        const RunResult& result) {
  RunRecord r;
  r.instance = inst.name;
  r.n = inst.n();
  r.sigma = inst.sigma();
  r.len_b = inst.len_b();
  r.k = inst.k();
  r.algo = ToString(algo);
  r.seed = seed;
  r.obj = result.solution.obj;
  r.total_time_s = result.total_time;
  r.time_to_best_s = std::min(result.time_to_best, result.total_time);
  r.status = result.status;
  return r;
}

void WriteRunRecordHeader(std::ostream& out) {
  out << "instance,n,sigma,len_b,k,algo,seed,obj,time_to_best_s,total_time_s,status\n";
}

void WriteRunRecord(std::ostream& out, const RunRecord& r) {
  out << r.instance << ',' << r.n << ',' << r.sigma << ',' << r.len_b << ',' << r.k << ','
      << r.algo << ',' << r.seed << ',' << r.obj << ',' << Fixed(r.time_to_best_s) << ','
      << Fixed(r.total_time_s) << ',' << r.status << '\n';
}

std::vector<RunRecord> ReadRunRecords(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  std::vector<RunRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 11) throw ParseError("bad results row: " + line);
    RunRecord r;
    r.instance = f[0];
    r.n = std::stoi(f[1]);
    r.sigma = std::stoi(f[2]);
    r.len_b = std::stoi(f[3]);
    r.k = std::stoi(f[4]);
    r.algo = f[5];
    r.seed = std::stoull(f[6]);
    r.obj = std::stoi(f[7]);
    r.time_to_best_s = std::stod(f[8]);
    r.total_time_s = std::stod(f[9]);
    r.status = f[10];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::filesystem::path> ListInstances(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  const auto manifest = dir / "manifest.csv";
  if (std::filesystem::exists(manifest)) {
    for (const ManifestRow& row : ReadManifest(manifest)) out.push_back(dir / row.path);
    return out;
  }
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lfcs") out.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RunRecord> run_bench(const std::vector<std::filesystem::path>& instances,
                                 const BenchOptions& options, std::ostream* rows_out,
                                 const std::atomic<bool>* interrupt) {
  struct Job {
    std::size_t instance;
    Algorithm algo;
  };
  std::vector<Instance> loaded;
  loaded.reserve(instances.size());
  for (const auto& path : instances) loaded.push_back(ReadInstanceFile(path));
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    for (Algorithm a : options.algos) jobs.push_back({i, a});
  }

  auto run_job = [&](const Job& job) {
    const Instance& inst = loaded[job.instance];
    RunOptions run;
    run.algo = job.algo;
    run.time_limit = options.time_limit;
    run.seed = options.seed;
    run.n_rand = options.n_rand;
    run.virtual_clock = options.virtual_clock;
    if (options.cmsa_profile) run.cmsa = ProfileByName(*options.cmsa_profile);
    RunResult result;
    try {
      result = run_algorithm(inst, run);
    } catch (const InstanceTooLarge&) {
      result.status = "too_large";
    }
    return MakeRunRecord(inst, job.algo, options.seed, result);
  };

  std::vector<RunRecord> records;
  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.workers));
  for (std::size_t begin = 0; begin < jobs.size(); begin += workers) {
    if (interrupt != nullptr && interrupt->load()) break;
    const std::size_t end = std::min(jobs.size(), begin + workers);
    std::vector<std::future<RunRecord>> pending;
    for (std::size_t k = begin; k < end; ++k) {
      pending.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                   run_job, jobs[k]));
    }
    for (auto& f : pending) {
      records.push_back(f.get());
      if (rows_out != nullptr) {
        WriteRunRecord(*rows_out, records.back());
        rows_out->flush();
      }
    }
  }
  return records;
}

std::vector<AggregateRow> Aggregate(const std::vector<RunRecord>& records) {
  std::vector<std::string> algo_order;
  for (const RunRecord& r : records) {
    if (std::find(algo_order.begin(), algo_order.end(), r.algo) == algo_order.end()) {
      algo_order.push_back(r.algo);
    }
  }
  auto rank = [&algo_order](const std::string& algo) {
    return std::find(algo_order.begin(), algo_order.end(), algo) - algo_order.begin();
  };
  struct Sum {
    int count = 0;
    long long obj = 0;
    double time = 0.0;
  };
  std::map<std::tuple<int, int, long>, Sum> sums;
  for (const RunRecord& r : records) {
    Sum& s = sums[{r.n, r.sigma, static_cast<long>(rank(r.algo))}];
    ++s.count;
    s.obj += r.obj;
    s.time += r.total_time_s;
  }
  std::vector<AggregateRow> rows;
  for (const auto& [key, s] : sums) {
    AggregateRow row;
    row.n = std::get<0>(key);
    row.sigma = std::get<1>(key);
    row.algo = algo_order[std::get<2>(key)];
    row.count = s.count;
    row.mean_obj = static_cast<double>(s.obj) / s.count;
    row.mean_time_s = s.time / s.count;
    rows.push_back(row);
  }
  return rows;
}

void WriteAggregate(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "n,sigma,algo,count,mean_obj,mean_time_s\n";
  for (const AggregateRow& r : rows) {
    out << r.n << ',' << r.sigma << ',' << r.algo << ',' << r.count << ','
        << Fixed(r.mean_obj, 2) << ',' << Fixed(r.mean_time_s) << '\n';
  }
}

void WriteFeaturesHeader(std::ostream& out) { out << "instance,sigma,n,len_b,k\n"; }

void WriteFeatures(std::ostream& out, const Instance& inst) {
  out << inst.name << ',' << inst.sigma() << ',' << inst.n() << ',' << inst.len_b() << ','
      << inst.k() << '\n';
}

}  // namespace lfcs
