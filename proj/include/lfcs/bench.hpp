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

#ifndef LFCS_BENCH_HPP_
#define LFCS_BENCH_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lfcs/algorithms.hpp"
#include "lfcs/instance.hpp"

namespace lfcs {

// One row of the results CSV.
struct RunRecord {
  std::string instance;
  int n = 0;
  int sigma = 0;
  int len_b = 0;
  int k = 0;
  std::string algo;
  std::uint64_t seed = 0;
  int obj = 0;
  double time_to_best_s = 0.0;
  double total_time_s = 0.0;
  std::string status;
};

RunRecord MakeRunRecord(const Instance& inst, Algorithm algo, std::uint64_t seed,
                        const RunResult& result);

void WriteRunRecordHeader(std::ostream& out);
void WriteRunRecord(std::ostream& out, const RunRecord& r);
std::vector<RunRecord> ReadRunRecords(const std::filesystem::path& path);

struct BenchOptions {
  std::vector<Algorithm> algos{Algorithm::kCmsa};
  double time_limit = 600.0;
  std::uint64_t seed = 1;
  int n_rand = 10000;
  int workers = 1;
  bool virtual_clock = false;
  std::optional<std::string> cmsa_profile;
};

// Instance files of a benchmark directory: manifest.csv order when present,
// otherwise every *.lfcs file sorted by name.
std::vector<std::filesystem::path> ListInstances(const std::filesystem::path& dir);

// Runs every algorithm on every instance. Rows are streamed to rows_out (if
// given) as soon as they are complete, in input order. Setting *interrupt
// stops before the next run; completed rows are kept.
std::vector<RunRecord> run_bench(const std::vector<std::filesystem::path>& instances,
                                 const BenchOptions& options, std::ostream* rows_out = nullptr,
                                 const std::atomic<bool>* interrupt = nullptr);

struct AggregateRow {
  int n = 0;
  int sigma = 0;
  std::string algo;
  int count = 0;
  double mean_obj = 0.0;
  double mean_time_s = 0.0;
};

// Per (n, sigma, algo) means, sorted by n, sigma, then first appearance of
// the algorithm.
std::vector<AggregateRow> Aggregate(const std::vector<RunRecord>& records);
void WriteAggregate(std::ostream& out, const std::vector<AggregateRow>& rows);

// instance,sigma,n,len_b,k where k = |M|.
void WriteFeaturesHeader(std::ostream& out);
void WriteFeatures(std::ostream& out, const Instance& inst);

}  // namespace lfcs

#endif  // LFCS_BENCH_HPP_
