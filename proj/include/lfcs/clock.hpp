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

#ifndef LFCS_CLOCK_HPP_
#define LFCS_CLOCK_HPP_

#include <chrono>
#include <cstdint>
#include <vector>

namespace lfcs {

// Elapsed-time source for the anytime solvers.
//
// A wall clock reads std::chrono::steady_clock. A virtual clock only moves
// when work is charged to it, so runs driven by a virtual clock are
// bit-for-bit reproducible: every time-dependent branch (time limits, the
// solve-time test of the adaptive loop) sees the same values on every rerun.
class Clock {
 public:
  // Virtual cost of one dynamic-programming cell and of one search node.
  static constexpr double kSecondsPerCell = 1e-9;
  static constexpr double kSecondsPerNode = 1e-6;

  static Clock Wall() { return Clock(false); }
  static Clock Virtual() { return Clock(true); }

  bool is_virtual() const { return virtual_; }

  double Elapsed() const {
    if (virtual_) return virtual_seconds_;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  void ChargeCells(std::int64_t cells) {
    if (virtual_) virtual_seconds_ += static_cast<double>(cells) * kSecondsPerCell;
  }
  void ChargeNodes(std::int64_t nodes) {
    if (virtual_) virtual_seconds_ += static_cast<double>(nodes) * kSecondsPerNode;
  }

 private:
  explicit Clock(bool is_virtual)
      : virtual_(is_virtual), start_(std::chrono::steady_clock::now()) {}

  bool virtual_;
  double virtual_seconds_ = 0.0;
  std::chrono::steady_clock::time_point start_;
};

struct TrajectoryPoint {
  double seconds = 0.0;
  int obj = 0;
};

// Clock plus incumbent history shared by one solver run.
struct SearchContext {
  explicit SearchContext(Clock c = Clock::Wall()) : clock(c) {}

  // Records a new incumbent value; non-improving values are ignored so the
  // trajectory stays non-decreasing.
  void Improved(int obj) {
    if (!trajectory.empty() && obj <= trajectory.back().obj) return;
    trajectory.push_back({clock.Elapsed(), obj});
  }

  double TimeToBest() const {
    return trajectory.empty() ? 0.0 : trajectory.back().seconds;
  }

  Clock clock;
  std::vector<TrajectoryPoint> trajectory;
};

}  // namespace lfcs

#endif  // LFCS_CLOCK_HPP_
