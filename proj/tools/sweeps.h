// Copyright 2026 The chanbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Monte-Carlo soundness sweeps over the inequalities in chanbound. Each trial
// draws from make_rng(seed, index) so results do not depend on ordering.

#ifndef CHANBOUND_TOOLS_SWEEPS_H
#define CHANBOUND_TOOLS_SWEEPS_H

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace chanbound::tools {

struct SweepConfig {
  long trials = 10000;  ///< per dimension
  std::vector<int> dims = {2, 3, 4};
  std::uint64_t seed = 1;
  double tol = 1e-9;
  bool inject_fault = false;  ///< halves every two-sided halfwidth
};

struct SweepResult {
  std::string inequality;
  long trials = 0;
  long checked = 0;  ///< trials where the hypotheses held
  long violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();  ///< negative = violated

  void record(double slack, double tol);
  double max_violation() const { return min_slack < 0.0 ? -min_slack : 0.0; }
};

// Two-sided slack of value against [lo, hi]; with fault, the interval shrinks
// to half its width about the midpoint.
double interval_slack(double value, double lo, double hi, bool fault = false);

SweepResult sweep_chi00_pair(const SweepConfig &cfg);
// The two-sided interval cos²(a+b) ≤ χ ≤ cos²(a−b) without the angle guard.
SweepResult sweep_chi00_pair_unguarded(const SweepConfig &cfg);
SweepResult sweep_chi00_seq(const SweepConfig &cfg, int max_len = 8);
SweepResult sweep_decay_pair(const SweepConfig &cfg);
SweepResult sweep_composite_decay(const SweepConfig &cfg, bool unital, int max_len = 6);
SweepResult sweep_interleaved_decay(const SweepConfig &cfg);
SweepResult sweep_sigma(const SweepConfig &cfg, bool unital);
SweepResult sweep_pair_trace_real(const SweepConfig &cfg);
SweepResult sweep_product_trace_real(const SweepConfig &cfg, int max_len = 6);

// Every sweep above except the unguarded one.
std::vector<SweepResult> run_all(const SweepConfig &cfg);
// Real-matrix sweeps only.
std::vector<SweepResult> run_appendix(const SweepConfig &cfg);

}  // namespace chanbound::tools

#endif  // CHANBOUND_TOOLS_SWEEPS_H
