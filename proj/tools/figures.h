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


// Datasets behind the two figure subcommands.

#ifndef CHANBOUND_TOOLS_FIGURES_H
#define CHANBOUND_TOOLS_FIGURES_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chanbound/rb.h"

namespace chanbound::tools {

struct IrbRow {
  std::string scenario;
  int m = 0;
  double p_surv = 0.0;
  double std_error = 0.0;
};

struct IrbScenario {
  std::string name;
  double gate_fidelity = 1.0;       ///< F(E_h)
  double composite_fidelity = 1.0;  ///< F(E_h E)
  double exact_decay = 1.0;         ///< p of the twirled step channel
  rb::DecayFit fit;
};

struct IrbFigure {
  std::vector<IrbRow> rows;
  std::vector<IrbScenario> scenarios;
  double reference_fidelity = 1.0;
  double reference_unitarity = 1.0;
  rb::DecayFit reference_fit;  ///< standard RB on the same gate set
};

struct IrbOptions {
  std::uint64_t seed = 1;
  int n_seqs = 200;
  std::vector<int> lengths = rb::default_lengths();
  bool noiseless = false;
  bool exact = false;
};

// Interleaved RB on the 12-element qubit 2-design with h = Z. The reference
// error is D_q ∘ R_z(α). The coherent scenario uses the gate error R_z(β) and
// the stochastic one uses a depolarizing error.
IrbFigure figure_irb(const IrbOptions &opt);
void write_irb_csv(std::ostream &os, const IrbFigure &fig);
nlohmann::json irb_sidecar(const IrbFigure &fig, const IrbOptions &opt);

struct ScatterRow {
  double u_ref = 1.0;
  double f_composite = 1.0;
  double f_individual = 1.0;
  double u_individual = 1.0;
  double bound_lower = 0.0;
  double bound_upper = 1.0;
};

struct ScatterOptions {
  std::uint64_t seed = 1;
  int n_per_panel = 1000;
  double f_reference = 0.9975;
  std::vector<double> u_values = {1.0, 0.993, 0.9903, 0.99003};
  double min_gate_fidelity = 0.995;
};

// For each u value, n pairs (E_h, E) with F(E) and u(E) pinned and E_h drawn
// with random fidelity and unitarity. Bounds are on F(E_h) from p(E_h E).
std::vector<ScatterRow> figure_scatter(const ScatterOptions &opt);
void write_scatter_csv(std::ostream &os, const std::vector<ScatterRow> &rows);

}  // namespace chanbound::tools

#endif  // CHANBOUND_TOOLS_FIGURES_H
