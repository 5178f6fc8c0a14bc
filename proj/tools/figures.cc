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


#include "figures.h"

#include <ostream>

#include "chanbound/bounds.h"
#include "chanbound/io.h"
#include "chanbound/metrics.h"
#include "chanbound/random.h"
#include "chanbound/zoo.h"

namespace chanbound::tools {

IrbFigure figure_irb(const IrbOptions &opt) {
  const rb::IrbDemo demo = rb::make_irb_demo();
  const Channel ref = opt.noiseless ? zoo::identity(2) : demo.reference;
  const rb::GateSet gs = rb::with_noise(rb::twodesign_12(), ref);
  const int h = gs.find("Z");
  const rb::Method method = opt.exact ? rb::Method::kExact : rb::Method::kSampled;

  IrbFigure fig;
  fig.reference_fidelity = fidelity(ref);
  fig.reference_unitarity = unitarity(ref);
  fig.reference_fit = rb::simulate(gs, rb::Mode::standard(), opt.lengths, method, opt.n_seqs, opt.seed).fit;

  const std::pair<const char *, Channel> cases[] = {
      {"coherent", opt.noiseless ? zoo::identity(2) : demo.coherent_gate_error},
      {"stochastic", opt.noiseless ? zoo::identity(2) : demo.stochastic_gate_error},
  };
  for (const auto &[name, gate_error] : cases) {
    const rb::Mode mode = rb::Mode::interleaved_with(h, gate_error);
    const rb::Run run = rb::simulate(gs, mode, opt.lengths, method, opt.n_seqs, opt.seed);
    IrbScenario sc;
    sc.name = name;
    sc.gate_fidelity = fidelity(gate_error);
    sc.composite_fidelity = fidelity(compose(gate_error, ref));
    sc.exact_decay = decay_rate(rb::step_channel(gs, mode));
    sc.fit = run.fit;
    fig.scenarios.push_back(sc);
    for (const rb::SurvivalPoint &pt : run.survival) fig.rows.push_back({name, pt.m, pt.p_surv, pt.std_error});
  }
  return fig;
}

void write_irb_csv(std::ostream &os, const IrbFigure &fig) {
  os << "scenario,m,p_surv,std_error\n";
  for (const IrbRow &r : fig.rows) {
    os << r.scenario << ',' << r.m << ',' << io::format_double(r.p_surv) << ',' << io::format_double(r.std_error)
       << '\n';
  }
}

nlohmann::json irb_sidecar(const IrbFigure &fig, const IrbOptions &opt) {
  nlohmann::json j;
  j["seed"] = opt.seed;
  j["n_seqs"] = opt.n_seqs;
  j["method"] = opt.exact ? "exact" : "sampled";
  j["reference"] = {{"fidelity", fig.reference_fidelity},
                    {"unitarity", fig.reference_unitarity},
                    {"fit", io::fit_to_json(fig.reference_fit)}};
  j["scenarios"] = nlohmann::json::array();
  for (const IrbScenario &sc : fig.scenarios) {
    j["scenarios"].push_back({{"scenario", sc.name},
                              {"gate_fidelity", sc.gate_fidelity},
                              {"composite_fidelity", sc.composite_fidelity},
                              {"exact_decay", sc.exact_decay},
                              {"fit", io::fit_to_json(sc.fit)}});
  }
  return j;
}

std::vector<ScatterRow> figure_scatter(const ScatterOptions &opt) {
  if (opt.n_per_panel < 1) throw std::invalid_argument("need at least one pair per panel");
  std::vector<ScatterRow> rows;
  rows.reserve(opt.u_values.size() * opt.n_per_panel);
  for (size_t panel = 0; panel < opt.u_values.size(); ++panel) {
    const double u_ref = opt.u_values[panel];
    for (int i = 0; i < opt.n_per_panel; ++i) {
      Rng rng = make_rng(opt.seed, (static_cast<std::uint64_t>(panel) << 32) | static_cast<std::uint64_t>(i));
      zoo::EnsembleSpec ref_spec;
      ref_spec.target_fidelity = opt.f_reference;
      ref_spec.target_unitarity = u_ref;
      ref_spec.seed = rng();
      const Channel ref = zoo::random_with_targets(ref_spec);

      const double f_gate = std::uniform_real_distribution<double>(opt.min_gate_fidelity, 1.0)(rng);
      const double p_gate = 2.0 * f_gate - 1.0;
      zoo::EnsembleSpec gate_spec;
      gate_spec.target_fidelity = f_gate;
      gate_spec.target_unitarity = std::uniform_real_distribution<double>(p_gate * p_gate, 1.0)(rng);
      gate_spec.seed = rng();
      const Channel gate = zoo::random_with_targets(gate_spec);

      const double p_comp = decay_rate(compose(gate, ref));
      const double u = unitarity(ref);
      const BoundInterval b = convert_interval(
          interleaved_decay_bounds(p_comp, u, coherence_angle(ref)), Metric::kFidelity, 2);
      rows.push_back({u_ref, fidelity(compose(gate, ref)), fidelity(gate), unitarity(gate), b.lower, b.upper});
    }
  }
  return rows;
}

void write_scatter_csv(std::ostream &os, const std::vector<ScatterRow> &rows) {
  os << "u_ref,F_composite,F_individual,u_individual,bound_lower,bound_upper\n";
  for (const ScatterRow &r : rows) {
    os << io::format_double(r.u_ref) << ',' << io::format_double(r.f_composite) << ','
       << io::format_double(r.f_individual) << ',' << io::format_double(r.u_individual) << ','
       << io::format_double(r.bound_lower) << ',' << io::format_double(r.bound_upper) << '\n';
  }
}

}  // namespace chanbound::tools
