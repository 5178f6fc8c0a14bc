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


#include "commands.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chanbound/bounds.h"
#include "chanbound/io.h"
#include "chanbound/matrix_lab.h"
#include "chanbound/metrics.h"
#include "chanbound/rb.h"
#include "chanbound/zoo.h"
#include "figures.h"
#include "sweeps.h"

namespace chanbound::tools {
namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  std::string format;
  std::string out;
};

// Thrown once a verification sweep finds a violation; carries the report.
struct Violation {};

class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    os_ = file_.get();
  }
  std::ostream &stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *os_;
};

std::string format_or(const Globals &g, const std::string &fallback) { return g.format.empty() ? fallback : g.format; }

void print_json(const Globals &g, std::ostream &out, const json &j) {
  Sink sink(g.out, out);
  sink.stream() << j.dump(2) << '\n';
}

void check_output_path(const std::string &path) {
  if (path.empty()) return;
  const std::filesystem::path parent = std::filesystem::absolute(path).parent_path();
  if (!std::filesystem::is_directory(parent)) {
    throw CLI::ValidationError("--out", "directory does not exist: " + parent.string());
  }
}

// ---- metrics

void add_metrics(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("metrics", "Print the six metrics of a channel");
  auto path = std::make_shared<std::string>();
  cmd->add_option("--channel", *path, "Channel JSON file")->required()->check(CLI::ExistingFile);
  cmd->callback([&g, &out, path] {
    const ChannelMetrics m = compute_metrics(io::read_channel(*path, g.tol));
    const std::string fmt = format_or(g, "text");
    if (fmt == "json") return print_json(g, out, io::metrics_to_json(m));
    if (fmt != "text") throw CLI::ValidationError("--format", "metrics supports text or json");
    Sink sink(g.out, out);
    std::ostream &os = sink.stream();
    const std::pair<const char *, double> rows[] = {
        {"fidelity", m.fidelity},   {"infidelity", m.infidelity}, {"decay_rate", m.decay_rate},
        {"chi00", m.chi00},         {"unitarity", m.unitarity},   {"coherence_angle", m.coherence_angle},
    };
    for (const auto &[name, value] : rows) {
      os << std::left << std::setw(16) << name << io::format_double(value) << '\n';
    }
  });
}

// ---- bounds

void add_bounds(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("bounds", "Evaluate composition bounds");
  cmd->require_subcommand(1);

  auto pair_chis = std::make_shared<std::vector<double>>();
  auto *pair = cmd->add_subcommand("pair", "chi00 interval of a composition of two channels");
  pair->add_option("--chi00", *pair_chis, "chi00 of each channel")->required()->expected(2);
  pair->callback([&g, &out, pair_chis] {
    print_json(g, out, io::bound_to_json(chi00_pair_bounds((*pair_chis)[0], (*pair_chis)[1])));
  });

  auto seq_chis = std::make_shared<std::vector<double>>();
  auto *seq = cmd->add_subcommand("seq", "chi00 lower bound of a sequence");
  seq->add_option("--chi00", *seq_chis, "chi00 of each channel")->required()->expected(1, 1 << 20);
  seq->callback([&g, &out, seq_chis] { print_json(g, out, io::bound_to_json(chi00_seq_lower(*seq_chis))); });

  struct InterleavedArgs {
    double p_composite = 1.0;
    double u_ref = 1.0;
    std::optional<double> theta_ref;
    std::optional<double> p_ref;
    std::optional<int> dim;
  };
  auto a = std::make_shared<InterleavedArgs>();
  auto *inter = cmd->add_subcommand("interleaved", "Interval on the decay rate of an interleaved gate");
  inter->add_option("--p-composite", a->p_composite, "Interleaved decay rate")->required();
  inter->add_option("--u-ref", a->u_ref, "Unitarity of the reference error")->required();
  auto *theta = inter->add_option("--theta-ref", a->theta_ref, "Coherence angle of the reference error");
  inter->add_option("--p-ref", a->p_ref, "Reference decay rate, sets the angle")->excludes(theta);
  inter->add_option("--dim", a->dim, "Dimension, adds fidelity intervals")->check(CLI::Range(2, 64));
  inter->callback([&g, &out, a] {
    if (!a->theta_ref && !a->p_ref) throw CLI::RequiredError("--theta-ref or --p-ref");
    const double theta_ref = a->theta_ref ? *a->theta_ref : coherence_angle(*a->p_ref, a->u_ref);
    const BoundInterval decay = interleaved_decay_bounds(a->p_composite, a->u_ref, theta_ref);
    json j = io::bound_to_json(decay);
    if (a->dim) {
      j["fidelity"] = io::bound_to_json(convert_interval(decay, Metric::kFidelity, *a->dim));
      if (a->p_ref) {
        const rb::InterleavedReport rep = rb::interleaved_report(*a->p_ref, a->p_composite, a->u_ref, *a->dim);
        j["fidelity_chi00_route"] = io::bound_to_json(rep.chi00_route);
      }
    }
    print_json(g, out, j);
  });
}

// ---- zoo

void add_zoo(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("zoo", "Construct channels");
  cmd->require_subcommand(1);

  struct MakeArgs {
    std::string kind;
    int dim = 2;
    double p = 1.0, phi = 0.0, gamma = 1.0, lambda = 1.0, theta = 0.0;
    std::vector<double> probs;
  };
  auto m = std::make_shared<MakeArgs>();
  auto *make = cmd->add_subcommand("make", "Named channel families");
  make->add_option("--kind", m->kind)
      ->required()
      ->check(CLI::IsMember(
          {"identity", "depolarizing", "pauli", "phase", "z_rotation", "rotation_damping", "amplitude_damping"}));
  make->add_option("--dim", m->dim, "Dimension")->check(CLI::Range(2, 64));
  make->add_option("--p", m->p, "Depolarizing decay rate");
  make->add_option("--phi", m->phi, "Phase or rotation angle");
  make->add_option("--gamma", m->gamma, "Damping parameter");
  make->add_option("--lambda", m->lambda, "Dephasing parameter");
  make->add_option("--theta", m->theta, "Rotation angle");
  make->add_option("--probs", m->probs, "Pauli probabilities")->delimiter(',');
  make->callback([&g, &out, m] {
    Channel ch = zoo::identity(m->dim);
    if (m->kind == "depolarizing") ch = zoo::depolarizing(m->p, m->dim);
    if (m->kind == "pauli") ch = zoo::pauli_channel(m->probs);
    if (m->kind == "phase") ch = zoo::phase_unitary(m->phi, m->dim);
    if (m->kind == "z_rotation") ch = zoo::z_rotation(m->phi);
    if (m->kind == "rotation_damping") ch = zoo::rotation_damping_qubit(m->gamma, m->lambda, m->theta);
    if (m->kind == "amplitude_damping") ch = zoo::amplitude_damping_qubit(m->gamma, m->theta);
    print_json(g, out, io::channel_to_json(ch));
  });

  struct RandomArgs {
    std::string kind;
    int dim = 2, rank = 4, count = 2;
    double max_angle = 0.1, max_mix = 0.05;
    std::optional<double> fidelity, unitarity;
  };
  auto r = std::make_shared<RandomArgs>();
  auto *random = cmd->add_subcommand("random", "Seeded random channels");
  random->add_option("--kind", r->kind)
      ->required()
      ->check(CLI::IsMember({"unitary", "cptp", "unital", "near_identity", "targets"}));
  random->add_option("--dim", r->dim, "Dimension")->check(CLI::Range(2, 64));
  random->add_option("--rank", r->rank, "Kraus rank for cptp")->check(CLI::PositiveNumber);
  random->add_option("--count", r->count, "Unitaries mixed for unital")->check(CLI::PositiveNumber);
  random->add_option("--max-angle", r->max_angle, "Rotation scale for near_identity");
  random->add_option("--max-mix", r->max_mix, "Mixing scale for near_identity");
  random->add_option("--fidelity", r->fidelity, "Target fidelity");
  random->add_option("--unitarity", r->unitarity, "Target unitarity");
  random->callback([&g, &out, r] {
    Channel ch = zoo::identity(r->dim);
    if (r->kind == "unitary") ch = zoo::random_unitary(r->dim, g.seed);
    if (r->kind == "cptp") ch = zoo::random_cptp(r->dim, r->rank, g.seed);
    if (r->kind == "unital") ch = zoo::random_unital(r->dim, r->count, g.seed);
    if (r->kind == "near_identity") ch = zoo::random_near_identity(r->dim, r->max_angle, r->max_mix, g.seed);
    if (r->kind == "targets") {
      zoo::EnsembleSpec spec;
      spec.dim = r->dim;
      spec.target_fidelity = r->fidelity;
      spec.target_unitarity = r->unitarity;
      spec.tolerance = g.tol;
      spec.seed = g.seed;
      ch = zoo::random_with_targets(spec);
    }
    print_json(g, out, io::channel_to_json(ch));
  });
}

// ---- rb

rb::GateSet gate_set(const std::string &name) {
  return name == "clifford24" ? rb::clifford_24() : rb::twodesign_12();
}

void add_rb(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("rb", "Randomized benchmarking");
  cmd->require_subcommand(1);

  struct SimArgs {
    std::string gateset = "clifford24";
    std::string noise, gate_noise, interleave, method = "sampled";
    std::vector<int> lengths = rb::default_lengths();
    int n_seqs = 200;
  };
  auto s = std::make_shared<SimArgs>();
  auto *sim = cmd->add_subcommand("simulate", "Simulate standard or interleaved RB");
  sim->add_option("--gateset", s->gateset)->check(CLI::IsMember({"clifford24", "twodesign12"}));
  sim->add_option("--noise", s->noise, "Gate-independent noise channel JSON")->check(CLI::ExistingFile);
  sim->add_option("--interleave", s->interleave, "Label of the interleaved gate");
  sim->add_option("--gate-noise", s->gate_noise, "Noise of the interleaved gate")->check(CLI::ExistingFile);
  sim->add_option("--lengths", s->lengths, "Sequence lengths")->delimiter(',');
  sim->add_option("--n-seqs", s->n_seqs, "Sequences per length")->check(CLI::PositiveNumber);
  sim->add_option("--method", s->method)->check(CLI::IsMember({"sampled", "exact"}));
  sim->callback([&g, &out, s] {
    rb::GateSet gs = gate_set(s->gateset);
    const Channel noise = s->noise.empty() ? zoo::identity(gs.dim()) : io::read_channel(s->noise, g.tol);
    gs = rb::with_noise(std::move(gs), noise);
    rb::Mode mode = rb::Mode::standard();
    if (!s->interleave.empty()) {
      const int h = gs.find(s->interleave);
      if (h < 0) throw std::invalid_argument("unknown gate label: " + s->interleave);
      std::optional<Channel> gate_noise;
      if (!s->gate_noise.empty()) gate_noise = io::read_channel(s->gate_noise, g.tol);
      mode = rb::Mode::interleaved_with(h, gate_noise);
    }
    const rb::Method method = s->method == "exact" ? rb::Method::kExact : rb::Method::kSampled;
    const rb::Run run = rb::simulate(gs, mode, s->lengths, method, s->n_seqs, g.seed);
    const std::string fmt = format_or(g, "csv");
    if (fmt == "csv") {
      Sink sink(g.out, out);
      io::write_survival_csv(sink.stream(), run.survival);
      return;
    }
    if (fmt != "json") throw CLI::ValidationError("--format", "rb simulate supports csv or json");
    json j;
    j["fit"] = io::fit_to_json(run.fit);
    j["survival"] = json::array();
    for (const rb::SurvivalPoint &pt : run.survival) {
      j["survival"].push_back({{"m", pt.m}, {"p_surv", pt.p_surv}, {"std_error", pt.std_error}});
    }
    print_json(g, out, j);
  });

  auto in = std::make_shared<std::string>();
  auto *fit = cmd->add_subcommand("fit", "Fit A p^m + B to a survival CSV");
  fit->add_option("--in", *in, "CSV with columns m,p_surv,std_error")->required()->check(CLI::ExistingFile);
  fit->callback([&g, &out, in] {
    std::ifstream is(*in, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + *in);
    print_json(g, out, io::fit_to_json(rb::fit_decay(io::read_survival_csv(is))));
  });
}

// ---- figure

void add_figure(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("figure", "Emit figure datasets as CSV");
  cmd->require_subcommand(1);

  struct IrbArgs {
    IrbOptions opt;
    std::string sidecar;
    std::string method = "sampled";
  };
  auto a = std::make_shared<IrbArgs>();
  auto *irb = cmd->add_subcommand("irb", "Interleaved RB survival curves for two gate errors");
  irb->add_option("--n-seqs", a->opt.n_seqs, "Sequences per length")->check(CLI::PositiveNumber);
  irb->add_option("--lengths", a->opt.lengths, "Sequence lengths")->delimiter(',');
  irb->add_flag("--noiseless", a->opt.noiseless, "Replace every error by the identity");
  irb->add_option("--method", a->method)->check(CLI::IsMember({"sampled", "exact"}));
  irb->add_option("--sidecar", a->sidecar, "Fit summary JSON, defaults to <out>.json");
  irb->callback([&g, &out, a] {
    check_output_path(a->sidecar);
    a->opt.seed = g.seed;
    a->opt.exact = a->method == "exact";
    const IrbFigure fig = figure_irb(a->opt);
    {
      Sink sink(g.out, out);
      write_irb_csv(sink.stream(), fig);
    }
    std::string sidecar = a->sidecar;
    if (sidecar.empty() && !g.out.empty()) sidecar = g.out + ".json";
    if (!sidecar.empty()) {
      std::ofstream os(sidecar, std::ios::binary);
      if (!os) throw std::runtime_error("cannot open sidecar file: " + sidecar);
      os << irb_sidecar(fig, a->opt).dump(2) << '\n';
    }
  });

  auto s = std::make_shared<ScatterOptions>();
  auto *scatter = cmd->add_subcommand("scatter", "Random pairs against the interleaved fidelity bound");
  scatter->add_option("--n", s->n_per_panel, "Pairs per panel")->check(CLI::PositiveNumber);
  scatter->add_option("--fidelity", s->f_reference, "Fidelity of the reference error");
  scatter->add_option("--u", s->u_values, "Unitarity of each panel")->delimiter(',');
  scatter->callback([&g, &out, s] {
    s->seed = g.seed;
    const std::vector<ScatterRow> rows = figure_scatter(*s);
    Sink sink(g.out, out);
    write_scatter_csv(sink.stream(), rows);
  });
}

// ---- verify

json sweep_report(const SweepConfig &cfg, const std::vector<SweepResult> &results) {
  json j;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["dims"] = cfg.dims;
  j["tolerance"] = cfg.tol;
  j["fault_injected"] = cfg.inject_fault;
  j["results"] = json::array();
  long violations = 0;
  for (const SweepResult &r : results) {
    violations += r.violations;
    j["results"].push_back({{"inequality", r.inequality},
                            {"trials", r.trials},
                            {"checked", r.checked},
                            {"violations", r.violations},
                            {"min_slack", r.checked > 0 ? json(r.min_slack) : json(nullptr)},
                            {"max_violation", r.max_violation()}});
  }
  j["violations"] = violations;
  return j;
}

void add_verify(CLI::App &app, Globals &g, std::ostream &out) {
  auto *cmd = app.add_subcommand("verify", "Monte-Carlo soundness sweeps of every inequality");
  auto cfg = std::make_shared<SweepConfig>();
  auto dims = std::make_shared<std::vector<int>>();
  cmd->add_option("--trials", cfg->trials, "Trials per dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--dims", *dims, "Dimensions")->delimiter(',')->check(CLI::Range(2, 16));
  cmd->add_flag("--inject-fault", cfg->inject_fault, "Self-test: halve every halfwidth");
  auto *appendix = cmd->add_subcommand("appendix", "Real-matrix inequalities only");

  auto run = [&g, &out, cfg, dims](bool only_appendix) {
    cfg->seed = g.seed;
    cfg->tol = g.tol;
    if (!dims->empty()) {
      cfg->dims = *dims;
    } else if (only_appendix) {
      cfg->dims = {2, 3, 4, 5, 6};
    }
    const std::vector<SweepResult> results = only_appendix ? run_appendix(*cfg) : run_all(*cfg);
    const json report = sweep_report(*cfg, results);
    print_json(g, out, report);
    if (report["violations"].get<long>() > 0) throw Violation{};
  };
  appendix->callback([run] { run(true); });
  cmd->callback([cmd, appendix, run] {
    if (cmd->got_subcommand(appendix)) return;
    run(false);
  });
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"chanbound: channel metrics, composition bounds and RB simulation"};
  app.name("chanbound");
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", g.out, "Output file, stdout when omitted");
  app.parse_complete_callback([&g] { check_output_path(g.out); });

  add_metrics(app, g, out);
  add_bounds(app, g, out);
  add_zoo(app, g, out);
  add_rb(app, g, out);
  add_figure(app, g, out);
  add_verify(app, g, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Violation &) {
    return kExitViolation;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace chanbound::tools
