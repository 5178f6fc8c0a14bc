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


#include "sweeps.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chanbound/bounds.h"
#include "chanbound/matrix_lab.h"
#include "chanbound/metrics.h"
#include "chanbound/random.h"
#include "chanbound/zoo.h"

namespace chanbound::tools {
namespace {

enum Tag : std::uint64_t {
  kChi00Pair = 1,
  kChi00Seq,
  kDecayPair,
  kComposite,
  kCompositeUnital,
  kInterleaved,
  kSigma,
  kSigmaUnital,
  kPairTrace,
  kProductTrace,
};

Rng trial_rng(const SweepConfig &cfg, Tag tag, int d, long i) {
  const std::uint64_t index = (static_cast<std::uint64_t>(tag) << 48) ^ (static_cast<std::uint64_t>(d) << 40) ^
                              static_cast<std::uint64_t>(i);
  return make_rng(cfg.seed, index);
}

int uniform_int(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform(Rng &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Three ensembles in rotation: Stinespring channels of random rank, channels
// near the identity, and Haar unitaries. The last two reach the regime where
// the bounds are tight.
Channel mixed_draw(int d, long i, Rng &rng) {
  switch (i % 3) {
    case 0:
      return zoo::random_cptp(d, uniform_int(rng, 1, d * d), rng());
    case 1:
      return zoo::random_near_identity(d, uniform(rng, 0.0, 0.8), uniform(rng, 0.0, 0.3), rng());
    default:
      return zoo::random_unitary(d, rng());
  }
}

RMatrix gaussian(int d, Rng &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  RMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = n(rng);
  return m;
}

RMatrix random_orthogonal(int d, Rng &rng) {
  Eigen::HouseholderQR<RMatrix> qr(gaussian(d, rng));
  return qr.householderQ();
}

double angle_of(double chi) { return std::acos(std::sqrt(std::clamp(chi, 0.0, 1.0))); }

}  // namespace

void SweepResult::record(double slack, double tol) {
  ++checked;
  min_slack = std::min(min_slack, slack);
  if (slack < -tol) ++violations;
}

double interval_slack(double value, double lo, double hi, bool fault) {
  if (fault) {
    const double mid = 0.5 * (lo + hi);
    const double quarter = 0.25 * (hi - lo);
    lo = mid - quarter;
    hi = mid + quarter;
  }
  return std::min(value - lo, hi - value);
}

SweepResult sweep_chi00_pair(const SweepConfig &cfg) {
  SweepResult r{"chi00_pair"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kChi00Pair, d, i);
      const Channel x = mixed_draw(d, i, rng);
      const Channel y = mixed_draw(d, i, rng);
      const BoundInterval b = chi00_pair_bounds(chi00(x), chi00(y));
      r.record(interval_slack(chi00(compose(x, y)), b.lower, b.upper, cfg.inject_fault), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_chi00_pair_unguarded(const SweepConfig &cfg) {
  SweepResult r{"chi00_pair_unguarded"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kChi00Pair, d, i);
      const Channel x = mixed_draw(d, i, rng);
      const Channel y = mixed_draw(d, i, rng);
      const double a = angle_of(chi00(x)), b = angle_of(chi00(y));
      const double lo = std::cos(a + b) * std::cos(a + b);
      const double hi = std::cos(a - b) * std::cos(a - b);
      r.record(interval_slack(chi00(compose(x, y)), lo, hi, cfg.inject_fault), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_chi00_seq(const SweepConfig &cfg, int max_len) {
  SweepResult r{"chi00_seq"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kChi00Seq, d, i);
      const int m = uniform_int(rng, 2, max_len);
      // Angles up to (π/2)/m keep most sequences inside the hypothesis.
      const double max_angle = 0.25 * std::numbers::pi / m;
      std::vector<Channel> seq;
      std::vector<double> chis;
      for (int k = 0; k < m; ++k) {
        seq.push_back(zoo::random_near_identity(d, max_angle, uniform(rng, 0.0, 0.1), rng()));
        chis.push_back(chi00(seq.back()));
      }
      const BoundInterval b = chi00_seq_lower(chis);
      if (!b.has_flag(kAngleConditionMet)) continue;
      double lo = b.lower;
      if (cfg.inject_fault) lo = 0.5 * (1.0 + lo);
      r.record(chi00(compose_seq(seq)) - lo, cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_decay_pair(const SweepConfig &cfg) {
  SweepResult r{"decay_pair"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kDecayPair, d, i);
      const Channel x = mixed_draw(d, i, rng);
      const Channel y = mixed_draw(d, i, rng);
      const BoundInterval b = decay_pair_bounds(decay_rate(x), unitarity(x), decay_rate(y), unitarity(y));
      r.record(interval_slack(decay_rate(compose(x, y)), b.lower, b.upper, cfg.inject_fault), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_composite_decay(const SweepConfig &cfg, bool unital, int max_len) {
  SweepResult r{unital ? "composite_decay_unital" : "composite_decay"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, unital ? kCompositeUnital : kComposite, d, i);
      const int m = uniform_int(rng, 1, max_len);
      const Channel base = unital ? zoo::random_unital(d, uniform_int(rng, 1, 4), rng())
                                  : zoo::random_near_identity(d, uniform(rng, 0.0, 0.5), uniform(rng, 0.0, 0.3), rng());
      std::vector<Channel> seq;
      for (int k = 0; k < m; ++k) seq.push_back(conjugate(base, haar_unitary(d, rng)));
      const CompositeDecayBound c = composite_decay_bound(decay_rate(base), unitarity(base), m, d, unital);
      const double half = cfg.inject_fault ? 0.5 * c.halfwidth : c.halfwidth;
      r.record(half - std::abs(decay_rate(compose_seq(seq)) - c.center), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_interleaved_decay(const SweepConfig &cfg) {
  SweepResult r{"interleaved_decay"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kInterleaved, d, i);
      const Channel gate = mixed_draw(d, i, rng);
      const Channel ref = mixed_draw(d, i + 1, rng);
      const double u_ref = unitarity(ref);
      const BoundInterval b =
          interleaved_decay_bounds(decay_rate(compose(gate, ref)), u_ref, coherence_angle(decay_rate(ref), u_ref));
      r.record(interval_slack(decay_rate(gate), b.lower, b.upper, cfg.inject_fault), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_sigma(const SweepConfig &cfg, bool unital) {
  SweepResult r{unital ? "unital_block_sigma_unital" : "unital_block_sigma"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, unital ? kSigmaUnital : kSigma, d, i);
      const Channel ch = unital ? zoo::random_unital(d, uniform_int(rng, 1, d * d), rng())
                                : zoo::random_cptp(d, uniform_int(rng, 1, d * d), rng());
      const SigmaCheck s = unital_block_sigma_check(ch);
      double bound = unital ? s.unital_bound : s.general_bound;
      if (cfg.inject_fault) bound *= 0.5;
      r.record(bound - s.sigma_max, cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_pair_trace_real(const SweepConfig &cfg) {
  SweepResult r{"pair_trace_real"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kPairTrace, d, i);
      const RMatrix m1 = gaussian(d, rng);
      const RMatrix m2 = gaussian(d, rng);
      const PairTraceBounds b = pair_trace_bounds(m1, m2);
      r.record(interval_slack(b.value, b.lower, b.upper, cfg.inject_fault), cfg.tol);
    }
  }
  return r;
}

SweepResult sweep_product_trace_real(const SweepConfig &cfg, int max_len) {
  SweepResult r{"product_trace_real"};
  for (int d : cfg.dims) {
    for (long i = 0; i < cfg.trials; ++i, ++r.trials) {
      Rng rng = trial_rng(cfg, kProductTrace, d, i);
      const int m = uniform_int(rng, 1, max_len);
      // A contraction with a random spectrum keeps every prefix norm ≤ 1.
      const RMatrix q = random_orthogonal(d, rng);
      RMatrix base = q * gaussian(d, rng).jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV).matrixU();
      for (int k = 0; k < d; ++k) base.col(k) *= uniform(rng, 0.5, 1.0);
      std::vector<RMatrix> family;
      for (int k = 0; k < m; ++k) {
        const RMatrix o = random_orthogonal(d, rng);
        family.push_back(o * base * o.transpose());
      }
      const ProductTraceBound b = product_trace_bound(family, 1.0 + 1e-9);
      const double half = cfg.inject_fault ? 0.5 * b.bound_S : b.bound_S;
      r.record(half - b.deviation, cfg.tol);
    }
  }
  return r;
}

std::vector<SweepResult> run_all(const SweepConfig &cfg) {
  std::vector<SweepResult> out = {
      sweep_chi00_pair(cfg),
      sweep_chi00_seq(cfg),
      sweep_decay_pair(cfg),
      sweep_composite_decay(cfg, false),
      sweep_composite_decay(cfg, true),
      sweep_interleaved_decay(cfg),
      sweep_sigma(cfg, false),
      sweep_sigma(cfg, true),
  };
  for (SweepResult &r : run_appendix(cfg)) out.push_back(std::move(r));
  return out;
}

std::vector<SweepResult> run_appendix(const SweepConfig &cfg) {
  return {sweep_pair_trace_real(cfg), sweep_product_trace_real(cfg)};
}

}  // namespace chanbound::tools
