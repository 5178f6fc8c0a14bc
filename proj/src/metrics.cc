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

#include "chanbound/metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chanbound/random.h"

namespace chanbound {

std::string to_string(Metric m) {
  switch (m) {
    case Metric::kFidelity:
      return "F";
    case Metric::kInfidelity:
      return "r";
    case Metric::kDecayRate:
      return "p";
    case Metric::kChi00:
      return "chi00";
  }
  return "?";
}

Metric metric_from_string(const std::string &name) {
  if (name == "F" || name == "fidelity") return Metric::kFidelity;
  if (name == "r" || name == "infidelity") return Metric::kInfidelity;
  if (name == "p" || name == "decay_rate") return Metric::kDecayRate;
  if (name == "chi00") return Metric::kChi00;
  throw std::invalid_argument("unknown metric: " + name);
}

double chi00(const Channel &ch) {
  // (0,0) element of χ = (1/d) T† J T, evaluated for that entry only.
  const CVector v0 = ch.basis().choi_vectors().col(0);
  const CMatrix j = choi(ch);
  return (v0.adjoint() * j * v0)(0, 0).real() / ch.dim();
}

double decay_rate(const Channel &ch) {
  const RMatrix u = unital_block(ch);
  return u.trace() / static_cast<double>(u.rows());
}

double unitarity(const Channel &ch) {
  const RMatrix u = unital_block(ch);
  return u.squaredNorm() / static_cast<double>(u.rows());
}

double fidelity(const Channel &ch) { return convert(decay_rate(ch), Metric::kDecayRate, Metric::kFidelity, ch.dim()); }

double infidelity(const Channel &ch) {
  return convert(decay_rate(ch), Metric::kDecayRate, Metric::kInfidelity, ch.dim());
}

double coherence_angle(double p, double u) {
  if (!(u > 0.0)) throw std::domain_error("coherence angle undefined for unitarity <= 0");
  return std::acos(std::clamp(p / std::sqrt(u), -1.0, 1.0));
}

double coherence_angle(const Channel &ch) {
  const RMatrix u = unital_block(ch);
  if (!(u.squaredNorm() > 0.0)) throw std::domain_error("coherence angle undefined for unitarity <= 0");
  // atan2 of the traceless and trace parts equals arccos(p/√u) without the
  // loss of precision arccos suffers next to 1.
  const double n = static_cast<double>(u.rows());
  const double p = u.trace() / n;
  const double spread = (u - p * RMatrix::Identity(u.rows(), u.cols())).norm();
  return std::atan2(spread, u.trace() / std::sqrt(n));
}

ChannelMetrics compute_metrics(const Channel &ch) {
  ChannelMetrics m;
  const int d = ch.dim();
  m.decay_rate = decay_rate(ch);
  m.unitarity = unitarity(ch);
  m.chi00 = chi00(ch);
  m.fidelity = convert(m.decay_rate, Metric::kDecayRate, Metric::kFidelity, d);
  m.infidelity = convert(m.decay_rate, Metric::kDecayRate, Metric::kInfidelity, d);
  m.coherence_angle = m.unitarity > 0.0 ? coherence_angle(ch) : 0.0;
  return m;
}

double convert(double x, MetricKind from, MetricKind to) {
  if (from.dim != to.dim) throw std::invalid_argument("convert: dimension mismatch");
  const double d = from.dim;
  if (from.dim < 2) throw std::invalid_argument("convert: dimension must be at least 2");
  const double d2 = d * d;
  using M = Metric;
  if (from.metric == to.metric) return x;
  switch (from.metric) {
    case M::kFidelity:
      switch (to.metric) {
        case M::kInfidelity: return 1.0 - x;
        case M::kDecayRate: return (d * x - 1.0) / (d - 1.0);
        case M::kChi00: return ((d + 1.0) * x - 1.0) / d;
        default: break;
      }
      break;
    case M::kInfidelity:
      switch (to.metric) {
        case M::kFidelity: return 1.0 - x;
        case M::kDecayRate: return 1.0 - d / (d - 1.0) * x;
        case M::kChi00: return 1.0 - (d + 1.0) / d * x;
        default: break;
      }
      break;
    case M::kDecayRate:
      switch (to.metric) {
        case M::kFidelity: return ((d - 1.0) * x + 1.0) / d;
        case M::kInfidelity: return (d - 1.0) / d * (1.0 - x);
        case M::kChi00: return ((d2 - 1.0) * x + 1.0) / d2;
        default: break;
      }
      break;
    case M::kChi00:
      switch (to.metric) {
        case M::kFidelity: return (d * x + 1.0) / (d + 1.0);
        case M::kInfidelity: return d / (d + 1.0) * (1.0 - x);
        case M::kDecayRate: return (d2 * x - 1.0) / (d2 - 1.0);
        default: break;
      }
      break;
  }
  throw std::invalid_argument("convert: unknown metric pair");
}

double convert(double value, Metric from, Metric to, int d) { return convert(value, {from, d}, {to, d}); }

namespace {

template <typename Sample>
Estimate sample_mean(int n, std::uint64_t seed, Sample &&sample) {
  if (n < 1) throw std::invalid_argument("n_samples must be at least 1");
  Rng rng = make_rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample(rng);
    const double delta = x - mean;
    mean += delta / (i + 1);
    m2 += delta * (x - mean);
  }
  Estimate e;
  e.mean = mean;
  e.std_error = n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
  return e;
}

std::vector<CMatrix> kraus_view(const Channel &ch) { return ch.kraus_hint() ? *ch.kraus_hint() : to_kraus(ch); }

CMatrix apply_kraus(const std::vector<CMatrix> &kraus, const CMatrix &rho) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const CMatrix &a : kraus) out += a * rho * a.adjoint();
  return out;
}

}  // namespace

Estimate fidelity_mc(const Channel &ch, int n_samples, std::uint64_t seed) {
  const int d = ch.dim();
  const std::vector<CMatrix> kraus = kraus_view(ch);
  return sample_mean(n_samples, seed, [&](Rng &rng) {
    const CVector psi = haar_state(d, rng);
    const CMatrix rho = psi * psi.adjoint();
    return (psi.adjoint() * apply_kraus(kraus, rho) * psi)(0, 0).real();
  });
}

Estimate unitarity_mc(const Channel &ch, int n_samples, std::uint64_t seed) {
  const int d = ch.dim();
  const std::vector<CMatrix> kraus = kraus_view(ch);
  const CMatrix image_of_mixed = apply_kraus(kraus, CMatrix::Identity(d, d) / static_cast<double>(d));
  const double scale = static_cast<double>(d) / (d - 1.0);
  return sample_mean(n_samples, seed, [&](Rng &rng) {
    const CVector psi = haar_state(d, rng);
    // E(ψ - I/d) = E(ψ) - E(I/d): only the traceless input part reaches the output.
    const CMatrix out = apply_kraus(kraus, psi * psi.adjoint()) - image_of_mixed;
    return scale * (out * out).trace().real();
  });
}

}  // namespace chanbound
