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

#ifndef CHANBOUND_METRICS_H
#define CHANBOUND_METRICS_H

#include <cstdint>
#include <string>

#include "chanbound/channel.h"

namespace chanbound {

/// The four affine proxies for the average gate fidelity.
enum class Metric { kFidelity, kInfidelity, kDecayRate, kChi00 };

std::string to_string(Metric m);
Metric metric_from_string(const std::string &name);

struct MetricKind {
  Metric metric;
  int dim;
};

struct ChannelMetrics {
  double fidelity = 1.0;
  double infidelity = 0.0;
  double decay_rate = 1.0;
  double chi00 = 1.0;
  double unitarity = 1.0;
  double coherence_angle = 0.0;  ///< radians
};

/// χ_00 element of the process matrix, (1/d²) Σ_j |tr A_j|².
double chi00(const Channel &ch);
/// p = tr(E_u) / (d² - 1).
double decay_rate(const Channel &ch);
/// u = ||E_u||_F² / (d² - 1).
double unitarity(const Channel &ch);
double fidelity(const Channel &ch);
double infidelity(const Channel &ch);

/// θ = arccos(p / √u). Throws std::domain_error when u <= 0.
double coherence_angle(const Channel &ch);
/// Same formula on raw (p, u).
double coherence_angle(double p, double u);

ChannelMetrics compute_metrics(const Channel &ch);

/// Affine conversion between F, r, p and χ_00 at dimension d.
double convert(double value, MetricKind from, MetricKind to);
double convert(double value, Metric from, Metric to, int d);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Haar-average of <ψ|E(|ψ><ψ|)|ψ> by sampling. Applies the channel through
/// its Kraus operators, independent of the Liouville route used by fidelity().
Estimate fidelity_mc(const Channel &ch, int n_samples, std::uint64_t seed);

/// (d/(d-1)) E_ψ tr[E(ψ - I/d)²], sampled.
Estimate unitarity_mc(const Channel &ch, int n_samples, std::uint64_t seed);

}  // namespace chanbound

#endif  // CHANBOUND_METRICS_H
