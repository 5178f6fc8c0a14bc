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

#ifndef CHANBOUND_BOUNDS_H
#define CHANBOUND_BOUNDS_H

#include <span>
#include <string>
#include <vector>

#include "chanbound/metrics.h"

namespace chanbound {

/// A certified interval for one metric, labeled with the inequality that
/// produced it. Failed hypotheses degrade the interval and add a flag rather
/// than throwing.
struct BoundInterval {
  Metric kind = Metric::kChi00;
  double lower = 0.0;
  double upper = 1.0;
  std::string source;
  std::vector<std::string> assumptions;

  double width() const { return upper - lower; }
  bool contains(double x, double slack = 0.0) const { return x >= lower - slack && x <= upper + slack; }
  bool has_flag(const std::string &flag) const;
};

inline constexpr const char *kAngleConditionMet = "angle condition satisfied";
inline constexpr const char *kAngleConditionViolated = "angle condition violated";

/// Two-channel composite χ_00 interval: center χxχy + (1-χx)(1-χy),
/// halfwidth 2√(χxχy(1-χx)(1-χy)).
BoundInterval chi00_pair_bounds(double chi_x, double chi_y);

/// Lower bound cos²(Σ arccos√χ_i) on the composite χ_00, valid while the
/// angle sum stays within π/2.
BoundInterval chi00_seq_lower(std::span<const double> chis);

struct GrowthBound {
  double bound = 0.0;          ///< exact worst-case infidelity after m steps
  double leading_order = 0.0;  ///< m² r
  bool condition_met = true;
};

/// Worst-case infidelity of m channels of infidelity r each.
GrowthBound infidelity_growth_upper(double r, int m, int d);

/// Interval on p(XY) from (p, u) of each factor.
BoundInterval decay_pair_bounds(double p_x, double u_x, double p_y, double u_y);

struct CompositeDecayBound {
  double halfwidth = 0.0;    ///< σ C(m,2) u sin²θ, the default form
  double halfwidth_S = 0.0;  ///< σ S(|p|, m) u sin²θ, never larger
  double sigma = 1.0;
  double center = 1.0;       ///< p^m
};

/// |p(X_1...X_m) - p^m| bound for m channels sharing (p, u). σ = √(d/2) in
/// general and 1 for unital channels.
CompositeDecayBound composite_decay_bound(double p, double u, int m, int d, bool unital);

/// m(r - (d-1)θ²/(2d)) + m²(d-1)θ²/(2d). The caller asserts the sequence is
/// unital or single-qubit.
double intermediate_regime_upper(double r, double theta, int d, int m);

/// Interval on χ_00 of an individual gate from χ_00 of the interleaved
/// composite and of the reference error, computed in angle space.
BoundInterval interleaved_chi00_bounds(double chi_composite, double chi_reference);

/// 4√2 r, the χ_00-route spread on r(E_h) when r(E_h E) ≈ 2 r(E).
double interleaved_uncertainty_naive(double r_ref);

/// |G| r: the bound on any single gate's infidelity from the gate-set average.
double naive_group_bound(double r_avg, int group_size);

/// Interval on p of an individual gate: with γ = p(XY)/√u_y,
/// [γ cos θ_y - sin θ_y √(1-γ²), γ cos θ_y + sin θ_y √(1-γ²)].
BoundInterval interleaved_decay_bounds(double p_composite, double u_reference, double theta_reference);

/// Map an interval onto another metric at dimension d (all conversions are
/// increasing except to r, which flips the endpoints).
BoundInterval convert_interval(const BoundInterval &b, Metric to, int d);

}  // namespace chanbound

#endif  // CHANBOUND_BOUNDS_H
