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

#include "chanbound/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chanbound/matrix_lab.h"

namespace chanbound {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Accepts rounding noise of a few ulps outside [0, 1] and clamps it away.
double unit_interval(double x, const char *name) {
  constexpr double kSlack = 1e-12;
  if (!(x >= -kSlack && x <= 1.0 + kSlack)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
  return std::clamp(x, 0.0, 1.0);
}

void require_decay_pair(double p, double u) {
  if (!(u > 0.0 && u <= 1.0 + 1e-12)) throw std::invalid_argument("unitarity must lie in (0, 1]");
  if (p * p > u * (1.0 + 1e-12) + 1e-15) throw std::invalid_argument("decay rate and unitarity violate p² <= u");
}

double angle_of(double chi) { return std::acos(std::sqrt(std::clamp(chi, 0.0, 1.0))); }

double cos2(double a) {
  const double c = std::cos(a);
  return c * c;
}

}  // namespace

bool BoundInterval::has_flag(const std::string &flag) const {
  return std::find(assumptions.begin(), assumptions.end(), flag) != assumptions.end();
}

BoundInterval chi00_pair_bounds(double chi_x, double chi_y) {
  chi_x = unit_interval(chi_x, "chi_x");
  chi_y = unit_interval(chi_y, "chi_y");
  const double center = chi_x * chi_y + (1.0 - chi_x) * (1.0 - chi_y);
  const double half = 2.0 * std::sqrt(chi_x * chi_y * (1.0 - chi_x) * (1.0 - chi_y));
  BoundInterval b;
  b.kind = Metric::kChi00;
  b.upper = std::min(1.0, center + half);
  b.source = "chi00 pair bound";
  // center - half = cos²(a + b). Past a + b = π/2 it rises again while the
  // composite can still reach 0 (X then Z has χ00 = 0 against a predicted 1),
  // so the lower end only holds under the angle condition.
  if (angle_of(chi_x) + angle_of(chi_y) <= kHalfPi) {
    b.lower = std::max(0.0, center - half);
    b.assumptions.push_back(kAngleConditionMet);
  } else {
    b.lower = 0.0;
    b.assumptions.push_back(kAngleConditionViolated);
  }
  return b;
}

BoundInterval chi00_seq_lower(std::span<const double> chis) {
  if (chis.empty()) throw std::invalid_argument("chi00_seq_lower needs at least one channel");
  double angle = 0.0;
  for (double c : chis) {
    c = unit_interval(c, "chi00");
    angle += angle_of(c);
  }
  BoundInterval b;
  b.kind = Metric::kChi00;
  b.upper = 1.0;
  b.source = "chi00 sequence bound";
  if (angle <= kHalfPi) {
    b.lower = chis.size() == 1 ? std::clamp(chis[0], 0.0, 1.0) : cos2(angle);
    b.assumptions.push_back(kAngleConditionMet);
  } else {
    b.lower = 0.0;
    b.assumptions.push_back(kAngleConditionViolated);
  }
  return b;
}

GrowthBound infidelity_growth_upper(double r, int m, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const double r_max = (d - 1.0) / d;
  if (!(r >= 0.0 && r <= r_max + 1e-15)) throw std::invalid_argument("infidelity out of range");
  GrowthBound g;
  g.leading_order = static_cast<double>(m) * m * r;
  if (m == 1) {
    g.bound = r;
    return g;
  }
  const double chi = convert(r, Metric::kInfidelity, Metric::kChi00, d);
  const double angle = m * angle_of(chi);
  if (angle <= kHalfPi) {
    g.bound = convert(cos2(angle), Metric::kChi00, Metric::kInfidelity, d);
  } else {
    // χ_00 = 0 is the largest infidelity any channel can reach.
    g.bound = static_cast<double>(d) / (d + 1.0);
    g.condition_met = false;
  }
  return g;
}

BoundInterval decay_pair_bounds(double p_x, double u_x, double p_y, double u_y) {
  require_decay_pair(p_x, u_x);
  require_decay_pair(p_y, u_y);
  const double tx = coherence_angle(p_x, u_x);
  const double ty = coherence_angle(p_y, u_y);
  const double scale = std::sqrt(u_x * u_y);
  BoundInterval b;
  b.kind = Metric::kDecayRate;
  b.lower = scale * std::cos(tx + ty);
  b.upper = scale * std::cos(tx - ty);
  b.source = "unitarity pair bound";
  return b;
}

CompositeDecayBound composite_decay_bound(double p, double u, int m, int d, bool unital) {
  require_decay_pair(p, u);
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  CompositeDecayBound c;
  c.sigma = unital ? 1.0 : std::sqrt(d / 2.0);
  c.center = std::pow(p, m);
  const double incoherent = std::max(0.0, u - p * p);  // u sin²θ
  c.halfwidth = c.sigma * binomial2(m) * incoherent;
  c.halfwidth_S = c.sigma * geometric_sum_S(std::min(1.0, std::abs(p)), m) * incoherent;
  return c;
}

double intermediate_regime_upper(double r, double theta, int d, int m) {
  const double coherent = (d - 1.0) * theta * theta / (2.0 * d);
  return m * (r - coherent) + static_cast<double>(m) * m * coherent;
}

BoundInterval interleaved_chi00_bounds(double chi_composite, double chi_reference) {
  chi_composite = unit_interval(chi_composite, "chi_composite");
  chi_reference = unit_interval(chi_reference, "chi_reference");
  const double a = angle_of(chi_composite);
  const double b = angle_of(chi_reference);
  BoundInterval out;
  out.kind = Metric::kChi00;
  out.source = "interleaved chi00 bound";
  out.upper = std::min(1.0, cos2(std::max(0.0, a - b)));
  if (a + b <= kHalfPi) {
    out.lower = cos2(a + b);
    out.assumptions.push_back(kAngleConditionMet);
  } else {
    out.lower = 0.0;
    out.assumptions.push_back(kAngleConditionViolated);
  }
  return out;
}

double interleaved_uncertainty_naive(double r_ref) { return 4.0 * std::numbers::sqrt2 * r_ref; }

double naive_group_bound(double r_avg, int group_size) {
  if (r_avg < 0.0 || group_size < 1) throw std::invalid_argument("naive_group_bound: invalid arguments");
  return group_size * r_avg;
}

BoundInterval interleaved_decay_bounds(double p_composite, double u_reference, double theta_reference) {
  if (!(u_reference > 0.0)) throw std::invalid_argument("reference unitarity must be positive");
  const double gamma = std::clamp(p_composite / std::sqrt(u_reference), -1.0, 1.0);
  const double spread = std::sin(theta_reference) * std::sqrt(1.0 - gamma * gamma);
  const double center = gamma * std::cos(theta_reference);
  BoundInterval b;
  b.kind = Metric::kDecayRate;
  b.lower = std::max(-1.0, center - spread);
  b.upper = std::min(1.0, center + spread);
  b.source = "interleaved unitarity bound";
  return b;
}

BoundInterval convert_interval(const BoundInterval &b, Metric to, int d) {
  BoundInterval out = b;
  out.kind = to;
  double lo = convert(b.lower, b.kind, to, d);
  double hi = convert(b.upper, b.kind, to, d);
  if (lo > hi) std::swap(lo, hi);
  if (to == Metric::kFidelity || to == Metric::kChi00) {
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, 0.0, 1.0);
  } else if (to == Metric::kInfidelity) {
    lo = std::max(0.0, lo);
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

}  // namespace chanbound
