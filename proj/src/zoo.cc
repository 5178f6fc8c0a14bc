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

#include "chanbound/zoo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chanbound/metrics.h"
#include "chanbound/random.h"

namespace chanbound::zoo {

Channel identity(int d) { return identity_channel(default_basis(d)); }

Channel depolarizing(double p, int d) {
  const OperatorBasis basis = default_basis(d);
  RMatrix l = RMatrix::Identity(basis.size(), basis.size()) * p;
  l(0, 0) = 1.0;
  return Channel::from_liouville(basis, std::move(l));
}

Channel pauli_channel(std::span<const double> probs) {
  const int n = static_cast<int>(probs.size());
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (d * d != n || !is_power_of_two(d) || d < 2) {
    throw std::invalid_argument("pauli_channel needs 4^n probabilities");
  }
  double total = 0.0;
  for (double q : probs) {
    if (q < 0.0) throw ValidationError("pauli_channel: negative probability");
    total += q;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("pauli_channel: probabilities must sum to 1");
  CMatrix chi = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) chi(k, k) = probs[k];
  return from_chi(chi, make_basis(d, BasisKind::kPauli));
}

Channel phase_unitary(double phi, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("phase_unitary needs an even dimension");
  CMatrix u2 = CMatrix::Zero(2, 2);
  u2(0, 0) = std::polar(1.0, phi);
  u2(1, 1) = std::polar(1.0, -phi);
  return unitary_channel(kron(u2, CMatrix::Identity(d / 2, d / 2)));
}

Channel z_rotation(double angle) {
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, -angle / 2.0);
  u(1, 1) = std::polar(1.0, angle / 2.0);
  return unitary_channel(u);
}

namespace {

RMatrix rotation_damping_liouville(double gamma, double lambda, double theta) {
  RMatrix l = RMatrix::Zero(4, 4);
  l(0, 0) = 1.0;
  l(1, 1) = gamma * std::cos(theta);
  l(1, 2) = -gamma * std::sin(theta);
  l(2, 1) = gamma * std::sin(theta);
  l(2, 2) = gamma * std::cos(theta);
  l(3, 3) = lambda;
  return l;
}

}  // namespace

Channel rotation_damping_qubit(double gamma, double lambda, double theta) {
  return Channel::from_liouville(make_basis(2, BasisKind::kPauli), rotation_damping_liouville(gamma, lambda, theta));
}

Channel amplitude_damping_qubit(double gamma_ad, double rotation) {
  if (!(gamma_ad >= 0.0 && gamma_ad <= 1.0)) throw std::invalid_argument("amplitude damping needs gamma in [0, 1]");
  CMatrix r = CMatrix::Zero(2, 2);
  r(0, 0) = std::polar(1.0, -rotation / 2.0);
  r(1, 1) = std::polar(1.0, rotation / 2.0);
  CMatrix k0 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma_ad);
  CMatrix k1 = CMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma_ad);
  const CMatrix kraus[2] = {r * k0, r * k1};
  return from_kraus(kraus);
}

Channel random_unitary(int d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return unitary_channel(haar_unitary(d, rng));
}

Channel random_cptp(int d, int kraus_rank, std::uint64_t seed) {
  if (kraus_rank < 1 || kraus_rank > d * d) throw std::invalid_argument("kraus_rank must lie in [1, d²]");
  Rng rng = make_rng(seed);
  const CMatrix v = haar_unitary(d * kraus_rank, rng).leftCols(d);
  std::vector<CMatrix> kraus;
  kraus.reserve(kraus_rank);
  for (int j = 0; j < kraus_rank; ++j) kraus.push_back(v.middleRows(j * d, d));
  return from_kraus(kraus);
}

Channel random_unital(int d, int n_unitaries, std::uint64_t seed) {
  if (n_unitaries < 1) throw std::invalid_argument("random_unital needs at least one unitary");
  Rng rng = make_rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n_unitaries);
  for (double &x : w) x = expo(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<CMatrix> kraus;
  for (int j = 0; j < n_unitaries; ++j) kraus.push_back(std::sqrt(w[j] / total) * haar_unitary(d, rng));
  return from_kraus(kraus);
}

Channel random_near_identity(int d, double max_angle, double max_mix, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const CMatrix g = ginibre(d, d, rng);
  CMatrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
  const double eps = max_angle * unif(rng) / scale;
  CVector phases(d);
  for (int k = 0; k < d; ++k) phases(k) = std::polar(1.0, -eps * eig.eigenvalues()(k));
  const CMatrix u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  const double t = max_mix * unif(rng);
  const Channel noise = random_cptp(d, d * d, rng());
  const Channel parts[2] = {identity(d), noise};
  const double weights[2] = {1.0 - t, t};
  return compose(unitary_channel(u), mix(parts, weights));
}

namespace {

struct FamilyPoint {
  double gamma = 0.0;
  double cos_theta = 0.0;
  double margin = -1.0;  ///< >= 0 iff (γ, λ, θ) is a valid channel
};

FamilyPoint family_point(double p, double u, double lambda) {
  FamilyPoint pt;
  const double g2 = (3.0 * u - lambda * lambda) / 2.0;
  if (g2 < 0.0) {
    pt.margin = g2;
    return pt;
  }
  pt.gamma = std::sqrt(g2);
  if (pt.gamma == 0.0) {
    pt.margin = std::abs(3.0 * p - lambda) < 1e-15 ? 0.0 : -1.0;
    return pt;
  }
  pt.cos_theta = (3.0 * p - lambda) / (2.0 * pt.gamma);
  const double angle_margin = 1.0 - std::abs(pt.cos_theta);
  if (angle_margin < 0.0) {
    pt.margin = angle_margin;
    return pt;
  }
  const Channel trial = Channel::unchecked(make_basis(2, BasisKind::kPauli),
                                           rotation_damping_liouville(pt.gamma, lambda, std::acos(pt.cos_theta)));
  pt.margin = std::min(angle_margin, hermitian_eigenvalues(choi(trial))(0));
  return pt;
}

// Walk from a feasible λ towards `limit` and return the last feasible value.
double window_edge(double p, double u, double feasible, double limit) {
  if (family_point(p, u, limit).margin >= -1e-12) return limit;
  double good = feasible;
  double bad = limit;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (good + bad);
    (family_point(p, u, mid).margin >= -1e-12 ? good : bad) = mid;
  }
  return good;
}

}  // namespace

Channel random_with_targets(const EnsembleSpec &spec) {
  if (spec.dim != 2) throw std::invalid_argument("random_with_targets supports qubits only");
  if (!(spec.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Rng rng = make_rng(spec.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double u = 0.0;
  double p = 0.0;
  if (spec.target_fidelity) {
    p = convert(*spec.target_fidelity, Metric::kFidelity, Metric::kDecayRate, 2);
    if (p > 1.0 + 1e-12 || p < -1.0 / 3.0) throw std::invalid_argument("target fidelity out of range");
    p = std::min(p, 1.0);
  }
  if (spec.target_unitarity) {
    u = *spec.target_unitarity;
    if (!(u > 0.0 && u <= 1.0 + 1e-12)) throw std::invalid_argument("target unitarity must lie in (0, 1]");
    u = std::min(u, 1.0);
  }
  if (!spec.target_fidelity && !spec.target_unitarity) u = unif(rng);
  if (!spec.target_fidelity) p = std::sqrt(u) * (2.0 * unif(rng) - 1.0) * (1.0 / 3.0 + 2.0 / 3.0 * unif(rng));
  if (!spec.target_unitarity) u = p * p + (1.0 - p * p) * unif(rng);

  if (p * p > u + 1e-12) {
    std::ostringstream msg;
    msg << "infeasible targets: p = " << p << " requires u >= p² = " << p * p << ", got u = " << u;
    throw std::invalid_argument(msg.str());
  }
  u = std::max(u, p * p);

  // λ = √u, γ = √u is always feasible; the window around it is found by bisection.
  const double lambda0 = std::sqrt(u);
  if (family_point(p, u, lambda0).margin < -1e-12) throw std::invalid_argument("infeasible targets for the family");
  const double lo = window_edge(p, u, lambda0, -1.0);
  const double hi = window_edge(p, u, lambda0, 1.0);
  const double lambda = lo + (hi - lo) * unif(rng);
  FamilyPoint pt = family_point(p, u, lambda);
  double lam = lambda;
  if (pt.margin < -1e-12) {
    lam = lambda0;
    pt = family_point(p, u, lam);
  }
  const double theta = (unif(rng) < 0.5 ? -1.0 : 1.0) * std::acos(std::clamp(pt.cos_theta, -1.0, 1.0));
  const RMatrix l = rotation_damping_liouville(pt.gamma, lam, theta);
  const Channel base = Channel::from_liouville(make_basis(2, BasisKind::kPauli), l, 1e-9);
  const Channel out = conjugate(base, haar_unitary(2, rng));

  const double f_err = spec.target_fidelity ? std::abs(fidelity(out) - *spec.target_fidelity) : 0.0;
  const double u_err = spec.target_unitarity ? std::abs(unitarity(out) - *spec.target_unitarity) : 0.0;
  if (f_err > spec.tolerance || u_err > spec.tolerance) {
    std::ostringstream msg;
    msg << "random_with_targets missed its targets (|ΔF| = " << f_err << ", |Δu| = " << u_err << ")";
    throw std::runtime_error(msg.str());
  }
  return out;
}

}  // namespace chanbound::zoo
