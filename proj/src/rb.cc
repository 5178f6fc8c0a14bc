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

#include "chanbound/rb.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "chanbound/random.h"
#include "chanbound/zoo.h"

namespace chanbound::rb {

namespace {

CMatrix phase_normalize(const CMatrix &u) {
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const cplx z = u(k % u.rows(), k / u.rows());
    if (std::abs(z) > 1e-9) return u * (std::abs(z) / z);
  }
  return u;
}

bool same_up_to_phase(const CMatrix &a, const CMatrix &b) { return (a - b).cwiseAbs().maxCoeff() < 1e-9; }

CMatrix pauli(char which) {
  const cplx i(0.0, 1.0);
  CMatrix m = CMatrix::Zero(2, 2);
  switch (which) {
    case 'X': m << 0.0, 1.0, 1.0, 0.0; break;
    case 'Y': m << 0.0, -i, i, 0.0; break;
    case 'Z': m << 1.0, 0.0, 0.0, -1.0; break;
    default: m = CMatrix::Identity(2, 2);
  }
  return m;
}

// Labels for elements that have a common name.
std::vector<std::pair<std::string, CMatrix>> named_gates() {
  const cplx i(0.0, 1.0);
  CMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  CMatrix s = CMatrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = i;
  return {{"I", pauli('I')}, {"X", pauli('X')}, {"Y", pauli('Y')}, {"Z", pauli('Z')},
          {"H", h},          {"S", s},          {"Sdg", s.adjoint()}};
}

RVector liouville_vector(const OperatorBasis &basis, const CMatrix &op) { return basis.coefficients(op).real(); }

double bisect(const std::function<double(double)> &f, double lo, double hi, int iterations = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo * fhi > 0.0) throw std::runtime_error("bisect: root not bracketed");
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-16) break;
  }
  return 0.5 * (lo + hi);
}

void require_gate_independent(const GateSet &gs) {
  const RMatrix first = change_basis(gs.noise.front(), default_basis(gs.dim())).liouville();
  for (const Channel &e : gs.noise) {
    if ((change_basis(e, default_basis(gs.dim())).liouville() - first).cwiseAbs().maxCoeff() > 1e-12) {
      throw std::invalid_argument("exact averaging requires gate-independent noise; use sampling");
    }
  }
}

}  // namespace

int GateSet::find(const CMatrix &u) const {
  const CMatrix n = phase_normalize(u);
  for (int k = 0; k < size(); ++k) {
    if (same_up_to_phase(unitaries[k], n)) return k;
  }
  return -1;
}

int GateSet::find(const std::string &label) const {
  for (int k = 0; k < size(); ++k) {
    if (labels[k] == label) return k;
  }
  return -1;
}

GateSet generate_group(const std::string &name, const std::vector<CMatrix> &generators) {
  if (generators.empty()) throw std::invalid_argument("generate_group needs generators");
  const int d = static_cast<int>(generators.front().rows());
  GateSet gs;
  gs.name = name;
  gs.unitaries.push_back(phase_normalize(CMatrix::Identity(d, d)));
  for (size_t frontier = 0; frontier < gs.unitaries.size(); ++frontier) {
    for (const CMatrix &g : generators) {
      const CMatrix cand = phase_normalize(g * gs.unitaries[frontier]);
      if (gs.find(cand) < 0) gs.unitaries.push_back(cand);
      if (gs.unitaries.size() > 10000) throw std::runtime_error("generate_group: group too large");
    }
  }
  const int n = gs.size();
  gs.table.assign(n, std::vector<int>(n, -1));
  gs.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      gs.table[a][b] = gs.find(gs.unitaries[a] * gs.unitaries[b]);
      if (gs.table[a][b] < 0) throw std::logic_error("generate_group: closure failed");
    }
  }
  gs.identity_index = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (gs.table[a][b] == gs.identity_index) gs.inverse[a] = b;
    }
  }
  const auto names = named_gates();
  const OperatorBasis basis = default_basis(d);
  for (int k = 0; k < n; ++k) {
    std::string label = "g" + std::to_string(k);
    if (d == 2) {
      for (const auto &[nm, m] : names) {
        if (same_up_to_phase(phase_normalize(m), gs.unitaries[k])) label = nm;
      }
    }
    gs.labels.push_back(label);
    gs.ideal.push_back(unitary_channel(gs.unitaries[k], basis).liouville());
    gs.noise.push_back(identity_channel(basis));
  }
  return gs;
}

GateSet clifford_24() {
  const auto names = named_gates();
  return generate_group("clifford24", {names[4].second, names[5].second});
}

GateSet twodesign_12() {
  // exp(-i (π/3) n·σ) with n = (1,1,1)/√3
  const cplx i(0.0, 1.0);
  const double c = std::cos(std::numbers::pi / 3.0);
  const double s = std::sin(std::numbers::pi / 3.0) / std::sqrt(3.0);
  const CMatrix r = c * pauli('I') - i * s * (pauli('X') + pauli('Y') + pauli('Z'));
  return generate_group("twodesign12", {pauli('X'), pauli('Y'), r});
}

GateSet with_noise(GateSet gs, const Channel &noise) {
  if (noise.dim() != gs.dim()) throw std::invalid_argument("noise dimension does not match the gate set");
  const Channel n = change_basis(noise, default_basis(gs.dim()));
  for (Channel &e : gs.noise) e = n;
  return gs;
}

double frame_potential(const GateSet &gs) {
  double acc = 0.0;
  for (const CMatrix &g : gs.unitaries) {
    for (const CMatrix &h : gs.unitaries) acc += std::pow(std::abs((g.adjoint() * h).trace()), 4);
  }
  return acc / (static_cast<double>(gs.size()) * gs.size());
}

Channel average_error(const GateSet &gs) {
  if (static_cast<int>(gs.noise.size()) != gs.size()) throw std::invalid_argument("noise map is incomplete");
  const std::vector<double> w(gs.noise.size(), 1.0 / gs.size());
  return mix(gs.noise, w);
}

Channel twirl(const GateSet &gs, const Channel &ch) {
  const Channel c = change_basis(ch, default_basis(gs.dim()));
  RMatrix acc = RMatrix::Zero(c.liouville().rows(), c.liouville().cols());
  for (const RMatrix &g : gs.ideal) acc += g.transpose() * c.liouville() * g;
  return Channel::unchecked(c.basis(), acc / static_cast<double>(gs.size()));
}

CMatrix ground_projector(int d) {
  CMatrix p = CMatrix::Zero(d, d);
  p(0, 0) = 1.0;
  return p;
}

Channel step_channel(const GateSet &gs, const Mode &mode) {
  const OperatorBasis basis = default_basis(gs.dim());
  const Channel e = change_basis(gs.noise.front(), basis);
  if (!mode.interleaved) return e;
  if (mode.gate < 0 || mode.gate >= gs.size()) throw std::invalid_argument("interleaved gate index out of range");
  const Channel eh = change_basis(mode.gate_noise ? *mode.gate_noise : gs.noise[mode.gate], basis);
  const RMatrix &h = gs.ideal[mode.gate];
  return Channel::unchecked(basis, eh.liouville() * h * e.liouville() * h.transpose());
}

double survival_exact(const GateSet &gs, const Mode &mode, int m, const CMatrix &state, const CMatrix &meas) {
  if (m < 1) throw std::invalid_argument("sequence length must be at least 1");
  require_gate_independent(gs);
  const OperatorBasis basis = default_basis(gs.dim());
  const RMatrix twirled = twirl(gs, step_channel(gs, mode)).liouville();
  const RMatrix e_inv = change_basis(gs.noise.front(), basis).liouville();
  RVector x = liouville_vector(basis, state);
  for (int k = 0; k < m; ++k) x = twirled * x;
  x = e_inv * x;
  return liouville_vector(basis, meas).dot(x);
}

Estimate survival_sampled(const GateSet &gs, const Mode &mode, int m, int n_seqs, std::uint64_t seed,
                          const CMatrix &state, const CMatrix &meas) {
  if (n_seqs < 1) throw std::invalid_argument("n_seqs must be at least 1");
  if (m < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (mode.interleaved && (mode.gate < 0 || mode.gate >= gs.size())) {
    throw std::invalid_argument("interleaved gate index out of range");
  }
  const OperatorBasis basis = default_basis(gs.dim());
  const int n = gs.size();
  // Noisy gate = noise after ideal gate.
  std::vector<RMatrix> noisy(n);
  for (int g = 0; g < n; ++g) noisy[g] = change_basis(gs.noise[g], basis).liouville() * gs.ideal[g];
  RMatrix interleaved_step;
  if (mode.interleaved) {
    const Channel eh = mode.gate_noise ? *mode.gate_noise : gs.noise[mode.gate];
    interleaved_step = change_basis(eh, basis).liouville() * gs.ideal[mode.gate];
  }
  const RVector rho = liouville_vector(basis, state);
  const RVector q = liouville_vector(basis, meas);

  std::uniform_int_distribution<int> pick(0, n - 1);
  double mean = 0.0;
  double m2 = 0.0;
  for (int s = 0; s < n_seqs; ++s) {
    Rng rng = make_rng(seed, (static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint64_t>(s));
    RVector x = rho;
    int total = gs.identity_index;
    for (int k = 0; k < m; ++k) {
      const int g = pick(rng);
      x = noisy[g] * x;
      total = gs.table[g][total];
      if (mode.interleaved) {
        x = interleaved_step * x;
        total = gs.table[mode.gate][total];
      }
    }
    x = noisy[gs.inverse[total]] * x;
    const double y = q.dot(x);
    const double delta = y - mean;
    mean += delta / (s + 1);
    m2 += delta * (y - mean);
  }
  Estimate e;
  e.mean = mean;
  e.std_error = n_seqs > 1 ? std::sqrt(m2 / (n_seqs - 1) / n_seqs) : 0.0;
  return e;
}

DecayFit fit_decay(const std::vector<SurvivalPoint> &points) {
  const int n = static_cast<int>(points.size());
  std::vector<int> ms;
  for (const auto &pt : points) ms.push_back(pt.m);
  std::sort(ms.begin(), ms.end());
  if (std::unique(ms.begin(), ms.end()) - ms.begin() < 3) {
    throw std::invalid_argument("fit_decay needs at least three distinct lengths");
  }

  RVector y(n);
  RVector mv(n);
  for (int i = 0; i < n; ++i) {
    y(i) = points[i].p_surv;
    mv(i) = points[i].m;
  }

  // A and B are linear given p.
  auto linear_solve = [&](double p, double &a, double &b) {
    RMatrix x(n, 2);
    for (int i = 0; i < n; ++i) {
      x(i, 0) = std::pow(p, mv(i));
      x(i, 1) = 1.0;
    }
    const Eigen::Vector2d coef = x.colPivHouseholderQr().solve(y);
    a = coef(0);
    b = coef(1);
    return (x * coef - y).squaredNorm();
  };

  double best_p = 0.5;
  double best_a = 0.0;
  double best_b = 0.0;
  double best_r = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 600; ++k) {
    // Denser near p = 1, where RB decays live.
    const double p = 1.0 - std::pow(10.0, -7.0 * k / 600.0) * 0.99;
    double a, b;
    const double r = linear_solve(p, a, b);
    if (r < best_r) {
      best_r = r;
      best_p = p;
      best_a = a;
      best_b = b;
    }
  }

  Eigen::Vector3d theta(best_a, best_b, best_p);
  auto residuals = [&](const Eigen::Vector3d &t) {
    RVector r(n);
    for (int i = 0; i < n; ++i) r(i) = t(0) * std::pow(t(2), mv(i)) + t(1) - y(i);
    return r;
  };
  auto jacobian = [&](const Eigen::Vector3d &t) {
    RMatrix j(n, 3);
    for (int i = 0; i < n; ++i) {
      j(i, 0) = std::pow(t(2), mv(i));
      j(i, 1) = 1.0;
      j(i, 2) = t(0) * mv(i) * std::pow(t(2), mv(i) - 1.0);
    }
    return j;
  };

  DecayFit fit;
  double lambda = 1e-3;
  double cost = residuals(theta).squaredNorm();
  bool converged = cost == 0.0;
  int it = 0;
  for (; it < 500 && !converged; ++it) {
    const RMatrix j = jacobian(theta);
    const RVector r = residuals(theta);
    const Eigen::Matrix3d jtj = j.transpose() * j;
    const Eigen::Vector3d g = j.transpose() * r;
    Eigen::Matrix3d damped = jtj;
    for (int k = 0; k < 3; ++k) damped(k, k) += lambda * std::max(jtj(k, k), 1e-300);
    const Eigen::Vector3d step = -damped.ldlt().solve(g);
    const Eigen::Vector3d cand = theta + step;
    const double cand_cost = residuals(cand).squaredNorm();
    if (std::isfinite(cand_cost) && cand_cost <= cost) {
      const double rel_gain = cost > 0.0 ? (cost - cand_cost) / cost : 0.0;
      theta = cand;
      cost = cand_cost;
      lambda = std::max(lambda * 0.1, 1e-15);
      if (step.cwiseAbs().maxCoeff() < 1e-15 * (1.0 + theta.cwiseAbs().maxCoeff()) || rel_gain < 1e-15 ||
          cost < 1e-30) {
        converged = true;
      }
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) converged = true;  // no descent direction left: at a minimum
    }
  }
  if (!converged) throw std::runtime_error("fit_decay did not converge");

  fit.A = theta(0);
  fit.B = theta(1);
  fit.p = theta(2);
  fit.residual = std::sqrt(cost);
  fit.iterations = it;
  fit.identifiable = std::abs(fit.A) > 1e-8 * (1.0 + std::abs(fit.B));
  if (fit.identifiable && n > 3) {
    const RMatrix j = jacobian(theta);
    const Eigen::Matrix3d jtj = j.transpose() * j;
    const double sigma2 = cost / (n - 3);
    Eigen::FullPivLU<Eigen::Matrix3d> lu(jtj);
    if (lu.isInvertible()) fit.p_std_error = std::sqrt(std::max(0.0, sigma2 * lu.inverse()(2, 2)));
  }
  return fit;
}

std::vector<int> default_lengths() { return {1, 2, 4, 8, 16, 32, 64, 128}; }

Run simulate(const GateSet &gs, const Mode &mode, const std::vector<int> &lengths, Method method, int n_seqs,
             std::uint64_t seed) {
  if (lengths.empty()) throw std::invalid_argument("no sequence lengths given");
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1 || (i > 0 && lengths[i] <= lengths[i - 1])) {
      throw std::invalid_argument("sequence lengths must be positive and strictly increasing");
    }
  }
  Run run;
  run.mode = mode;
  run.lengths = lengths;
  run.method = method;
  run.n_seqs = n_seqs;
  run.seed = seed;
  const CMatrix ground = ground_projector(gs.dim());
  for (int m : lengths) {
    SurvivalPoint pt;
    pt.m = m;
    if (method == Method::kExact) {
      pt.p_surv = survival_exact(gs, mode, m, ground, ground);
    } else {
      const Estimate e = survival_sampled(gs, mode, m, n_seqs, seed, ground, ground);
      pt.p_surv = e.mean;
      pt.std_error = e.std_error;
    }
    run.survival.push_back(pt);
  }
  if (run.survival.size() >= 3) run.fit = fit_decay(run.survival);
  return run;
}

InterleavedReport interleaved_report(double p_std, double p_int, double u_ref, int d) {
  InterleavedReport rep;
  rep.p_standard = p_std;
  rep.p_interleaved = p_int;
  rep.u_reference = u_ref;
  rep.theta_reference = coherence_angle(p_std, u_ref);

  const double chi_ref = std::clamp(convert(p_std, Metric::kDecayRate, Metric::kChi00, d), 0.0, 1.0);
  const double chi_comp = std::clamp(convert(p_int, Metric::kDecayRate, Metric::kChi00, d), 0.0, 1.0);
  rep.chi00_route = convert_interval(interleaved_chi00_bounds(chi_comp, chi_ref), Metric::kFidelity, d);
  rep.unitarity_route =
      convert_interval(interleaved_decay_bounds(p_int, u_ref, rep.theta_reference), Metric::kFidelity, d);
  return rep;
}

IrbDemo make_irb_demo(double f_reference, double f_composite, double f_coherent_gate, double f_stochastic_gate) {
  const double p_ref = convert(f_reference, Metric::kFidelity, Metric::kDecayRate, 2);

  // Reference error D_q ∘ R_z(α), with q fixed by F(E) for each α.
  auto reference_for = [&](double alpha) {
    const double q = p_ref / ((2.0 * std::cos(alpha) + 1.0) / 3.0);
    return compose(zoo::depolarizing(q, 2), zoo::z_rotation(alpha));
  };
  // Gate rotation β with F(R_z(β) E) = f_composite.
  auto gate_angle_for = [&](const Channel &ref) {
    return bisect([&](double beta) { return fidelity(compose(zoo::z_rotation(beta), ref)) - f_composite; }, 0.0,
                  std::numbers::pi / 2.0);
  };
  const double alpha = bisect(
      [&](double a) {
        const double beta = gate_angle_for(reference_for(a));
        return fidelity(zoo::z_rotation(beta)) - f_coherent_gate;
      },
      0.0, 0.12);

  IrbDemo demo{reference_for(alpha), zoo::identity(2), zoo::identity(2)};
  demo.reference_rotation = alpha;
  demo.reference_depolarizing = p_ref / ((2.0 * std::cos(alpha) + 1.0) / 3.0);
  demo.gate_rotation = gate_angle_for(demo.reference);
  demo.coherent_gate_error = zoo::z_rotation(demo.gate_rotation);
  demo.stochastic_gate_error =
      zoo::depolarizing(convert(f_stochastic_gate, Metric::kFidelity, Metric::kDecayRate, 2), 2);
  return demo;
}

}  // namespace chanbound::rb
