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

#include "chanbound/matrix_lab.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chanbound {

RealMatrixStats matrix_stats(const RMatrix &m) {
  RealMatrixStats s;
  s.dim = static_cast<int>(m.rows());
  s.trace = m.trace();
  s.frobenius_norm = m.norm();
  s.coherence_angle = coherence_angle_real(m);
  s.max_singular_value = spectral_norm(m);
  return s;
}

double coherence_angle_real(const RMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("coherence angle needs a square matrix");
  const double norm = m.norm();
  if (norm == 0.0) throw std::invalid_argument("coherence angle undefined for the zero matrix");
  // Same angle as arccos(tr M / (√d ‖M‖_F)), but the sine leg is the norm of
  // the traceless part, so θ is exactly 0 for multiples of the identity.
  const double shift = m.trace() / static_cast<double>(m.rows());
  const RMatrix traceless = m - shift * RMatrix::Identity(m.rows(), m.cols());
  return std::atan2(traceless.norm(), m.trace() / std::sqrt(static_cast<double>(m.rows())));
}

PairTraceBounds pair_trace_bounds(const RMatrix &m1, const RMatrix &m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    throw std::invalid_argument("pair_trace_bounds: dimension mismatch");
  }
  const double t1 = coherence_angle_real(m1);
  const double t2 = coherence_angle_real(m2);
  PairTraceBounds b;
  b.lower = std::cos(t1 + t2);
  b.upper = std::cos(t1 - t2);
  // tr(M1 M2) = Σ_ij M1_ij M2_ji
  b.value = m1.cwiseProduct(m2.transpose()).sum() / (m1.norm() * m2.norm());
  return b;
}

RMatrix saturating_rotation(double norm, double theta, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("saturating_rotation needs an even dimension");
  if (!(norm > 0.0)) throw std::invalid_argument("saturating_rotation needs a positive norm");
  RMatrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return (norm / std::sqrt(static_cast<double>(d))) * kron(r, RMatrix::Identity(d / 2, d / 2));
}

double binomial2(int m) { return 0.5 * m * (m - 1.0); }

double geometric_sum_S_direct(double p, int m) {
  double s = 0.0;
  double pw = 1.0;
  for (int i = 1; i <= m - 1; ++i) {
    s += i * pw;
    pw *= p;
  }
  return s;
}

double geometric_sum_S(double p, int m) {
  if (m < 1) throw std::invalid_argument("geometric_sum_S needs m >= 1");
  if (m == 1) return 0.0;
  if (p == 1.0) return binomial2(m);
  if (p == 0.0) return 1.0;
  // The (1-p)² denominator cancels catastrophically near p = 1.
  if (std::abs(1.0 - p) < 1e-6) return geometric_sum_S_direct(p, m);
  // Numerator 1 - m p^{m-1} + (m-1) p^m written as 1 - p^{m-1}(1 + (m-1)q)
  // with q = 1 - p, using expm1/log1p so the leading terms cancel exactly.
  const double q = 1.0 - p;
  const double e = (m - 1.0) * std::log1p(-q);
  const double numerator = -std::expm1(e) - std::exp(e) * (m - 1.0) * q;
  return numerator / (q * q);
}

ProductTraceBound product_trace_bound(std::span<const RMatrix> matrices, double sigma_max, double tol) {
  if (matrices.empty()) throw std::invalid_argument("product_trace_bound needs at least one matrix");
  const Eigen::Index d = matrices[0].rows();
  const double dd = static_cast<double>(d);

  ProductTraceBound out;
  out.p = matrices[0].trace() / dd;
  out.u = matrices[0].squaredNorm() / dd;
  out.theta = coherence_angle_real(matrices[0]);
  if (out.p > 1.0 + tol) throw HypothesisError("p must not exceed 1", 0);
  if (out.u > 1.0 + tol) throw HypothesisError("u must not exceed 1", 0);

  RMatrix prefix = RMatrix::Identity(d, d);
  for (size_t j = 0; j < matrices.size(); ++j) {
    const RMatrix &m = matrices[j];
    const int idx = static_cast<int>(j);
    if (m.rows() != d || m.cols() != d) throw HypothesisError("matrix dimension mismatch", idx);
    if (std::abs(m.trace() / dd - out.p) > tol) throw HypothesisError("unequal p = tr M / d", idx);
    if (std::abs(m.squaredNorm() / dd - out.u) > tol) throw HypothesisError("unequal u = ||M||_F² / d", idx);
    if (std::abs(coherence_angle_real(m) - out.theta) > std::sqrt(tol)) {
      throw HypothesisError("unequal coherence angle", idx);
    }
    prefix = prefix * m;
    const double pn = spectral_norm(prefix);
    out.max_prefix_norm = std::max(out.max_prefix_norm, pn);
    if (pn > sigma_max + tol) {
      std::ostringstream msg;
      msg << "prefix spectral norm " << pn << " exceeds sigma_max " << sigma_max;
      throw HypothesisError(msg.str(), idx);
    }
  }
  const int m = static_cast<int>(matrices.size());
  out.deviation = std::abs(prefix.trace() / dd - std::pow(out.p, m));
  // u sin²θ = u - p², which avoids the arccos round trip.
  const double incoherent = std::max(0.0, out.u - out.p * out.p);
  out.bound_S = sigma_max * geometric_sum_S(std::abs(out.p), m) * incoherent;
  out.bound_binom = sigma_max * binomial2(m) * incoherent;
  return out;
}

SigmaCheck unital_block_sigma_check(const Channel &ch, double tol) {
  SigmaCheck c;
  c.sigma_max = spectral_norm(unital_block(ch));
  c.general_bound = std::sqrt(ch.dim() / 2.0);
  c.unital = nonunital_vector(ch).cwiseAbs().maxCoeff() <= tol;
  c.within_general = c.sigma_max <= c.general_bound + tol;
  c.within_unital = !c.unital || c.sigma_max <= c.unital_bound + tol;
  return c;
}

}  // namespace chanbound
