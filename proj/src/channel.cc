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

#include "chanbound/channel.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chanbound {

namespace {

// L = T† S T, where T's columns are the column-stacked basis elements.
RMatrix liouville_from_superop(const CMatrix &superop, const OperatorBasis &basis) {
  const CMatrix &t = basis.choi_vectors();
  const CMatrix l = t.adjoint() * superop * t;
  return l.real();
}

// Validated channels store the trace-preservation row exactly, so the block
// form reassembles bit for bit.
void snap_trace_row(RMatrix &l) {
  l.row(0).setZero();
  l(0, 0) = 1.0;
}

CMatrix superop_from_liouville(const RMatrix &liouville, const OperatorBasis &basis) {
  const CMatrix &t = basis.choi_vectors();
  return t * liouville.cast<cplx>() * t.adjoint();
}

// J[i*d+a, j*d+b] = S[b*d+a, j*d+i]. The map is an involution up to index
// relabeling, so the same loop converts in both directions.
CMatrix choi_from_superop(const CMatrix &s, int d) {
  CMatrix j(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a)
      for (int jj = 0; jj < d; ++jj)
        for (int b = 0; b < d; ++b) j(i * d + a, jj * d + b) = s(b * d + a, jj * d + i);
  return j;
}

CMatrix superop_from_choi(const CMatrix &j, int d) {
  CMatrix s(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a)
      for (int jj = 0; jj < d; ++jj)
        for (int b = 0; b < d; ++b) s(b * d + a, jj * d + i) = j(i * d + a, jj * d + b);
  return s;
}

void require_same_dim(const Channel &a, const Channel &b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("channel dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

Channel::Channel(OperatorBasis basis, RMatrix liouville, std::optional<std::vector<CMatrix>> kraus)
    : basis_(std::move(basis)), liouville_(std::move(liouville)), kraus_(std::move(kraus)) {
  const int n = basis_.size();
  if (liouville_.rows() != n || liouville_.cols() != n) {
    throw std::invalid_argument("liouville matrix must be d²×d²");
  }
}

Channel Channel::unchecked(OperatorBasis basis, RMatrix liouville) {
  return Channel(std::move(basis), std::move(liouville), std::nullopt);
}

Channel Channel::from_liouville(OperatorBasis basis, RMatrix liouville, double tol) {
  Channel ch(std::move(basis), std::move(liouville), std::nullopt);
  const CPTPReport report = validate_cptp(ch, tol);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "liouville matrix is not CPTP: tp deviation " << report.tp_deviation << ", min Choi eigenvalue "
        << report.min_choi_eigenvalue;
    throw ValidationError(msg.str());
  }
  snap_trace_row(ch.liouville_);
  return ch;
}

Channel from_kraus(std::span<const CMatrix> kraus, const OperatorBasis &basis, double tol) {
  if (kraus.empty()) throw std::invalid_argument("empty Kraus list");
  const int d = basis.dim();
  CMatrix completeness = CMatrix::Zero(d, d);
  CMatrix superop = CMatrix::Zero(d * d, d * d);
  for (const CMatrix &a : kraus) {
    if (a.rows() != d || a.cols() != d) {
      throw std::invalid_argument("Kraus operator has wrong shape for dimension " + std::to_string(d));
    }
    completeness += a.adjoint() * a;
    superop += kron(a.conjugate(), a);
  }
  const double tp_dev = (completeness - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (tp_dev > tol) {
    std::ostringstream msg;
    msg << "Kraus operators are not trace preserving: max |Σ A†A - I| = " << tp_dev;
    throw ValidationError(msg.str());
  }
  RMatrix liouville = liouville_from_superop(superop, basis);
  snap_trace_row(liouville);
  return Channel(basis, std::move(liouville), std::vector<CMatrix>(kraus.begin(), kraus.end()));
}

Channel from_kraus(std::span<const CMatrix> kraus, double tol) {
  if (kraus.empty()) throw std::invalid_argument("empty Kraus list");
  return from_kraus(kraus, default_basis(static_cast<int>(kraus.front().rows())), tol);
}

Channel from_chi(const CMatrix &chi, const OperatorBasis &basis, double tol) {
  const int d = basis.dim();
  if (chi.rows() != d * d || chi.cols() != d * d) throw std::invalid_argument("chi matrix must be d²×d²");
  if ((chi - chi.adjoint()).cwiseAbs().maxCoeff() > tol) throw ValidationError("chi matrix is not Hermitian");
  const double tr = chi.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "chi matrix must have unit trace, got " << tr;
    throw ValidationError(msg.str());
  }
  const double min_eig = hermitian_eigenvalues(chi)(0);
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "chi matrix is not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw ValidationError(msg.str());
  }
  const CMatrix &t = basis.choi_vectors();
  const CMatrix j = static_cast<double>(d) * t * chi * t.adjoint();
  return Channel::from_liouville(basis, liouville_from_superop(superop_from_choi(j, d), basis), tol);
}

CMatrix superoperator(const Channel &ch) { return superop_from_liouville(ch.liouville(), ch.basis()); }

CMatrix choi(const Channel &ch) { return choi_from_superop(superoperator(ch), ch.dim()); }

CMatrix to_chi(const Channel &ch) {
  const CMatrix &t = ch.basis().choi_vectors();
  CMatrix chi = t.adjoint() * choi(ch) * t / static_cast<double>(ch.dim());
  return 0.5 * (chi + chi.adjoint());
}

std::vector<CMatrix> to_kraus(const Channel &ch, double tol) {
  const int d = ch.dim();
  const CMatrix j = choi(ch);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (j + j.adjoint()));
  const RVector &vals = eig.eigenvalues();
  if (vals(0) < -tol) {
    std::ostringstream msg;
    msg << "channel is not completely positive (min Choi eigenvalue " << vals(0) << ")";
    throw ValidationError(msg.str());
  }
  std::vector<CMatrix> out;
  for (int k = static_cast<int>(vals.size()) - 1; k >= 0; --k) {
    if (vals(k) <= kKrausDropTol) continue;
    const CVector v = eig.eigenvectors().col(k) * std::sqrt(vals(k));
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int r = 0; r < d; ++r) a(r, i) = v(i * d + r);
    const cplx tr = a.trace();
    if (std::abs(tr) > 1e-14) a *= std::conj(tr) / std::abs(tr);
    out.push_back(std::move(a));
  }
  return out;
}

CMatrix apply(const Channel &ch, const CMatrix &rho) {
  if (ch.kraus_hint()) {
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (const CMatrix &a : *ch.kraus_hint()) out += a * rho * a.adjoint();
    return out;
  }
  const CVector coeffs = ch.basis().coefficients(rho);
  return ch.basis().operator_from(ch.liouville().cast<cplx>() * coeffs);
}

Channel compose(const Channel &a, const Channel &b) {
  require_same_dim(a, b);
  const RMatrix lb = a.basis() == b.basis() ? b.liouville() : change_basis(b, a.basis()).liouville();
  return Channel::unchecked(a.basis(), a.liouville() * lb);
}

Channel compose_seq(std::span<const Channel> channels) {
  if (channels.empty()) throw std::invalid_argument("compose_seq needs at least one channel");
  Channel acc = channels.front();
  for (size_t i = 1; i < channels.size(); ++i) acc = compose(acc, channels[i]);
  return acc;
}

Channel mix(std::span<const Channel> channels, std::span<const double> weights) {
  if (channels.empty() || channels.size() != weights.size()) {
    throw std::invalid_argument("mix needs one weight per channel");
  }
  RMatrix acc = RMatrix::Zero(channels[0].liouville().rows(), channels[0].liouville().cols());
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > kCptpTol) throw ValidationError("mixture weights must sum to 1");
  for (size_t i = 0; i < channels.size(); ++i) {
    require_same_dim(channels[0], channels[i]);
    if (weights[i] < 0.0) throw ValidationError("mixture weights must be nonnegative");
    acc += weights[i] * change_basis(channels[i], channels[0].basis()).liouville();
  }
  return Channel::unchecked(channels[0].basis(), acc);
}

Channel unitary_channel(const CMatrix &u, const OperatorBasis &basis) {
  const CMatrix k[1] = {u};
  return from_kraus(k, basis, 1e-8);
}

Channel unitary_channel(const CMatrix &u) { return unitary_channel(u, default_basis(static_cast<int>(u.rows()))); }

Channel identity_channel(const OperatorBasis &basis) {
  return Channel::unchecked(basis, RMatrix::Identity(basis.size(), basis.size()));
}

Channel conjugate(const Channel &ch, const CMatrix &u) {
  const RMatrix lu = unitary_channel(u, ch.basis()).liouville();
  // Unitary Liouville matrices are real orthogonal, so U† maps to the transpose.
  return Channel::unchecked(ch.basis(), lu * ch.liouville() * lu.transpose());
}

Channel change_basis(const Channel &ch, const OperatorBasis &target) {
  if (ch.basis() == target) return ch;
  if (ch.dim() != target.dim()) throw std::invalid_argument("change_basis: dimension mismatch");
  // R_jk = tr(B'_j B_k) maps source coefficients to target coefficients.
  const int n = target.size();
  RMatrix r(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) r(j, k) = (target[j] * ch.basis()[k]).trace().real();
  return Channel::unchecked(target, r * ch.liouville() * r.transpose());
}

RMatrix unital_block(const Channel &ch) {
  const int n = ch.basis().size() - 1;
  return ch.liouville().bottomRightCorner(n, n);
}

RVector nonunital_vector(const Channel &ch) {
  const int n = ch.basis().size() - 1;
  return ch.liouville().col(0).tail(n);
}

RMatrix assemble_block(const RVector &nonunital, const RMatrix &unital) {
  const Eigen::Index n = unital.rows();
  RMatrix l = RMatrix::Zero(n + 1, n + 1);
  l(0, 0) = 1.0;
  l.col(0).tail(n) = nonunital;
  l.bottomRightCorner(n, n) = unital;
  return l;
}

CPTPReport validate_cptp(const Channel &ch, double tol) {
  CPTPReport report;
  report.tolerance = tol;
  const RMatrix &l = ch.liouville();
  double dev = std::abs(l(0, 0) - 1.0);
  for (Eigen::Index k = 1; k < l.cols(); ++k) dev = std::max(dev, std::abs(l(0, k)));
  report.tp_deviation = dev;
  report.is_tp = dev <= tol;
  report.min_choi_eigenvalue = hermitian_eigenvalues(choi(ch))(0);
  report.is_cp = report.min_choi_eigenvalue >= -tol;
  return report;
}

double spectral_norm(const RMatrix &m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<RMatrix> svd(m);
  return svd.singularValues()(0);
}

RVector hermitian_eigenvalues(const CMatrix &m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

}  // namespace chanbound
