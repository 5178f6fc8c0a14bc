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

#include "chanbound/basis.h"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chanbound {

namespace {

std::vector<CMatrix> pauli_elements(int d) {
  const cplx i(0.0, 1.0);
  CMatrix paulis[4];
  paulis[0] = CMatrix::Identity(2, 2);
  paulis[1] = CMatrix::Zero(2, 2);
  paulis[1] << 0.0, 1.0, 1.0, 0.0;
  paulis[2] = CMatrix::Zero(2, 2);
  paulis[2] << 0.0, -i, i, 0.0;
  paulis[3] = CMatrix::Zero(2, 2);
  paulis[3] << 1.0, 0.0, 0.0, -1.0;

  int n = 0;
  while ((1 << n) < d) ++n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));

  std::vector<CMatrix> out;
  out.reserve(static_cast<size_t>(d) * d);
  for (int idx = 0; idx < d * d; ++idx) {
    CMatrix acc = CMatrix::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) {
      const int digit = (idx >> (2 * q)) & 3;
      acc = kron(acc, paulis[digit]);
    }
    out.push_back(acc * norm);
  }
  return out;
}

std::vector<CMatrix> gell_mann_elements(int d) {
  const cplx i(0.0, 1.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  std::vector<CMatrix> out;
  out.reserve(static_cast<size_t>(d) * d);
  out.push_back(CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix m = CMatrix::Zero(d, d);
      m(j, k) = r2;
      m(k, j) = r2;
      out.push_back(m);
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix m = CMatrix::Zero(d, d);
      m(j, k) = -i * r2;
      m(k, j) = i * r2;
      out.push_back(m);
    }
  }
  for (int l = 1; l < d; ++l) {
    CMatrix m = CMatrix::Zero(d, d);
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) m(j, j) = c;
    m(l, l) = -l * c;
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::string to_string(BasisKind kind) {
  return kind == BasisKind::kPauli ? "pauli" : "gell-mann";
}

BasisKind basis_kind_from_string(const std::string &name) {
  if (name == "pauli") return BasisKind::kPauli;
  if (name == "gell-mann" || name == "gellmann") return BasisKind::kGellMann;
  throw std::invalid_argument("unknown basis kind: " + name);
}

OperatorBasis::OperatorBasis(int dim, BasisKind kind) : dim_(dim), kind_(kind) {
  if (dim < 2) throw std::invalid_argument("basis dimension must be at least 2");
  if (kind == BasisKind::kPauli && !is_power_of_two(dim)) {
    throw std::invalid_argument("pauli basis requires a power-of-two dimension, got " +
                                std::to_string(dim));
  }
  auto elems = std::make_shared<std::vector<CMatrix>>(kind == BasisKind::kPauli ? pauli_elements(dim)
                                                                                : gell_mann_elements(dim));
  auto vecs = std::make_shared<CMatrix>(dim * dim, dim * dim);
  for (int k = 0; k < dim * dim; ++k) {
    const CMatrix &b = (*elems)[k];
    for (int i = 0; i < dim; ++i) {
      for (int a = 0; a < dim; ++a) (*vecs)(i * dim + a, k) = b(a, i);
    }
  }
  elements_ = std::move(elems);
  choi_vectors_ = std::move(vecs);
}

CVector OperatorBasis::coefficients(const CMatrix &op) const {
  CVector c(size());
  for (int k = 0; k < size(); ++k) {
    // tr(B_k† X) with B_k Hermitian
    c(k) = ((*elements_)[k].adjoint().cwiseProduct(op.transpose())).sum();
  }
  return c;
}

CMatrix OperatorBasis::operator_from(const CVector &coeffs) const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (int k = 0; k < size(); ++k) out += coeffs(k) * (*elements_)[k];
  return out;
}

CMatrix OperatorBasis::gram() const {
  CMatrix g(size(), size());
  for (int j = 0; j < size(); ++j) {
    for (int k = 0; k < size(); ++k) g(j, k) = ((*elements_)[j].adjoint() * (*elements_)[k]).trace();
  }
  return g;
}

OperatorBasis make_basis(int d, BasisKind kind) {
  // Bases are immutable and shared, so memoize by (d, kind).
  static std::mutex mu;
  static std::map<std::pair<int, int>, OperatorBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(d, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  OperatorBasis basis(d, kind);
  cache.emplace(key, basis);
  return basis;
}

OperatorBasis default_basis(int d) {
  return make_basis(d, is_power_of_two(d) ? BasisKind::kPauli : BasisKind::kGellMann);
}

}  // namespace chanbound
