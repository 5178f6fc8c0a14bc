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

#ifndef CHANBOUND_BASIS_H
#define CHANBOUND_BASIS_H

#include <memory>
#include <string>
#include <vector>

#include "chanbound/linalg.h"

namespace chanbound {

enum class BasisKind { kPauli, kGellMann };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string &name);

/// Hermitian, trace-orthonormal operator basis {B_0 = I/√d, B_1, ..., B_{d²-1}}.
///
/// Pauli bases (d = 2^n) are ordered lexicographically over tensor strings in
/// the alphabet I, X, Y, Z with the leftmost factor most significant. Gell-Mann
/// bases list the symmetric generators, then the antisymmetric ones, then the
/// diagonal ones, each group in (j, k) lexicographic order.
///
/// Copies are cheap; the element storage is shared and immutable.
class OperatorBasis {
 public:
  OperatorBasis(int dim, BasisKind kind);

  int dim() const { return dim_; }
  int size() const { return dim_ * dim_; }
  BasisKind kind() const { return kind_; }
  const CMatrix &operator[](int k) const { return (*elements_)[k]; }
  const std::vector<CMatrix> &elements() const { return *elements_; }

  /// Column k holds B_k flattened so that v[i*d + a] = B_k(a, i). With this
  /// layout the Choi matrix is Σ_j v(A_j) v(A_j)† for Kraus operators A_j.
  const CMatrix &choi_vectors() const { return *choi_vectors_; }

  /// Expansion coefficients <B_k, X> = tr(B_k X) of an operator.
  CVector coefficients(const CMatrix &op) const;
  /// Inverse of coefficients().
  CMatrix operator_from(const CVector &coeffs) const;

  /// Gram matrix G_jk = tr(B_j† B_k).
  CMatrix gram() const;

  bool operator==(const OperatorBasis &other) const {
    return dim_ == other.dim_ && kind_ == other.kind_;
  }

 private:
  int dim_;
  BasisKind kind_;
  std::shared_ptr<const std::vector<CMatrix>> elements_;
  std::shared_ptr<const CMatrix> choi_vectors_;
};

/// Build the basis of the given kind. Throws std::invalid_argument for d < 2
/// or a Pauli basis on a dimension that is not a power of two.
OperatorBasis make_basis(int d, BasisKind kind);

/// Pauli when d is a power of two, Gell-Mann otherwise.
OperatorBasis default_basis(int d);

}  // namespace chanbound

#endif  // CHANBOUND_BASIS_H
