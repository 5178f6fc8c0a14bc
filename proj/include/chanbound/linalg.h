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

#ifndef CHANBOUND_LINALG_H
#define CHANBOUND_LINALG_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace chanbound {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when an input violates a physical constraint (CP, TP, probability
/// normalization). Distinct from std::invalid_argument, which signals a
/// malformed call.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kronecker product a ⊗ b.
template <typename Derived1, typename Derived2>
auto kron(const Eigen::MatrixBase<Derived1> &a, const Eigen::MatrixBase<Derived2> &b) {
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Largest singular value (spectral norm).
double spectral_norm(const RMatrix &m);

/// Hermitian part eigenvalues, ascending.
RVector hermitian_eigenvalues(const CMatrix &m);

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace chanbound

#endif  // CHANBOUND_LINALG_H
