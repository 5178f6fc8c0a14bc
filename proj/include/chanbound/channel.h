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

#ifndef CHANBOUND_CHANNEL_H
#define CHANBOUND_CHANNEL_H

#include <optional>
#include <span>
#include <vector>

#include "chanbound/basis.h"
#include "chanbound/linalg.h"

namespace chanbound {

inline constexpr double kCptpTol = 1e-9;
inline constexpr double kRoundTripTol = 1e-10;
inline constexpr double kKrausDropTol = 1e-10;

/// A quantum channel stored as its real Liouville matrix in a Hermitian
/// trace-orthonormal basis. Kraus, χ and Choi views are derived on demand.
///
/// Instances are immutable; every operation below is a pure function.
class Channel {
 public:
  /// Validates trace preservation and complete positivity at `tol`; throws
  /// ValidationError on failure.
  static Channel from_liouville(OperatorBasis basis, RMatrix liouville, double tol = kCptpTol);

  /// No CPTP check. Only for maps that are going to be handed to
  /// validate_cptp() for reporting.
  static Channel unchecked(OperatorBasis basis, RMatrix liouville);

  int dim() const { return basis_.dim(); }
  const OperatorBasis &basis() const { return basis_; }
  const RMatrix &liouville() const { return liouville_; }

  /// Kraus operators this channel was built from, if any.
  const std::optional<std::vector<CMatrix>> &kraus_hint() const { return kraus_; }

 private:
  Channel(OperatorBasis basis, RMatrix liouville, std::optional<std::vector<CMatrix>> kraus);

  friend Channel from_kraus(std::span<const CMatrix> kraus, const OperatorBasis &basis, double tol);

  OperatorBasis basis_;
  RMatrix liouville_;
  std::optional<std::vector<CMatrix>> kraus_;
};

struct CPTPReport {
  bool is_tp = false;
  double tp_deviation = 0.0;  ///< max |L_0k - δ_0k|
  bool is_cp = false;
  double min_choi_eigenvalue = 0.0;
  double tolerance = kCptpTol;

  bool ok() const { return is_tp && is_cp; }
};

Channel from_kraus(std::span<const CMatrix> kraus, const OperatorBasis &basis, double tol = kCptpTol);
Channel from_kraus(std::span<const CMatrix> kraus, double tol = kCptpTol);

/// E(ρ) = d Σ_kl χ_kl B_k ρ B_l†.
Channel from_chi(const CMatrix &chi, const OperatorBasis &basis, double tol = kCptpTol);
CMatrix to_chi(const Channel &ch);

/// Kraus operators from the Choi eigendecomposition. Eigenvalues in
/// [-tol, kKrausDropTol] are dropped, anything below -tol throws
/// ValidationError. Each operator is phased so that tr A_j is real and >= 0.
std::vector<CMatrix> to_kraus(const Channel &ch, double tol = kCptpTol);

/// J = Σ_ij |i><j| ⊗ E(|i><j|), trace d.
CMatrix choi(const Channel &ch);

/// Column-stacking superoperator S with vec(E(ρ)) = S vec(ρ).
CMatrix superoperator(const Channel &ch);

CMatrix apply(const Channel &ch, const CMatrix &rho);

/// Liouville matrix of the composition a∘b (b acts first).
Channel compose(const Channel &a, const Channel &b);
/// E_1 E_2 ... E_m, i.e. E_m acts first.
Channel compose_seq(std::span<const Channel> channels);

/// Weighted average Σ w_i E_i with Σ w_i = 1.
Channel mix(std::span<const Channel> channels, std::span<const double> weights);

Channel unitary_channel(const CMatrix &u, const OperatorBasis &basis);
Channel unitary_channel(const CMatrix &u);
Channel identity_channel(const OperatorBasis &basis);

/// U∘E∘U†.
Channel conjugate(const Channel &ch, const CMatrix &u);

Channel change_basis(const Channel &ch, const OperatorBasis &target);

/// The (d²-1)×(d²-1) unital block and the (d²-1) non-unital vector of the
/// block form [[1, 0], [n, U]].
RMatrix unital_block(const Channel &ch);
RVector nonunital_vector(const Channel &ch);
RMatrix assemble_block(const RVector &nonunital, const RMatrix &unital);

CPTPReport validate_cptp(const Channel &ch, double tol = kCptpTol);

}  // namespace chanbound

#endif  // CHANBOUND_CHANNEL_H
