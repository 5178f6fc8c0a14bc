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

#ifndef CHANBOUND_MATRIX_LAB_H
#define CHANBOUND_MATRIX_LAB_H

#include <span>
#include <string>
#include <vector>

#include "chanbound/channel.h"

namespace chanbound {

struct RealMatrixStats {
  int dim = 0;
  double trace = 0.0;
  double frobenius_norm = 0.0;
  double coherence_angle = 0.0;
  double max_singular_value = 0.0;
};

RealMatrixStats matrix_stats(const RMatrix &m);

/// θ(M) = arccos(tr M / (√d ||M||_F)) in [0, π]. Throws std::invalid_argument
/// for the zero matrix.
double coherence_angle_real(const RMatrix &m);

struct PairTraceBounds {
  double lower = 0.0;  ///< cos(θ1 + θ2)
  double value = 0.0;  ///< tr(M1 M2) / (||M1||_F ||M2||_F)
  double upper = 0.0;  ///< cos(θ1 - θ2)
};

PairTraceBounds pair_trace_bounds(const RMatrix &m1, const RMatrix &m2);

/// (norm/√d) R(θ) ⊗ I_{d/2}, with R the 2×2 rotation. d must be even.
RMatrix saturating_rotation(double norm, double theta, int d);

/// S(p, m) = Σ_{i=1}^{m-1} i p^{i-1}.
double geometric_sum_S(double p, int m);
/// Direct summation, kept separate from the closed form as its oracle.
double geometric_sum_S_direct(double p, int m);

double binomial2(int m);

struct ProductTraceBound {
  double deviation = 0.0;   ///< |tr(M_1...M_m)/d - p^m|
  double bound_S = 0.0;     ///< σ_max S(|p|, m) u sin²θ
  double bound_binom = 0.0; ///< σ_max C(m,2) u sin²θ
  double p = 0.0;
  double u = 0.0;
  double theta = 0.0;
  double max_prefix_norm = 0.0;
};

/// Thrown when the equal-parameter or prefix-norm hypotheses fail.
class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(const std::string &what, int index) : std::invalid_argument(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Telescoping bound on the normalized trace of a product of matrices that
/// share p = tr/d, u = ||·||_F²/d and θ. Hypotheses are checked to `tol`,
/// including ||M_1...M_j||_2 <= sigma_max for every prefix.
ProductTraceBound product_trace_bound(std::span<const RMatrix> matrices, double sigma_max, double tol = 1e-9);

struct SigmaCheck {
  double sigma_max = 0.0;
  double general_bound = 0.0;  ///< √(d/2)
  bool unital = false;
  double unital_bound = 1.0;
  bool within_general = false;
  bool within_unital = true;   ///< vacuous when the channel is not unital
};

/// Largest singular value of the unital block against √(d/2), and against 1
/// when the channel is unital.
SigmaCheck unital_block_sigma_check(const Channel &ch, double tol = 1e-9);

}  // namespace chanbound

#endif  // CHANBOUND_MATRIX_LAB_H
