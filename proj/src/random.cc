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

#include "chanbound/random.h"

#include <cmath>

namespace chanbound {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

CMatrix ginibre(int rows, int cols, Rng &rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

CVector haar_state(int d, Rng &rng) {
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

CMatrix haar_unitary(int d, Rng &rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix &r = qr.matrixQR();
  for (int k = 0; k < d; ++k) {
    const cplx rkk = r(k, k);
    const double mag = std::abs(rkk);
    if (mag > 0.0) q.col(k) *= rkk / mag;
  }
  return q;
}

}  // namespace chanbound
