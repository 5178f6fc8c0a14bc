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

#include <cmath>
#include <numbers>
#include <vector>

#include "chanbound/bounds.h"
#include "chanbound/matrix_lab.h"
#include "chanbound/metrics.h"
#include "chanbound/random.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace chanbound::zoo {
namespace {

TEST(Zoo, Depolarizing) {
  for (int d : {2, 3, 4}) {
    EXPECT_EQ(depolarizing(1.0, d).liouville(), identity(d).liouville());
  }
  const Channel dep = depolarizing(0.98, 2);
  EXPECT_NEAR(decay_rate(dep), 0.98, 1e-15);
  EXPECT_NEAR(unitarity(dep), 0.9604, 1e-15);
  EXPECT_NEAR(coherence_angle(dep), 0.0, 1e-8);
  const RMatrix expected = oracle::liouville_from_kraus(oracle::depolarizing_kraus(0.98), dep.basis());
  EXPECT_LT((dep.liouville() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NO_THROW(depolarizing(-1.0 / 3.0, 2));
  EXPECT_THROW(depolarizing(-0.34, 2), ValidationError);
  EXPECT_THROW(depolarizing(1.01, 2), ValidationError);
}

TEST(Zoo, PauliChannel) {
  const double probs[4] = {0.97, 0.01, 0.01, 0.01};
  const Channel ch = pauli_channel(probs);
  const CMatrix chi = to_chi(ch);
  CMatrix off = chi;
  off.diagonal().setZero();
  EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-14);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(chi(k, k).real(), probs[k], 1e-14);
  EXPECT_LT(coherence_angle(ch), 10 * infidelity(ch));

  const double negative[4] = {1.01, -0.01, 0.0, 0.0};
  EXPECT_THROW(pauli_channel(negative), ValidationError);
  const double short_sum[4] = {0.5, 0.1, 0.1, 0.1};
  EXPECT_THROW(pauli_channel(short_sum), ValidationError);
  const double wrong_len[3] = {1.0, 0.0, 0.0};
  EXPECT_THROW(pauli_channel(wrong_len), std::invalid_argument);

  std::vector<double> two_qubit(16, 0.0);
  two_qubit[0] = 0.9;
  two_qubit[5] = 0.1;
  EXPECT_NEAR(to_chi(pauli_channel(two_qubit))(5, 5).real(), 0.1, 1e-14);
}

TEST(Zoo, PhaseUnitary) {
  EXPECT_LT((phase_unitary(0.0, 2).liouville() - RMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(chi00(phase_unitary(0.3, 2)), 0.9126678, 1e-7);
  EXPECT_NEAR(chi00(phase_unitary(std::numbers::pi / 2, 2)), 0.0, 1e-12);
  EXPECT_NEAR(unitarity(phase_unitary(0.7, 4)), 1.0, 1e-12);
  EXPECT_THROW(phase_unitary(0.1, 3), std::invalid_argument);

  Rng rng = make_rng(4);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const double a = angle(rng), b = angle(rng);
    for (int d : {2, 4}) {
      const RMatrix composed = compose(phase_unitary(a, d), phase_unitary(b, d)).liouville();
      ASSERT_LT((composed - phase_unitary(a + b, d).liouville()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Zoo, RotationDamping) {
  const Channel rot = rotation_damping_qubit(1.0, 1.0, 0.4);
  EXPECT_NEAR(unitarity(rot), 1.0, 1e-14);
  EXPECT_LT((rot.liouville() - z_rotation(0.4).liouville()).cwiseAbs().maxCoeff(), 1e-14);

  // Dephasing family γ² = λ: coherence angle vanishes only at γ = λ.
  EXPECT_GT(coherence_angle(rotation_damping_qubit(0.9, 0.81, 0.0)), 1e-3);
  EXPECT_NEAR(coherence_angle(rotation_damping_qubit(0.95, 0.95, 0.0)), 0.0, 1e-8);

  const double g = 0.999, theta = 0.02;
  const Channel ch = rotation_damping_qubit(g, g, theta);
  EXPECT_TRUE(validate_cptp(ch).ok());
  const double p = decay_rate(ch), u = unitarity(ch);
  EXPECT_NEAR(p, (2 * g * std::cos(theta) + g) / 3, 1e-15);
  EXPECT_NEAR(u, g * g, 1e-15);
  const Channel seq[4] = {ch, ch, ch, ch};
  const double deviation = std::abs(decay_rate(compose_seq(seq)) - std::pow(p, 4));
  const double halfwidth = composite_decay_bound(p, u, 4, 2, true).halfwidth;
  EXPECT_LE(deviation, halfwidth);
  EXPECT_GE(deviation, 0.9 * halfwidth);

  // Outside the CP region.
  EXPECT_THROW(rotation_damping_qubit(1.0, 0.5, 0.0), ValidationError);
}

TEST(Zoo, AmplitudeDamping) {
  EXPECT_LT((amplitude_damping_qubit(0.0, 0.0).liouville() - RMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
  const Channel ad = amplitude_damping_qubit(0.01, 0.0);
  EXPECT_NEAR(nonunital_vector(ad).norm(), 0.01, 1e-15);

  // Independent assembly: z-rotation Liouville times damping Liouville in the Pauli basis.
  const double g = 0.01, a = 0.05;
  RMatrix damp = RMatrix::Zero(4, 4);
  damp(0, 0) = 1.0;
  damp(1, 1) = damp(2, 2) = std::sqrt(1.0 - g);
  damp(3, 3) = 1.0 - g;
  damp(3, 0) = g;
  RMatrix rot = RMatrix::Identity(4, 4);
  rot(1, 1) = rot(2, 2) = std::cos(a);
  rot(1, 2) = -std::sin(a);
  rot(2, 1) = std::sin(a);
  const RMatrix expected = rot * damp;
  const Channel ch = amplitude_damping_qubit(g, a);
  EXPECT_LT((ch.liouville() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(decay_rate(ch), expected.bottomRightCorner(3, 3).trace() / 3, 1e-15);
  EXPECT_NEAR(unitarity(ch), expected.bottomRightCorner(3, 3).squaredNorm() / 3, 1e-15);
  EXPECT_THROW(amplitude_damping_qubit(1.5, 0.0), std::invalid_argument);
}

TEST(Zoo, RandomGenerators) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 20; ++s) {
      EXPECT_NEAR(unitarity(random_unitary(d, s)), 1.0, 1e-10);
      EXPECT_TRUE(validate_cptp(random_cptp(d, 1 + s % (d * d), s)).ok());
      const Channel unital = random_unital(d, 3, s);
      EXPECT_TRUE(validate_cptp(unital).ok());
      EXPECT_LT(nonunital_vector(unital).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_TRUE(validate_cptp(random_near_identity(d, 0.05, 0.01, s)).ok());
    }
  }
  EXPECT_TRUE(validate_cptp(random_cptp(2, 4, 7)).ok());
  EXPECT_THROW(random_cptp(2, 5, 1), std::invalid_argument);
  EXPECT_THROW(random_cptp(2, 0, 1), std::invalid_argument);
  EXPECT_EQ(random_cptp(3, 2, 12).liouville(), random_cptp(3, 2, 12).liouville());
  EXPECT_GT((random_cptp(3, 2, 12).liouville() - random_cptp(3, 2, 13).liouville()).norm(), 1e-6);
  EXPECT_EQ(random_unitary(2, 5).liouville(), random_unitary(2, 5).liouville());
}

TEST(Zoo, HaarUnitaryMoments) {
  // E|U_00|² = 1/d and E|U_00|⁴ = 2/(d(d+1)) for Haar unitaries.
  const int d = 3, n = 20000;
  Rng rng = make_rng(2024);
  double m2 = 0.0, m4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = std::norm(haar_unitary(d, rng)(0, 0));
    m2 += x;
    m4 += x * x;
  }
  EXPECT_NEAR(m2 / n, 1.0 / d, 0.01);
  EXPECT_NEAR(m4 / n, 2.0 / (d * (d + 1)), 0.01);
}

TEST(Zoo, ConjugationPreservesDecayAndUnitarity) {
  Rng rng = make_rng(31);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 3;
    const Channel ch = random_cptp(d, 2, 400 + t);
    const Channel c = conjugate(ch, haar_unitary(d, rng));
    ASSERT_NEAR(decay_rate(c), decay_rate(ch), 1e-10);
    ASSERT_NEAR(unitarity(c), unitarity(ch), 1e-10);
  }
}

TEST(Zoo, RandomWithTargetsHitsTargets) {
  for (double u : {1.0, 0.993, 0.9903, 0.99003}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      EnsembleSpec spec;
      spec.target_fidelity = 0.9975;
      spec.target_unitarity = u;
      spec.seed = seed;
      const Channel ch = random_with_targets(spec);
      ASSERT_NEAR(fidelity(ch), 0.9975, 1e-9);
      ASSERT_NEAR(unitarity(ch), u, 1e-9);
      ASSERT_TRUE(validate_cptp(ch).ok());
    }
  }
}

TEST(Zoo, RandomWithTargetsExtremes) {
  EnsembleSpec spec;
  spec.target_fidelity = 0.9975;
  spec.target_unitarity = 1.0;
  spec.seed = 3;
  const Channel unitary = random_with_targets(spec);
  EXPECT_NEAR(infidelity(unitary), 0.0025, 1e-12);
  EXPECT_NEAR(coherence_angle(unitary), std::acos(decay_rate(unitary)), 1e-6);

  const double p = convert(0.9975, Metric::kFidelity, Metric::kDecayRate, 2);
  spec.target_unitarity = p * p;
  const Channel dep = random_with_targets(spec);
  EXPECT_NEAR(coherence_angle(dep), 0.0, 1e-6);

  spec.target_fidelity = 1.0;
  spec.target_unitarity = 0.9;
  EXPECT_THROW(random_with_targets(spec), std::invalid_argument);
  spec.dim = 3;
  EXPECT_THROW(random_with_targets(spec), std::invalid_argument);
}

TEST(Zoo, UnitalBlockSingularValues) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 300; ++s) {
      const SigmaCheck c = unital_block_sigma_check(random_cptp(d, 1 + s % (d * d), 900 + s));
      ASSERT_TRUE(c.within_general) << c.sigma_max;
    }
  }
}

}  // namespace
}  // namespace chanbound::zoo
