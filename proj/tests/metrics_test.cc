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

#include "chanbound/metrics.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "chanbound/random.h"
#include "chanbound/zoo.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace chanbound {
namespace {

// F = (Σ_j |tr A_j|² + d) / (d(d+1)).
double fidelity_oracle(const std::vector<CMatrix> &kraus) {
  const double d = static_cast<double>(kraus.front().rows());
  double s = 0.0;
  for (const CMatrix &a : kraus) s += std::norm(a.trace());
  return (s + d) / (d * (d + 1.0));
}

double unitarity_oracle(const std::vector<CMatrix> &kraus, const OperatorBasis &b) {
  const RMatrix l = oracle::liouville_from_kraus(kraus, b);
  const int n = b.size() - 1;
  return l.bottomRightCorner(n, n).squaredNorm() / n;
}

TEST(Metrics, Chi00Examples) {
  EXPECT_NEAR(chi00(zoo::identity(3)), 1.0, 1e-14);
  EXPECT_NEAR(chi00(zoo::phase_unitary(0.3, 2)), 0.9126678, 1e-7);
  EXPECT_NEAR(chi00(zoo::phase_unitary(0.3, 4)), std::pow(std::cos(0.3), 2), 1e-14);
  const Channel dep = zoo::depolarizing(0.98, 2);
  EXPECT_NEAR(chi00(dep), 0.985, 1e-14);
  EXPECT_NEAR(oracle::chi00_from_kraus(oracle::depolarizing_kraus(0.98)), 0.985, 1e-14);
}

TEST(Metrics, Chi00MatchesKrausTraceSum) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 30; ++s) {
      const Channel ch = zoo::random_cptp(d, 1 + s % 4, 10 * d + s);
      EXPECT_NEAR(chi00(ch), oracle::chi00_from_kraus(*ch.kraus_hint()), 1e-12);
      EXPECT_NEAR(chi00(ch), to_chi(ch)(0, 0).real(), 1e-12);
    }
  }
}

TEST(Metrics, DecayAndUnitarityExamples) {
  EXPECT_DOUBLE_EQ(decay_rate(zoo::identity(2)), 1.0);
  EXPECT_DOUBLE_EQ(unitarity(zoo::identity(2)), 1.0);
  const Channel dep = zoo::depolarizing(0.98, 2);
  EXPECT_NEAR(decay_rate(dep), 0.98, 1e-15);
  EXPECT_NEAR(unitarity(dep), 0.9604, 1e-15);
  for (int d : {2, 3, 5}) {
    for (int s = 0; s < 20; ++s) EXPECT_NEAR(unitarity(zoo::random_unitary(d, s)), 1.0, 1e-10);
  }
}

TEST(Metrics, AgreesWithIndependentOracles) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 1000; ++s) {
      const Channel ch = zoo::random_cptp(d, 1 + s % (d * d), 5000 * d + s);
      const auto &kraus = *ch.kraus_hint();
      const double f = fidelity_oracle(kraus);
      ASSERT_NEAR(fidelity(ch), f, 1e-12);
      // Conversion consistency: χ00 route and p route agree.
      ASSERT_NEAR(convert(chi00(ch), Metric::kChi00, Metric::kFidelity, d), fidelity(ch), 1e-10);
      if (s % 10 == 0) ASSERT_NEAR(unitarity(ch), unitarity_oracle(kraus, ch.basis()), 1e-12);
      const double p = decay_rate(ch);
      const double u = unitarity(ch);
      ASSERT_LE(p * p, u + 1e-12);
      ASSERT_LE(u, 1.0 + 1e-9);
      if (p >= 0.0) {
        const double th = coherence_angle(ch);
        ASSERT_GE(th, 0.0);
        ASSERT_LE(th, std::acos(std::min(p, 1.0)) + 1e-12);
      }
    }
  }
}

TEST(Metrics, CoherenceAngleCases) {
  EXPECT_NEAR(coherence_angle(zoo::depolarizing(0.9, 3)), 0.0, 1e-8);
  EXPECT_NEAR(coherence_angle(zoo::depolarizing(0.5, 2)), 0.0, 1e-8);
  for (int s = 0; s < 10; ++s) {
    const Channel u = zoo::random_unitary(2, s);
    EXPECT_NEAR(coherence_angle(u), std::acos(decay_rate(u)), 1e-8);
  }
  const double probs[4] = {0.97, 0.01, 0.01, 0.01};
  const Channel pauli = zoo::pauli_channel(probs);
  EXPECT_LE(coherence_angle(pauli), 0.1 * std::acos(decay_rate(pauli)));
  EXPECT_THROW(coherence_angle(0.0, 0.0), std::domain_error);
  // Negative p: the angle passes π/2.
  EXPECT_GT(coherence_angle(zoo::depolarizing(-0.2, 2)), std::numbers::pi / 2);
  EXPECT_NEAR(coherence_angle(-0.2, 0.04), std::numbers::pi, 1e-7);
}

TEST(Metrics, ConvertExamples) {
  EXPECT_NEAR(convert(0.99, Metric::kDecayRate, Metric::kInfidelity, 2), 0.005, 1e-15);
  for (int d : {2, 3, 7}) {
    EXPECT_EQ(convert(1.0, Metric::kFidelity, Metric::kInfidelity, d), 0.0);
    EXPECT_EQ(convert(1.0, Metric::kFidelity, Metric::kDecayRate, d), 1.0);
    EXPECT_EQ(convert(1.0, Metric::kFidelity, Metric::kChi00, d), 1.0);
  }
  EXPECT_NEAR(convert(0.99, Metric::kChi00, Metric::kDecayRate, 2), 0.9866667, 1e-7);
  EXPECT_THROW(convert(0.5, MetricKind{Metric::kFidelity, 2}, MetricKind{Metric::kChi00, 3}), std::invalid_argument);
  EXPECT_THROW(convert(0.5, Metric::kFidelity, Metric::kChi00, 1), std::invalid_argument);
}

TEST(Metrics, ConvertRoundTripsAndComposes) {
  const Metric all[4] = {Metric::kFidelity, Metric::kInfidelity, Metric::kDecayRate, Metric::kChi00};
  Rng rng = make_rng(3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int d : {2, 3, 4, 8}) {
    for (int t = 0; t < 200; ++t) {
      const double x = unif(rng);
      for (Metric a : all) {
        for (Metric b : all) {
          if (a == b) continue;
          EXPECT_NEAR(convert(convert(x, a, b, d), b, a, d), x, 1e-15);
          // Path independence through a third kind.
          for (Metric c : all) {
            if (c == a || c == b) continue;
            EXPECT_NEAR(convert(convert(x, a, c, d), c, b, d), convert(x, a, b, d), 1e-14);
          }
        }
      }
    }
  }
}

TEST(Metrics, ComputeMetricsBundle) {
  const Channel ch = zoo::rotation_damping_qubit(0.99, 0.98, 0.05);
  const ChannelMetrics m = compute_metrics(ch);
  EXPECT_DOUBLE_EQ(m.decay_rate, decay_rate(ch));
  EXPECT_DOUBLE_EQ(m.unitarity, unitarity(ch));
  EXPECT_NEAR(m.fidelity + m.infidelity, 1.0, 1e-15);
  EXPECT_NEAR(m.decay_rate, (2 * 0.99 * std::cos(0.05) + 0.98) / 3, 1e-14);
  EXPECT_NEAR(m.unitarity, (2 * 0.99 * 0.99 + 0.98 * 0.98) / 3, 1e-14);
  EXPECT_NEAR(m.coherence_angle, std::acos(m.decay_rate / std::sqrt(m.unitarity)), 1e-14);
  EXPECT_EQ(metric_from_string(to_string(Metric::kChi00)), Metric::kChi00);
  EXPECT_EQ(metric_from_string("fidelity"), Metric::kFidelity);
  EXPECT_THROW(metric_from_string("diamond"), std::invalid_argument);
}

TEST(Metrics, MonteCarloExamples) {
  const Estimate id = fidelity_mc(zoo::identity(2), 100, 1);
  EXPECT_NEAR(id.mean, 1.0, 1e-14);
  EXPECT_NEAR(id.std_error, 0.0, 1e-14);
  EXPECT_NEAR(unitarity_mc(zoo::identity(3), 100, 1).mean, 1.0, 1e-13);

  const Channel dep = zoo::depolarizing(0.98, 2);
  const Estimate f = fidelity_mc(dep, 100000, 11);
  EXPECT_LE(std::abs(f.mean - 0.99), 3 * f.std_error + 1e-15);
  const Estimate u = unitarity_mc(dep, 100000, 12);
  EXPECT_LE(std::abs(u.mean - 0.9604), 3 * u.std_error + 1e-12);

  const Channel rot = zoo::phase_unitary(0.3, 2);
  const double f_alg = convert(std::pow(std::cos(0.3), 2), Metric::kChi00, Metric::kFidelity, 2);
  const Estimate fr = fidelity_mc(rot, 100000, 13);
  EXPECT_LE(std::abs(fr.mean - f_alg), 3 * fr.std_error);

  const Channel unital = zoo::random_unital(2, 3, 21);
  const Estimate uu = unitarity_mc(unital, 100000, 14);
  EXPECT_LE(std::abs(uu.mean - unital_block(unital).squaredNorm() / 3), 3 * uu.std_error);
}

TEST(Metrics, MonteCarloIsDeterministic) {
  const Channel ch = zoo::random_cptp(3, 2, 9);
  const Estimate a = fidelity_mc(ch, 500, 77);
  const Estimate b = fidelity_mc(ch, 500, 77);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.mean, fidelity_mc(ch, 500, 78).mean);
  EXPECT_THROW(fidelity_mc(ch, 0, 1), std::invalid_argument);
}

TEST(Metrics, MonteCarloZScores) {
  // Repeated estimates at distinct seeds: every z-score within 4.
  const Channel ch = zoo::random_cptp(2, 3, 5);
  const double f = fidelity(ch);
  const double u = unitarity(ch);
  for (int rep = 0; rep < 100; ++rep) {
    const Estimate ef = fidelity_mc(ch, 2000, 1000 + rep);
    const Estimate eu = unitarity_mc(ch, 2000, 2000 + rep);
    EXPECT_LE(std::abs(ef.mean - f) / ef.std_error, 4.0) << rep;
    EXPECT_LE(std::abs(eu.mean - u) / eu.std_error, 4.0) << rep;
  }
}

}  // namespace
}  // namespace chanbound
