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

#include <cmath>
#include <vector>

#include "chanbound/metrics.h"
#include "chanbound/random.h"
#include "chanbound/zoo.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace chanbound {
namespace {

std::vector<CMatrix> random_kraus(int d, int rank, std::uint64_t seed) {
  Rng rng = make_rng(seed, 99);
  const CMatrix v = haar_unitary(d * rank, rng).leftCols(d);
  std::vector<CMatrix> k;
  for (int j = 0; j < rank; ++j) k.push_back(v.middleRows(j * d, d));
  return k;
}

TEST(Channel, IdentityKrausGivesIdentityLiouville) {
  const CMatrix id[1] = {CMatrix::Identity(2, 2)};
  const Channel ch = from_kraus(id);
  EXPECT_LT((ch.liouville() - RMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Channel, PhaseUnitaryChi00) {
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, 0.3);
  u(1, 1) = std::polar(1.0, -0.3);
  const CMatrix k[1] = {u};
  const Channel ch = from_kraus(k);
  EXPECT_NEAR(to_chi(ch)(0, 0).real(), std::cos(0.3) * std::cos(0.3), 1e-12);
  EXPECT_NEAR(to_chi(ch)(0, 0).real(), 0.912668, 1e-6);
}

TEST(Channel, NonTracePreservingKrausThrows) {
  const CMatrix k[1] = {std::sqrt(0.9) * CMatrix::Identity(2, 2)};
  EXPECT_THROW(from_kraus(k), ValidationError);
}

TEST(Channel, KrausDimensionMismatchThrows) {
  const CMatrix k[2] = {CMatrix::Identity(2, 2), CMatrix::Zero(3, 3)};
  EXPECT_THROW(from_kraus(k), std::invalid_argument);
  EXPECT_THROW(from_kraus(std::span<const CMatrix>{}), std::invalid_argument);
}

TEST(Channel, LiouvilleMatchesExplicitTraceFormula) {
  for (int d : {2, 3, 4}) {
    const auto kraus = random_kraus(d, 3, 11 + d);
    const Channel ch = from_kraus(kraus);
    const RMatrix expected = oracle::liouville_from_kraus(kraus, ch.basis());
    EXPECT_LT((ch.liouville() - expected).cwiseAbs().maxCoeff(), 1e-12) << "d=" << d;
  }
}

TEST(Channel, ChiMatchesKrausCoefficients) {
  for (int d : {2, 3, 4}) {
    const auto kraus = random_kraus(d, 2, 5 + d);
    const Channel ch = from_kraus(kraus);
    const CMatrix expected = oracle::chi_from_kraus(kraus, ch.basis());
    EXPECT_LT((to_chi(ch) - expected).cwiseAbs().maxCoeff(), 1e-12) << "d=" << d;
    EXPECT_NEAR(to_chi(ch).trace().real(), 1.0, 1e-12);
  }
}

TEST(Channel, ChiIdentity) {
  const OperatorBasis b = default_basis(3);
  CMatrix chi = CMatrix::Zero(9, 9);
  chi(0, 0) = 1.0;
  EXPECT_LT((from_chi(chi, b).liouville() - RMatrix::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Channel, PauliChiGivesDiagonalLiouville) {
  const OperatorBasis b = make_basis(2, BasisKind::kPauli);
  CMatrix chi = CMatrix::Zero(4, 4);
  chi.diagonal() << 0.97, 0.01, 0.01, 0.01;
  const Channel ch = from_chi(chi, b);
  // Oracle: Kraus {√q_k σ_k}.
  std::vector<CMatrix> kraus;
  for (int k = 0; k < 4; ++k) kraus.push_back(std::sqrt(chi(k, k).real() * 2.0) * b[k]);
  const RMatrix expected = oracle::liouville_from_kraus(kraus, b);
  EXPECT_LT((ch.liouville() - expected).cwiseAbs().maxCoeff(), 1e-12);
  RMatrix off = ch.liouville();
  off.diagonal().setZero();
  EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(ch.liouville()(1, 1), 0.96, 1e-12);
  EXPECT_NEAR(ch.liouville()(3, 3), 0.96, 1e-12);
}

TEST(Channel, ChiRejectsInvalidInput) {
  const OperatorBasis b = default_basis(2);
  CMatrix chi = CMatrix::Zero(4, 4);
  chi(0, 0) = 0.5;
  EXPECT_THROW(from_chi(chi, b), ValidationError);  // trace 0.5
  chi(0, 0) = 1.2;
  chi(1, 1) = -0.2;
  EXPECT_THROW(from_chi(chi, b), ValidationError);  // not PSD
  // PSD with unit trace but not trace preserving: χ = |v><v| with v mixing B0 and B3.
  CVector v(4);
  v << std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5);
  EXPECT_THROW(from_chi(v * v.adjoint(), b), ValidationError);
}

TEST(Channel, ChiRoundTripRandomChannels) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 20; ++s) {
      const Channel ch = zoo::random_cptp(d, 1 + s % (d * d), 100 * d + s);
      const CMatrix chi = to_chi(ch);
      EXPECT_LT((to_chi(from_chi(chi, ch.basis())) - chi).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Channel, KrausOfIdentityIsIdentity) {
  const auto k = to_kraus(zoo::identity(3));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_LT((k[0] - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Channel, KrausOfDepolarizingMatchesChiWeights) {
  const Channel ch = zoo::depolarizing(0.97, 2);
  const auto k = to_kraus(ch);
  ASSERT_EQ(k.size(), 4u);
  const CMatrix expected = oracle::chi_from_kraus(oracle::depolarizing_kraus(0.97), ch.basis());
  EXPECT_LT((oracle::chi_from_kraus(k, ch.basis()) - expected).cwiseAbs().maxCoeff(), 1e-12);
  double weights = 0.0;
  for (const CMatrix &a : k) weights += (a.adjoint() * a).trace().real() / 2.0;
  EXPECT_NEAR(weights, 1.0, 1e-12);
}

TEST(Channel, KrausPhaseConventionAndCpFailure) {
  const Channel ch = zoo::random_cptp(3, 4, 77);
  for (const CMatrix &a : to_kraus(ch)) {
    EXPECT_GE(a.trace().real(), -1e-14);
    EXPECT_LT(std::abs(a.trace().imag()), 1e-12);
  }
  // Choi eigenvalue -1e-4: depolarizing slightly past the CP edge p = -1/3.
  // The Choi matrix has trace d, so its eigenvalues are (1+3p)/2 and (1-p)/2.
  const double p = -1.0 / 3.0 - 2e-4 / 3.0;
  RMatrix l = RMatrix::Identity(4, 4) * p;
  l(0, 0) = 1.0;
  const Channel bad = Channel::unchecked(default_basis(2), l);
  EXPECT_NEAR(validate_cptp(bad).min_choi_eigenvalue, -1e-4, 1e-12);
  EXPECT_THROW(to_kraus(bad), ValidationError);
}

TEST(Channel, RepresentationRoundTripFixedPoint) {
  // Kraus -> Liouville -> χ -> Kraus -> Liouville.
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 1000; ++s) {
      const Channel ch = zoo::random_cptp(d, 1 + s % (d * d), 7919 * d + s);
      const Channel via_chi = from_chi(to_chi(ch), ch.basis());
      const auto kraus = to_kraus(via_chi);
      const Channel back = from_kraus(kraus, ch.basis());
      ASSERT_LT((back.liouville() - ch.liouville()).cwiseAbs().maxCoeff(), 1e-9) << "d=" << d << " s=" << s;
    }
  }
}

TEST(Channel, ComposeMatchesMergedKrausProduct) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 50; ++s) {
      const auto kx = random_kraus(d, 2, 1000 + s);
      const auto ky = random_kraus(d, 3, 2000 + s);
      std::vector<CMatrix> merged;
      for (const auto &x : kx)
        for (const auto &y : ky) merged.push_back(x * y);
      const Channel composite = compose(from_kraus(kx), from_kraus(ky));
      const CMatrix expected = oracle::chi_from_kraus(merged, composite.basis());
      ASSERT_LT((to_chi(composite) - expected).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Channel, ComposeExamples) {
  const Channel a = compose(zoo::phase_unitary(0.2, 2), zoo::phase_unitary(0.5, 2));
  EXPECT_LT((a.liouville() - zoo::phase_unitary(0.7, 2).liouville()).cwiseAbs().maxCoeff(), 1e-12);
  const Channel b = compose(zoo::depolarizing(0.9, 3), zoo::depolarizing(0.8, 3));
  EXPECT_LT((b.liouville() - zoo::depolarizing(0.72, 3).liouville()).cwiseAbs().maxCoeff(), 1e-15);
  const Channel r = zoo::random_cptp(2, 3, 4);
  EXPECT_LT((compose(r, zoo::identity(2)).liouville() - r.liouville()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(compose(r, zoo::identity(3)), std::invalid_argument);
}

TEST(Channel, ComposeSeqActsRightToLeft) {
  const Channel x = zoo::random_cptp(2, 2, 1);
  const Channel y = zoo::random_cptp(2, 2, 2);
  const Channel z = zoo::random_cptp(2, 2, 3);
  const Channel seq[3] = {x, y, z};
  const RMatrix expected = x.liouville() * y.liouville() * z.liouville();
  EXPECT_LT((compose_seq(seq).liouville() - expected).cwiseAbs().maxCoeff(), 1e-14);
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 1.0;
  const CMatrix staged = chanbound::apply(x, chanbound::apply(y, chanbound::apply(z, rho)));
  EXPECT_LT((chanbound::apply(compose_seq(seq), rho) - staged).cwiseAbs().maxCoeff(), 1e-14);
}


TEST(Channel, BlockFormExamples) {
  const Channel id = zoo::identity(3);
  EXPECT_LT((unital_block(id) - RMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(nonunital_vector(id).cwiseAbs().maxCoeff(), 0.0);

  const Channel dep = from_kraus(oracle::depolarizing_kraus(0.93));
  EXPECT_LT((unital_block(dep) - 0.93 * RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(nonunital_vector(dep).cwiseAbs().maxCoeff(), 1e-15);

  // Amplitude damping: K0 = diag(1, √(1-γ)), K1 = √γ |0><1|.
  const double g = 0.2;
  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  const Channel ad = from_kraus(std::vector<CMatrix>{k0, k1});
  const RVector n = nonunital_vector(ad);
  EXPECT_NEAR(n(2), g, 1e-15);  // Z component
  EXPECT_NEAR(n.head(2).norm(), 0.0, 1e-15);
}

TEST(Channel, BlockFormReassemblesExactly) {
  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 30; ++s) {
      const Channel ch = zoo::random_cptp(d, 2, 300 + s);
      const RMatrix l = ch.liouville();
      EXPECT_NEAR(l(0, 0), 1.0, 1e-12);
      EXPECT_LT(l.row(0).tail(d * d - 1).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_EQ(assemble_block(nonunital_vector(ch), unital_block(ch)), l);
    }
  }
}

TEST(Channel, ValidateCptp) {
  const CPTPReport id = validate_cptp(zoo::identity(2));
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(id.tp_deviation, 0.0);
  EXPECT_NEAR(id.min_choi_eigenvalue, 0.0, 1e-15);

  RMatrix l = RMatrix::Identity(4, 4) * 1.2;
  l(0, 0) = 1.0;
  const CPTPReport over = validate_cptp(Channel::unchecked(default_basis(2), l));
  EXPECT_TRUE(over.is_tp);
  EXPECT_FALSE(over.is_cp);
  // Choi eigenvalues of D_p are (1+3p)/2 and (1-p)/2.
  EXPECT_NEAR(over.min_choi_eigenvalue, -0.1, 1e-14);
  EXPECT_THROW(Channel::from_liouville(default_basis(2), l), ValidationError);

  l = RMatrix::Identity(4, 4);
  l(0, 3) = 0.01;
  const CPTPReport not_tp = validate_cptp(Channel::unchecked(default_basis(2), l));
  EXPECT_FALSE(not_tp.is_tp);
  EXPECT_NEAR(not_tp.tp_deviation, 0.01, 1e-15);

  for (int d : {2, 3, 4}) {
    for (int s = 0; s < 50; ++s) EXPECT_TRUE(validate_cptp(zoo::random_cptp(d, 1 + s % (d * d), s)).ok());
  }
}

TEST(Channel, ApplyMatchesKrausAction) {
  const auto kraus = random_kraus(3, 2, 42);
  const Channel ch = from_kraus(kraus);
  Rng rng = make_rng(5);
  const CVector psi = haar_state(3, rng);
  const CMatrix rho = psi * psi.adjoint();
  EXPECT_LT((chanbound::apply(ch, rho) - oracle::apply_kraus(kraus, rho)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Channel, ChangeBasisPreservesAction) {
  const auto kraus = random_kraus(2, 3, 8);
  const Channel pauli = from_kraus(kraus, make_basis(2, BasisKind::kPauli));
  const Channel gm = change_basis(pauli, make_basis(2, BasisKind::kGellMann));
  EXPECT_EQ(gm.basis().kind(), BasisKind::kGellMann);
  const RMatrix expected = oracle::liouville_from_kraus(kraus, gm.basis());
  EXPECT_LT((gm.liouville() - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(chi00(gm), chi00(pauli), 1e-12);
}

TEST(Channel, MixIsConvexCombination) {
  const Channel a = zoo::random_unitary(2, 1);
  const Channel b = zoo::depolarizing(0.5, 2);
  const Channel parts[2] = {a, b};
  const double w[2] = {0.25, 0.75};
  const Channel m = mix(parts, w);
  EXPECT_LT((m.liouville() - (0.25 * a.liouville() + 0.75 * b.liouville())).cwiseAbs().maxCoeff(), 1e-15);
  const double bad[2] = {0.5, 0.6};
  EXPECT_THROW(mix(parts, bad), ValidationError);
}

TEST(Channel, ConjugationIsOrthogonalOnUnitalBlock) {
  Rng rng = make_rng(17);
  const Channel ch = zoo::random_cptp(3, 3, 17);
  const CMatrix u = haar_unitary(3, rng);
  const Channel c = conjugate(ch, u);
  const Channel expected = compose_seq(std::vector<Channel>{unitary_channel(u), ch, unitary_channel(u.adjoint())});
  EXPECT_LT((c.liouville() - expected.liouville()).cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
}  // namespace chanbound
