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

#ifndef CHANBOUND_RB_H
#define CHANBOUND_RB_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chanbound/bounds.h"
#include "chanbound/channel.h"
#include "chanbound/metrics.h"

namespace chanbound::rb {

/// A finite single-qubit gate group with per-gate noise E_g applied after the
/// ideal gate. Elements are stored phase-normalized (first entry of
/// magnitude > 1e-9 made real positive) so that equality up to global phase
/// is entry-wise equality.
struct GateSet {
  std::string name;
  std::vector<std::string> labels;
  std::vector<CMatrix> unitaries;
  std::vector<RMatrix> ideal;  ///< Liouville matrices of the unitaries
  std::vector<Channel> noise;
  std::vector<std::vector<int>> table;  ///< table[a][b] = index of U_a U_b
  std::vector<int> inverse;
  int identity_index = 0;

  int size() const { return static_cast<int>(unitaries.size()); }
  int dim() const { return static_cast<int>(unitaries.front().rows()); }
  /// Index of U up to global phase, or -1.
  int find(const CMatrix &u) const;
  int find(const std::string &label) const;
};

/// Close a generator set under multiplication. Noise defaults to identity.
GateSet generate_group(const std::string &name, const std::vector<CMatrix> &generators);

/// The 24-element single-qubit Clifford group.
GateSet clifford_24();
/// The 12-element tetrahedral subgroup (π rotations about x, y, z and
/// 2π/3 rotations about the cube diagonals); a unitary 2-design.
GateSet twodesign_12();

GateSet with_noise(GateSet gs, const Channel &noise);

/// Σ_{g,h} |tr(g†h)|⁴ / |G|². Equals 2 for a qubit unitary 2-design.
double frame_potential(const GateSet &gs);

/// |G|⁻¹ Σ_g E_g.
Channel average_error(const GateSet &gs);

/// |G|⁻¹ Σ_g G† Λ G.
Channel twirl(const GateSet &gs, const Channel &ch);

/// Standard RB, or interleaved RB with gate `gate` inserted after every random
/// element. The interleaved gate carries `gate_noise` if given, otherwise
/// its entry in the noise map.
struct Mode {
  bool interleaved = false;
  int gate = -1;
  std::optional<Channel> gate_noise;

  static Mode standard() { return {}; }
  static Mode interleaved_with(int gate, std::optional<Channel> noise = std::nullopt) {
    return Mode{true, gate, std::move(noise)};
  }
};

/// |0><0| as state and measurement effect.
CMatrix ground_projector(int d);

/// Sequence-averaged survival probability for gate-independent noise, from
/// the twirled per-step channel:
///   <<Q| E_inv 𝒯[Λ]^m |ρ>>,   Λ = E (standard) or E_h ∘ H E H† (interleaved)
/// Throws std::invalid_argument if the noise map is not constant.
double survival_exact(const GateSet &gs, const Mode &mode, int m, const CMatrix &state, const CMatrix &meas);

/// Per-step channel Λ whose twirl drives the exact decay.
Channel step_channel(const GateSet &gs, const Mode &mode);

/// Monte-Carlo survival over n_seqs uniformly random sequences of length m,
/// closed by the exact inverse element (which carries its own noise).
Estimate survival_sampled(const GateSet &gs, const Mode &mode, int m, int n_seqs, std::uint64_t seed,
                          const CMatrix &state, const CMatrix &meas);

struct DecayFit {
  double A = 0.0;
  double B = 0.0;
  double p = 0.0;
  double residual = 0.0;     ///< ||y - model||_2
  double p_std_error = 0.0;  ///< from the Gauss-Newton covariance
  bool identifiable = true;  ///< false when A ≈ 0
  int iterations = 0;
};

struct SurvivalPoint {
  int m = 0;
  double p_surv = 0.0;
  double std_error = 0.0;
};

/// Least-squares fit of y = A p^m + B. A grid over p (with A, B solved
/// linearly) seeds a Levenberg-Marquardt refinement.
DecayFit fit_decay(const std::vector<SurvivalPoint> &points);

enum class Method { kExact, kSampled };

struct Run {
  Mode mode;
  std::vector<int> lengths;
  Method method = Method::kSampled;
  int n_seqs = 200;
  std::uint64_t seed = 1;
  std::vector<SurvivalPoint> survival;
  DecayFit fit;
};

std::vector<int> default_lengths();

/// Simulate every length in `lengths` (strictly increasing, each >= 1) and
/// fit the decay.
Run simulate(const GateSet &gs, const Mode &mode, const std::vector<int> &lengths, Method method, int n_seqs,
             std::uint64_t seed);

struct InterleavedReport {
  double p_standard = 0.0;
  double p_interleaved = 0.0;
  double u_reference = 1.0;
  double theta_reference = 0.0;
  BoundInterval chi00_route;      ///< on F(E_h), from the χ_00 composition bound
  BoundInterval unitarity_route;  ///< on F(E_h), from the unitarity bound
};

InterleavedReport interleaved_report(double p_std, double p_int, double u_ref, int d);

/// Channels for the interleaved RB demonstration: a reference error E
/// (depolarizing after a small z rotation) and two gate errors E_h giving the
/// same composite fidelity, one a pure z rotation and one depolarizing.
struct IrbDemo {
  Channel reference;
  Channel coherent_gate_error;
  Channel stochastic_gate_error;
  double reference_rotation = 0.0;
  double reference_depolarizing = 1.0;
  double gate_rotation = 0.0;
};

IrbDemo make_irb_demo(double f_reference = 0.9975, double f_composite = 0.9960, double f_coherent_gate = 0.9991,
                      double f_stochastic_gate = 0.9975);

}  // namespace chanbound::rb

#endif  // CHANBOUND_RB_H
