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

#ifndef CHANBOUND_ZOO_H
#define CHANBOUND_ZOO_H

#include <cstdint>
#include <optional>
#include <span>

#include "chanbound/channel.h"

namespace chanbound::zoo {

Channel identity(int d);

/// ρ ↦ pρ + (1-p) I/d. Throws ValidationError outside the CP range
/// [-1/(d²-1), 1].
Channel depolarizing(double p, int d);

/// Channel with diagonal χ = probs in the Pauli basis of d = 2^n.
Channel pauli_channel(std::span<const double> probs);

/// (e^{iφ}|0><0| + e^{-iφ}|1><1|) ⊗ I_{d/2}; χ_00 = cos²φ. d must be even.
Channel phase_unitary(double phi, int d);

/// Qubit z rotation by `angle` on the Bloch sphere.
Channel z_rotation(double angle);

/// Qubit channel with Pauli-basis Liouville matrix
///   [[1, 0, 0, 0], [0, γcosθ, -γsinθ, 0], [0, γsinθ, γcosθ, 0], [0, 0, 0, λ]].
/// p = (2γcosθ + λ)/3, u = (2γ² + λ²)/3. CP is decided from the Choi matrix.
Channel rotation_damping_qubit(double gamma, double lambda, double theta);

/// Amplitude damping with decay probability gamma_ad followed by a z rotation.
Channel amplitude_damping_qubit(double gamma_ad, double rotation);

Channel random_unitary(int d, std::uint64_t seed);

/// Stinespring dilation of a Haar unitary on d·kraus_rank dimensions.
Channel random_cptp(int d, int kraus_rank, std::uint64_t seed);

/// Convex mixture of `n_unitaries` Haar unitaries; always unital.
Channel random_unital(int d, int n_unitaries, std::uint64_t seed);

/// exp(-iεH) with H a normalized GUE draw, composed with
/// (1-t)·id + t·random_cptp. ε ∈ [0, max_angle], t ∈ [0, max_mix] uniformly.
/// Produces channels close to the identity, where the composite-angle
/// conditions are satisfiable.
Channel random_near_identity(int d, double max_angle, double max_mix, std::uint64_t seed);

struct EnsembleSpec {
  int dim = 2;
  std::optional<double> target_fidelity;
  std::optional<double> target_unitarity;
  double tolerance = 1e-9;
  int kraus_rank = 4;
  std::uint64_t seed = 1;
};

/// Random channel hitting (F, u) targets: draws λ inside the feasible window
/// of the rotation-damping family (window endpoints found by bisection),
/// solves for γ and θ, then conjugates by a Haar unitary. Qubit only.
/// Missing targets are drawn at random. Throws std::invalid_argument for
/// infeasible targets.
Channel random_with_targets(const EnsembleSpec &spec);

}  // namespace chanbound::zoo

#endif  // CHANBOUND_ZOO_H
