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

#ifndef CHANBOUND_RANDOM_H
#define CHANBOUND_RANDOM_H

#include <cstdint>
#include <random>

#include "chanbound/linalg.h"

namespace chanbound {

using Rng = std::mt19937_64;

/// Engine for item `index` of a run seeded with `seed`. Items never share
/// state, so results do not depend on how work is split across workers.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

/// d×d matrix of i.i.d. standard complex Gaussians (E|z|² = 1).
CMatrix ginibre(int rows, int cols, Rng &rng);

/// Haar-random unit vector in C^d.
CVector haar_state(int d, Rng &rng);

/// Haar-random d×d unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
CMatrix haar_unitary(int d, Rng &rng);

}  // namespace chanbound

#endif  // CHANBOUND_RANDOM_H
