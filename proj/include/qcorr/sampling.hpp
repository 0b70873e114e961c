// Copyright 2026 The qcorr Authors
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

// Seeded generators for test and verification state suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

/// mt19937_64 with a portable double conversion, so a seed reproduces the
/// same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Populations uniform on the simplex, each coherence uniform in its disk
/// |e| <= sqrt(ad), |f| <= sqrt(bc) with uniform phase.
XState random_xstate(Rng& rng);

/// random_xstate conditioned on |e| > sqrt(bc) or |f| > sqrt(ad).
XState random_entangled_xstate(Rng& rng);

/// Uniform in the tetrahedron.
CorrelationVector random_bd_state(Rng& rng);

/// Entangled Bell-diagonal state whose |r_i| differ pairwise by at least
/// min_gap.
CorrelationVector random_strict_entangled_bd(Rng& rng, double min_gap = 1e-3);

/// Physical points of the n x n x n grid on [-1, 1]^3.
std::vector<CorrelationVector> physical_grid(int points_per_axis);

}  // namespace qcorr
