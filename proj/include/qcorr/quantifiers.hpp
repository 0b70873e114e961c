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

// Closed-form geometric Discord and Entanglement of Bell-diagonal states
// under the Hilbert-Schmidt and trace norms, plus X-state concurrence.
//
// Hilbert-Schmidt values are squared Euclidean distances in correlation-vector
// space. In operator space ||rho - sigma||_2^2 equals a quarter of that.
// Trace-norm values are sums of absolute eigenvalues, with no factor 1/2.

#pragma once

#include <optional>
#include <string_view>

#include "qcorr/states.hpp"

namespace qcorr {

enum class Measure {
  kHsDiscord,
  kHsEntanglement,
  kTraceDiscord,
  kTraceEntanglement,
  kConcurrence,
};

std::string_view measure_name(Measure measure);

/// Which piece of a piecewise formula attained the extremum.
///   kD1..kD3  HS discord: distance to the r1, r2 or r3 axis.
///   kI1..kI3  trace discord: which |r_j| is the intermediate value.
///   kC1, kC2  concurrence: the |e| term or the |f| term.
enum class Branch { kNone, kD1, kD2, kD3, kI1, kI2, kI3, kC1, kC2 };

std::string_view branch_name(Branch branch);
std::optional<Branch> parse_branch(std::string_view name);

/// kD1..kD3 and kI1..kI3 name an axis; other branches do not.
std::optional<Axis> branch_axis(Branch branch);
Branch hs_branch_for(Axis axis);
Branch trace_branch_for(Axis axis);

struct QuantifierValue {
  Measure measure;
  double value;
  Branch branch;
};

/// min_i (r_j^2 + r_k^2); ties resolve to the lowest index.
QuantifierValue hs_discord(const CorrelationVector& r);

/// (|r1| + |r2| + |r3| - 1)^2 / 3 outside the octahedron, 0 inside.
QuantifierValue hs_entanglement(const CorrelationVector& r);

/// Intermediate value of (|r1|, |r2|, |r3|).
QuantifierValue trace_discord(const CorrelationVector& r);

/// 2 max{0, |e| - sqrt(bc), |f| - sqrt(ad)}.
QuantifierValue concurrence_x(const XState& x);

/// Trace distance to the closest separable X state with the same diagonal.
/// Equal to the concurrence.
QuantifierValue trace_entanglement(const XState& x);

/// Wootters concurrence of an arbitrary two-qubit state, from the singular
/// values of sqrt(rho) sqrt(rho~) with rho~ the spin-flipped state.
double wootters_concurrence(const DensityMatrix& rho);

}  // namespace qcorr
