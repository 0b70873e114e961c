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

// Closed-form Discord-vs-Entanglement relations and the analytic
// sudden-change and sudden-death parameters.
//
// Phase Damping, Bit Flip, Bit-Phase Flip and Phase Flip all leave one
// correlation axis untouched and multiply the other two by a common factor
// X(p). Bit Flip and Bit-Phase Flip reduce to Phase Damping once the preserved
// axis is relabelled as r3 (to_channel_frame). Depolarizing multiplies all
// three components by X(p) = (1-p)^2.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Two |r_i| closer than this are treated as tied.
inline constexpr double kOrderingTolerance = 1e-12;

struct RelationCase {
  ChannelKind channel;
  Norm norm;
  /// Axes sorted by increasing |r_i| of the initial state.
  std::array<Axis, 3> ordering;
  CorrelationVector initial;
};

/// Derives the ordering from `initial`. Throws kDegenerateOrdering on ties,
/// except under Depolarizing where no piece depends on the ordering, and
/// kNonPhysical for states outside the tetrahedron.
RelationCase make_relation_case(ChannelKind channel, Norm norm,
                                const CorrelationVector& initial);

/// Rejects hand-built cases whose ordering disagrees with the initial state.
void validate(const RelationCase& rc);

/// e.g. "|r3|<|r2|<|r1|".
std::string ordering_label(const std::array<Axis, 3>& ordering);

struct CriticalTimes {
  std::vector<double> sudden_changes;
  std::optional<double> sudden_death;
};

/// Discord sudden changes for the case's norm, plus the sudden-death
/// parameter when the initial state is entangled and dies inside (0, 1).
CriticalTimes critical_times(const RelationCase& rc);

/// Parameter at which the entanglement (HS distance to the octahedron, or
/// concurrence for the trace norm) first vanishes. Needs no strict ordering.
/// nullopt when the state only reaches the separable set at the end of the
/// parameter range. Throws kNotEntangled for separable input.
std::optional<double> sudden_death_time(ChannelKind channel, Norm norm,
                                        const CorrelationVector& initial);

/// Factor multiplying the shrinking components at parameter p.
double shrink_factor(ChannelKind channel, double p);
/// Inverse of shrink_factor on the monotone range.
double p_for_factor(ChannelKind channel, double factor);

/// Swaps the preserved axis into the r3 slot (an involution).
CorrelationVector to_channel_frame(ChannelKind channel,
                                   const CorrelationVector& r);

/// Concurrence branch (C1 or C2) of r seen in the channel frame. This is the
/// branch that fixes the +/- pairing in the trace relations.
Branch frame_concurrence_branch(ChannelKind channel,
                                const CorrelationVector& r);

/// Discord branch the analytic piecewise structure predicts at parameter p.
Branch active_hs_branch(const RelationCase& rc, double p);
Branch active_trace_branch(const RelationCase& rc, double p);

/// HS discord as a function of the HS entanglement on [0, p_SD], for the
/// supplied active branch D1, D2 or D3.
double hs_discord_from_entanglement(double entanglement, const RelationCase& rc,
                                    std::optional<Branch> branch);

/// Trace discord as a function of the concurrence on [0, p_SD].
/// `concurrence_branch` (C1/C2, see frame_concurrence_branch) selects the
/// sign pairing and `discord_branch` (I1..I3) the active piece.
double trace_discord_from_concurrence(double concurrence,
                                      const RelationCase& rc,
                                      std::optional<Branch> concurrence_branch,
                                      std::optional<Branch> discord_branch);

/// True for trace-norm pieces obtained by substitution rather than printed in
/// closed form: the shrinking piece after the single sudden change, and the
/// first piece before two sudden changes.
bool relation_is_extrapolated(const RelationCase& rc, Branch discord_branch);

/// Trace discord under Phase Damping from the ordering case analysis.
double piecewise_discord_pd_trace(double p, const CorrelationVector& r0);

}  // namespace qcorr
