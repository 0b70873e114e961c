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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/relations.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

inline constexpr int kDefaultSamples = 1001;

/// Concurrence at or below this counts as dead when scanning the grid.
inline constexpr double kDeathTolerance = 1e-10;

struct TrajectorySample {
  double p = 0.0;
  CorrelationVector r;
  double hs_entanglement = 0.0;
  double hs_discord = 0.0;
  double concurrence = 0.0;
  double trace_discord = 0.0;
  Branch hs_branch = Branch::kNone;
  Branch trace_branch = Branch::kNone;
  Branch concurrence_branch = Branch::kNone;
};

enum class EventKind { kSuddenChangeDiscord, kSuddenDeathEntanglement };

std::string_view event_kind_name(EventKind kind);

struct EventRecord {
  EventKind kind;
  Norm norm;
  double p_detected;
  std::optional<double> p_analytic;
};

struct Trajectory {
  ChannelKind channel;
  CorrelationVector initial;
  double p_max = 1.0;
  std::vector<TrajectorySample> samples;
  std::vector<EventRecord> events;

  /// Detected events for one norm, in CriticalTimes form.
  CriticalTimes detected(Norm norm) const;
};

/// All quantifiers at one parameter value.
TrajectorySample sample_at(ChannelKind channel, const CorrelationVector& r0,
                           double p);

/// Uniform grid on [0, p_max]. Discord sudden changes are located by
/// bisection on the branch label and sudden death by bisection on the sign of
/// the entanglement, both to well below 1e-8. Phase Flip is limited to
/// p_max <= 1/2.
Trajectory run_trajectory(ChannelKind channel, const CorrelationVector& r0,
                          double p_max = 1.0, int n_samples = kDefaultSamples);

struct CurvePoint {
  double p;
  double entanglement;
  double discord;
  Branch branch;
};

struct Curve {
  Norm norm;
  std::vector<CurvePoint> points;
  std::vector<double> kinks;
  std::optional<double> sudden_death;
};

/// (E, D) pairs for p in [0, p_SD]; the last point sits exactly at p_SD when
/// the entanglement dies inside the trajectory. Throws kEmptyWindow for
/// separable initial states.
Curve d_vs_e_curve(const Trajectory& traj, Norm norm);

struct ContractivityReport {
  std::size_t pairs = 0;
  std::size_t steps = 0;
  double max_increment_hs = 0.0;
  double max_increment_trace = 0.0;
  std::size_t violations = 0;
};

/// Checks d(E(r, p), E(r', p)) is non-increasing along p_grid for both norms.
/// Violations above `tolerance` are counted, never thrown.
ContractivityReport contractivity_scan(
    ChannelKind channel,
    std::span<const std::pair<CorrelationVector, CorrelationVector>> pairs,
    std::span<const double> p_grid, double tolerance = 1e-12);

}  // namespace qcorr
