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

#include "qcorr/dynamics.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "qcorr/sampling.hpp"
#include "test_util.hpp"

using namespace qcorr;

namespace {

const CorrelationVector kRef{0.65, 0.59, -0.38};
constexpr ChannelKind kPd = ChannelKind::kPhaseDamping;
constexpr ChannelKind kDepol = ChannelKind::kDepolarizing;

std::vector<double> changes(const Trajectory& traj, Norm norm) {
  return traj.detected(norm).sudden_changes;
}

}  // namespace

TEST(Dynamics, PhaseDampingTrajectoryEndsOnR3Axis) {
  const CorrelationVector r0{-0.7, -0.7, -0.7};
  const Trajectory traj = run_trajectory(kPd, r0, 1.0, 101);
  ASSERT_EQ(traj.samples.size(), 101u);
  const CorrelationVector end = traj.samples.back().r;
  EXPECT_EQ(end.r1(), 0.0);
  EXPECT_EQ(end.r2(), 0.0);
  EXPECT_EQ(end.r3(), -0.7);
  for (const TrajectorySample& s : traj.samples) {
    EXPECT_EQ(s.r.r3(), -0.7);
    EXPECT_NEAR(s.r.r1(), s.r.r2(), 1e-15);
  }
}

TEST(Dynamics, GridIsUniformAndPhysical) {
  const Trajectory traj = run_trajectory(kPd, kRef, 0.8, 81);
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    EXPECT_NEAR(traj.samples[k].p, 0.01 * k, 1e-15);
    EXPECT_TRUE(is_physical(traj.samples[k].r));
    EXPECT_GE(traj.samples[k].hs_entanglement, 0.0);
    EXPECT_GE(traj.samples[k].concurrence, 0.0);
  }
  EXPECT_EQ(traj.samples.back().p, 0.8);
}

TEST(Dynamics, PhaseDampingEventsOfRefState) {
  const Trajectory traj = run_trajectory(kPd, kRef);
  const auto tr = changes(traj, Norm::kTrace);
  ASSERT_EQ(tr.size(), 2u);
  EXPECT_NEAR(tr[0], 1.0 - std::sqrt(0.38 / 0.59), 1e-8);
  EXPECT_NEAR(tr[1], 1.0 - std::sqrt(0.38 / 0.65), 1e-8);
  const auto hs = changes(traj, Norm::kHilbertSchmidt);
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_NEAR(hs[0], 1.0 - std::sqrt(0.38 / 0.65), 1e-8);
  for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
    const auto death = traj.detected(norm).sudden_death;
    ASSERT_TRUE(death.has_value());
    EXPECT_NEAR(*death, 1.0 - std::sqrt(0.5), 1e-8);
  }
  for (const EventRecord& ev : traj.events) {
    ASSERT_TRUE(ev.p_analytic.has_value());
    EXPECT_LE(std::abs(ev.p_detected - *ev.p_analytic), 1e-6);
  }
}

TEST(Dynamics, DepolarizingEventsOfRefState) {
  const Trajectory traj = run_trajectory(kDepol, kRef);
  EXPECT_TRUE(changes(traj, Norm::kHilbertSchmidt).empty());
  EXPECT_TRUE(changes(traj, Norm::kTrace).empty());
  for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
    const auto death = traj.detected(norm).sudden_death;
    ASSERT_TRUE(death.has_value());
    EXPECT_NEAR(*death, 1.0 - std::sqrt(1.0 / 1.62), 1e-8);
  }
}

TEST(Dynamics, EntanglementNonIncreasing) {
  Rng rng(31);
  for (ChannelKind kind : {kPd, ChannelKind::kBitFlip,
                           ChannelKind::kBitPhaseFlip, kDepol}) {
    for (int k = 0; k < 20; ++k) {
      const Trajectory traj =
          run_trajectory(kind, random_strict_entangled_bd(rng), 1.0, 201);
      for (std::size_t j = 1; j < traj.samples.size(); ++j) {
        EXPECT_LE(traj.samples[j].hs_entanglement,
                  traj.samples[j - 1].hs_entanglement + 1e-15);
        EXPECT_LE(traj.samples[j].concurrence,
                  traj.samples[j - 1].concurrence + 1e-15);
      }
    }
  }
}

TEST(Dynamics, DetectedEventsMatchAnalytic) {
  Rng rng(32);
  for (ChannelKind kind : kAllChannels) {
    for (int k = 0; k < 20; ++k) {
      const CorrelationVector r0 = random_strict_entangled_bd(rng, 1e-2);
      const Trajectory traj =
          run_trajectory(kind, r0, monotone_p_limit(kind), 1001);
      for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
        const CriticalTimes analytic =
            critical_times(make_relation_case(kind, norm, r0));
        const CriticalTimes detected = traj.detected(norm);
        ASSERT_EQ(detected.sudden_changes.size(),
                  analytic.sudden_changes.size())
            << channel_name(kind) << " " << norm_name(norm);
        for (std::size_t i = 0; i < analytic.sudden_changes.size(); ++i) {
          EXPECT_NEAR(detected.sudden_changes[i], analytic.sudden_changes[i],
                      1e-6);
        }
        ASSERT_EQ(detected.sudden_death.has_value(),
                  analytic.sudden_death.has_value());
        if (analytic.sudden_death) {
          EXPECT_NEAR(*detected.sudden_death, *analytic.sudden_death, 1e-8);
        }
      }
    }
  }
}

TEST(Dynamics, InvalidArguments) {
  EXPECT_QCORR_ERROR(run_trajectory(kPd, kRef, 1.0, 1), ErrorKind::kOutOfRange);
  EXPECT_QCORR_ERROR(run_trajectory(kPd, kRef, 0.0, 11), ErrorKind::kOutOfRange);
  EXPECT_QCORR_ERROR(run_trajectory(ChannelKind::kPhaseFlip, kRef, 0.7, 11),
                     ErrorKind::kOutOfRange);
  EXPECT_QCORR_ERROR(run_trajectory(kPd, {1, 1, 1}, 1.0, 11),
                     ErrorKind::kNonPhysical);
}

TEST(Dynamics, PhaseDampingTraceCurve) {
  const Trajectory traj = run_trajectory(kPd, kRef);
  const Curve curve = d_vs_e_curve(traj, Norm::kTrace);
  ASSERT_FALSE(curve.points.empty());
  EXPECT_NEAR(curve.points.front().entanglement, 0.31, 1e-15);
  EXPECT_EQ(curve.points.front().discord, 0.59);
  EXPECT_EQ(curve.kinks.size(), 2u);
  ASSERT_TRUE(curve.sudden_death.has_value());
  EXPECT_EQ(curve.points.back().p, *curve.sudden_death);
  EXPECT_NEAR(*curve.sudden_death, 1.0 - std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(curve.points.back().entanglement, 0.0, 1e-15);
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    EXPECT_GT(curve.points[k].p, curve.points[k - 1].p);
  }
  EXPECT_EQ(d_vs_e_curve(traj, Norm::kHilbertSchmidt).kinks.size(), 1u);
}

TEST(Dynamics, DepolarizingCurvesAreSmooth) {
  const Trajectory traj = run_trajectory(kDepol, kRef);
  const Curve hs = d_vs_e_curve(traj, Norm::kHilbertSchmidt);
  EXPECT_TRUE(hs.kinks.empty());
  EXPECT_NEAR(hs.points.front().entanglement, 0.128133333333, 1e-12);
  EXPECT_NEAR(hs.points.front().discord, 0.4925, 1e-15);
  EXPECT_TRUE(d_vs_e_curve(traj, Norm::kTrace).kinks.empty());
}

TEST(Dynamics, SeparableCurveIsEmpty) {
  const Trajectory traj = run_trajectory(kPd, {0.2, 0.1, 0.05}, 1.0, 11);
  EXPECT_QCORR_ERROR(d_vs_e_curve(traj, Norm::kTrace), ErrorKind::kEmptyWindow);
  EXPECT_QCORR_ERROR(d_vs_e_curve(traj, Norm::kHilbertSchmidt),
                     ErrorKind::kEmptyWindow);
}

TEST(Dynamics, ContractivityIdenticalPair) {
  const std::vector<std::pair<CorrelationVector, CorrelationVector>> pairs = {
      {kRef, kRef}};
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  const ContractivityReport rep = contractivity_scan(kPd, pairs, grid);
  EXPECT_EQ(rep.max_increment_hs, 0.0);
  EXPECT_EQ(rep.max_increment_trace, 0.0);
  EXPECT_EQ(rep.violations, 0u);
}

TEST(Dynamics, ContractivityBellVersusMixed) {
  const CorrelationVector bell{1, 1, -1};
  const CorrelationVector mixed{0, 0, 0};
  EXPECT_NEAR(trace_norm(bd_difference(bell, mixed)), 1.5, 1e-14);
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
  const std::vector<std::pair<CorrelationVector, CorrelationVector>> pairs = {
      {bell, mixed}};
  const ContractivityReport rep = contractivity_scan(kDepol, pairs, grid);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_EQ(rep.steps, 100u);
  double prev = 1.5;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double p = grid[k];
    const double d = trace_norm(bd_difference(evolved_vector(kDepol, bell, p),
                                              evolved_vector(kDepol, mixed, p)));
    EXPECT_LT(d, prev) << p;
    prev = d;
  }
}

TEST(Dynamics, ContractivityRandomPairs) {
  Rng rng(33);
  std::vector<std::pair<CorrelationVector, CorrelationVector>> pairs;
  for (int k = 0; k < 30; ++k) {
    pairs.emplace_back(random_bd_state(rng), random_bd_state(rng));
  }
  for (ChannelKind kind : kAllChannels) {
    std::vector<double> grid;
    for (int k = 0; k <= 50; ++k) grid.push_back(monotone_p_limit(kind) * k / 50);
    EXPECT_EQ(contractivity_scan(kind, pairs, grid).violations, 0u)
        << channel_name(kind);
  }
}

TEST(Dynamics, EventKindNames) {
  EXPECT_EQ(event_kind_name(EventKind::kSuddenChangeDiscord),
            "SuddenChangeDiscord");
  EXPECT_EQ(event_kind_name(EventKind::kSuddenDeathEntanglement),
            "SuddenDeathEntanglement");
}
