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

#include "qcorr/quantifiers.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "qcorr/channels.hpp"
#include "qcorr/sampling.hpp"

using namespace qcorr;

namespace {

const CorrelationVector kRef{0.65, 0.59, -0.38};

XState bell_xstate() {
  XState x;
  x.a = 0.0;
  x.d = 0.0;
  x.b = 0.5;
  x.c = 0.5;
  x.f = {0.5, 0.0};
  return x;
}

}  // namespace

TEST(Quantifiers, HsDiscordExamples) {
  QuantifierValue q = hs_discord({0.3, 0, 0});
  EXPECT_EQ(q.value, 0.0);
  EXPECT_EQ(q.branch, Branch::kD1);
  q = hs_discord(kRef);
  EXPECT_NEAR(q.value, 0.4925, 1e-15);
  EXPECT_EQ(q.branch, Branch::kD1);
  q = hs_discord({1, 1, -1});
  EXPECT_EQ(q.value, 2.0);
  EXPECT_EQ(q.branch, Branch::kD1);
  EXPECT_EQ(hs_discord({0.1, 0.2, 0.6}).branch, Branch::kD3);
  EXPECT_EQ(hs_discord({0.1, 0.6, 0.6}).branch, Branch::kD2);
}

TEST(Quantifiers, HsEntanglementExamples) {
  EXPECT_EQ(hs_entanglement({0.2, 0.2, 0.2}).value, 0.0);
  EXPECT_NEAR(hs_entanglement(kRef).value, 0.62 * 0.62 / 3.0, 1e-15);
  EXPECT_NEAR(hs_entanglement(kRef).value, 0.128133333333, 1e-12);
  EXPECT_NEAR(hs_entanglement({1, 1, -1}).value, 4.0 / 3.0, 1e-15);
  EXPECT_EQ(hs_entanglement({0.5, 0.3, -0.2}).value, 0.0);
}

TEST(Quantifiers, TraceDiscordExamples) {
  EXPECT_EQ(trace_discord({0.3, 0, 0}).value, 0.0);
  QuantifierValue q = trace_discord(kRef);
  EXPECT_EQ(q.value, 0.59);
  EXPECT_EQ(q.branch, Branch::kI2);
  EXPECT_EQ(trace_discord({1, 1, -1}).value, 1.0);
  EXPECT_EQ(trace_discord({0.1, -0.4, 0.3}).branch, Branch::kI3);
}

TEST(Quantifiers, ConcurrenceExamples) {
  EXPECT_EQ(concurrence_x(XState{}).value, 0.0);
  EXPECT_EQ(concurrence_x(XState{}).branch, Branch::kNone);
  const QuantifierValue bell = concurrence_x(bell_xstate());
  EXPECT_EQ(bell.value, 1.0);
  EXPECT_EQ(bell.branch, Branch::kC2);
  const QuantifierValue ref = concurrence_x(bd_to_xstate(kRef));
  EXPECT_NEAR(ref.value, 0.31, 1e-15);
  EXPECT_EQ(ref.branch, Branch::kC2);
  const QuantifierValue te = trace_entanglement(bd_to_xstate(kRef));
  EXPECT_EQ(te.value, ref.value);
  EXPECT_EQ(te.branch, ref.branch);
  EXPECT_EQ(te.measure, Measure::kTraceEntanglement);
}

TEST(Quantifiers, ConcurrenceUsesModuli) {
  XState x = bd_to_xstate(kRef);
  const double base = concurrence_x(x).value;
  x.f = std::polar(std::abs(x.f), 1.3);
  x.e = std::polar(std::abs(x.e), -2.1);
  EXPECT_NEAR(concurrence_x(x).value, base, 1e-15);
}

TEST(Quantifiers, WoottersExamples) {
  EXPECT_NEAR(wootters_concurrence(DensityMatrix::maximally_mixed()), 0.0,
              1e-12);
  EXPECT_NEAR(wootters_concurrence(bd_to_density({1, 1, -1})), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(bd_to_density(kRef)), 0.31, 1e-10);
}

TEST(Quantifiers, WoottersMatchesClosedFormOnGrid) {
  for (const CorrelationVector& r : physical_grid(11)) {
    EXPECT_NEAR(wootters_concurrence(bd_to_density(r)),
                concurrence_x(bd_to_xstate(r)).value, 1e-10);
  }
  Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const XState x = random_xstate(rng);
    EXPECT_NEAR(wootters_concurrence(to_density(x)), concurrence_x(x).value,
                1e-10);
  }
}

TEST(Quantifiers, ZeroSetsAgree) {
  for (const CorrelationVector& r : physical_grid(13)) {
    const RegionLabel region = classify_region(r);
    const bool hs_positive = hs_entanglement(r).value > 0.0;
    const bool tr_positive = trace_entanglement(bd_to_xstate(r)).value > 0.0;
    EXPECT_EQ(hs_positive, region == RegionLabel::kEntangled);
    EXPECT_EQ(tr_positive, region == RegionLabel::kEntangled);
    const bool classical = region == RegionLabel::kClassical;
    EXPECT_EQ(hs_discord(r).value == 0.0, classical);
    EXPECT_EQ(trace_discord(r).value == 0.0, classical);
  }
}

TEST(Quantifiers, SignAndPermutationSymmetry) {
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const CorrelationVector r = random_bd_state(rng);
    std::array<double, 3> v = r.values();
    std::array<int, 3> perm = {0, 1, 2};
    do {
      // Flipping two signs keeps the state physical.
      for (int flip = 0; flip < 4; ++flip) {
        CorrelationVector q(v[perm[0]], v[perm[1]], v[perm[2]]);
        if (flip > 0) {
          std::array<double, 3> w = q.values();
          w[(flip) % 3] *= -1;
          w[(flip + 1) % 3] *= -1;
          q = CorrelationVector(w);
        }
        EXPECT_NEAR(hs_discord(q).value, hs_discord(r).value, 1e-15);
        EXPECT_NEAR(hs_entanglement(q).value, hs_entanglement(r).value, 1e-15);
        EXPECT_NEAR(trace_discord(q).value, trace_discord(r).value, 1e-15);
        EXPECT_NEAR(trace_entanglement(bd_to_xstate(q)).value,
                    trace_entanglement(bd_to_xstate(r)).value, 1e-15);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Quantifiers, ConcurrenceBranchFollowsSignOfR3UnderPhaseDamping) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const CorrelationVector r0 = random_strict_entangled_bd(rng);
    const Branch expected = r0.r3() > 0 ? Branch::kC1 : Branch::kC2;
    for (int j = 0; j <= 100; ++j) {
      const double p = j / 100.0;
      const QuantifierValue c = concurrence_x(
          bd_to_xstate(evolved_vector(ChannelKind::kPhaseDamping, r0, p)));
      if (c.value == 0.0) break;
      EXPECT_EQ(c.branch, expected);
    }
  }
}

TEST(Quantifiers, BranchNames) {
  for (Branch b : {Branch::kNone, Branch::kD1, Branch::kD2, Branch::kD3,
                   Branch::kI1, Branch::kI2, Branch::kI3, Branch::kC1,
                   Branch::kC2}) {
    EXPECT_EQ(parse_branch(branch_name(b)), b);
  }
  EXPECT_FALSE(parse_branch("D4").has_value());
  EXPECT_EQ(branch_axis(Branch::kI3), Axis::kZ);
  EXPECT_FALSE(branch_axis(Branch::kC1).has_value());
}
