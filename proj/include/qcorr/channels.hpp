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

// Local single-qubit channels applied identically to both qubits.

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

enum class ChannelKind {
  kPhaseDamping,
  kBitFlip,
  kBitPhaseFlip,
  kPhaseFlip,
  kDepolarizing,
};

inline constexpr std::array<ChannelKind, 5> kAllChannels = {
    ChannelKind::kPhaseDamping, ChannelKind::kBitFlip,
    ChannelKind::kBitPhaseFlip, ChannelKind::kPhaseFlip,
    ChannelKind::kDepolarizing};

/// Short names used on the command line: pd, bf, bpf, pf, depol.
std::string_view channel_short_name(ChannelKind kind);
std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Correlation axis left untouched by the channel, if any. Phase Damping and
/// Phase Flip keep r3, Bit Flip keeps r1, Bit-Phase Flip keeps r2;
/// Depolarizing shrinks all three.
std::optional<Axis> preserved_axis(ChannelKind kind);

/// Upper end of the parameter range on which the coherence factors decrease
/// monotonically: 1 everywhere except Phase Flip, whose factor (1-2p)^2
/// turns around at p = 1/2.
double monotone_p_limit(ChannelKind kind);

class KrausChannel {
 public:
  KrausChannel(ChannelKind kind, double p, std::vector<Matrix2> operators)
      : kind_(kind), p_(p), operators_(std::move(operators)) {}

  ChannelKind kind() const { return kind_; }
  double p() const { return p_; }
  const std::vector<Matrix2>& operators() const { return operators_; }

  /// max |sum_m K_m^dag K_m - I| entrywise.
  double completeness_defect() const;

 private:
  ChannelKind kind_;
  double p_;
  std::vector<Matrix2> operators_;
};

/// Throws Error(kOutOfRange) unless 0 <= p <= 1.
KrausChannel kraus_for(ChannelKind kind, double p);

/// rho -> sum_{m,n} (K_m (x) K_n) rho (K_m (x) K_n)^dag.
DensityMatrix apply_local_pair(const DensityMatrix& rho, const KrausChannel& ch);

/// Per-axis factor multiplying r_j after the channel acts on both qubits.
std::array<double, 3> coherence_factors(ChannelKind kind, double p);

/// Closed-form image of a Bell-diagonal state under the channel.
CorrelationVector evolved_vector(ChannelKind kind, const CorrelationVector& r,
                                 double p);

}  // namespace qcorr
