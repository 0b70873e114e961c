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

#include "qcorr/channels.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "p = %.17g outside [0, 1]", p);
    throw Error(ErrorKind::kOutOfRange, buf);
  }
}

Matrix2 projector(int level) {
  Matrix2 m = Matrix2::Zero();
  m(level, level) = 1.0;
  return m;
}

// Reflection (s_target + s3)/sqrt(2); conjugating by it swaps s3 and s_target.
Matrix2 axis_swap_from_z(Axis target) {
  return (pauli(target) + pauli(Axis::kZ)) / std::sqrt(2.0);
}

std::vector<Matrix2> phase_damping_ops(double p) {
  return {std::sqrt(1.0 - p) * Matrix2::Identity(), std::sqrt(p) * projector(0),
          std::sqrt(p) * projector(1)};
}

}  // namespace

std::string_view channel_short_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseDamping:
      return "pd";
    case ChannelKind::kBitFlip:
      return "bf";
    case ChannelKind::kBitPhaseFlip:
      return "bpf";
    case ChannelKind::kPhaseFlip:
      return "pf";
    case ChannelKind::kDepolarizing:
      return "depol";
  }
  return "";
}

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseDamping:
      return "PhaseDamping";
    case ChannelKind::kBitFlip:
      return "BitFlip";
    case ChannelKind::kBitPhaseFlip:
      return "BitPhaseFlip";
    case ChannelKind::kPhaseFlip:
      return "PhaseFlip";
    case ChannelKind::kDepolarizing:
      return "Depolarizing";
  }
  return "";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  for (ChannelKind kind : kAllChannels) {
    if (name == channel_short_name(kind) || name == channel_name(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

std::optional<Axis> preserved_axis(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseDamping:
    case ChannelKind::kPhaseFlip:
      return Axis::kZ;
    case ChannelKind::kBitFlip:
      return Axis::kX;
    case ChannelKind::kBitPhaseFlip:
      return Axis::kY;
    case ChannelKind::kDepolarizing:
      return std::nullopt;
  }
  return std::nullopt;
}

double monotone_p_limit(ChannelKind kind) {
  return kind == ChannelKind::kPhaseFlip ? 0.5 : 1.0;
}

double KrausChannel::completeness_defect() const {
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& k : operators_) sum += k.adjoint() * k;
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel kraus_for(ChannelKind kind, double p) {
  require_probability(p);
  std::vector<Matrix2> ops;
  switch (kind) {
    case ChannelKind::kPhaseDamping:
      ops = phase_damping_ops(p);
      break;
    case ChannelKind::kBitFlip:
    case ChannelKind::kBitPhaseFlip: {
      const Matrix2 u = axis_swap_from_z(*preserved_axis(kind));
      for (const Matrix2& k : phase_damping_ops(p)) ops.push_back(u * k * u);
      break;
    }
    case ChannelKind::kPhaseFlip:
      ops = {std::sqrt(1.0 - p) * Matrix2::Identity(),
             std::sqrt(p) * pauli(Axis::kZ)};
      break;
    case ChannelKind::kDepolarizing: {
      const double w = std::sqrt(p / 4.0);
      ops = {std::sqrt(1.0 - 3.0 * p / 4.0) * Matrix2::Identity(),
             w * pauli(Axis::kX), w * pauli(Axis::kY), w * pauli(Axis::kZ)};
      break;
    }
  }
  return KrausChannel(kind, p, std::move(ops));
}

DensityMatrix apply_local_pair(const DensityMatrix& rho,
                               const KrausChannel& ch) {
  Matrix4 out = Matrix4::Zero();
  for (const Matrix2& ka : ch.operators()) {
    for (const Matrix2& kb : ch.operators()) {
      const Matrix4 k = kron(ka, kb);
      out += k * rho.matrix() * k.adjoint();
    }
  }
  return DensityMatrix::from_matrix(out);
}

std::array<double, 3> coherence_factors(ChannelKind kind, double p) {
  require_probability(p);
  const double damped = (1.0 - p) * (1.0 - p);
  switch (kind) {
    case ChannelKind::kPhaseDamping:
      return {damped, damped, 1.0};
    case ChannelKind::kBitFlip:
      return {1.0, damped, damped};
    case ChannelKind::kBitPhaseFlip:
      return {damped, 1.0, damped};
    case ChannelKind::kPhaseFlip: {
      const double flipped = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
      return {flipped, flipped, 1.0};
    }
    case ChannelKind::kDepolarizing:
      return {damped, damped, damped};
  }
  return {1.0, 1.0, 1.0};
}

CorrelationVector evolved_vector(ChannelKind kind, const CorrelationVector& r,
                                 double p) {
  require_physical(r);
  const auto factors = coherence_factors(kind, p);
  return CorrelationVector(r.r1() * factors[0], r.r2() * factors[1],
                           r.r3() * factors[2]);
}

}  // namespace qcorr
