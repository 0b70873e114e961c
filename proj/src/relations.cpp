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

#include "qcorr/relations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

// Branch activity is checked with this slack around each switch point.
constexpr double kSwitchSlack = 1e-9;
constexpr double kFactorSlack = 1e-12;

struct Pieces {
  std::vector<Axis> axes;     // active axis on each interval
  std::vector<double> times;  // switch points; axes.size() == times.size() + 1
};

double abs_at(const CorrelationVector& r, Axis axis) { return std::abs(r[axis]); }

bool is_shrunk(ChannelKind channel, Axis axis) {
  const auto kept = preserved_axis(channel);
  return !kept.has_value() || *kept != axis;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Parameter at which the shrinking component on `axis` drops to |r_kept|.
std::optional<double> crossing(const RelationCase& rc, Axis axis) {
  const Axis kept = *preserved_axis(rc.channel);
  const double ratio = abs_at(rc.initial, kept) / abs_at(rc.initial, axis);
  if (!(ratio > 0.0)) return std::nullopt;
  const double p = p_for_factor(rc.channel, ratio);
  if (!(p > 0.0 && p < monotone_p_limit(rc.channel))) return std::nullopt;
  return p;
}

void push_crossing(const RelationCase& rc, Pieces& pieces, Axis crossing_axis,
                   Axis next_axis) {
  if (auto t = crossing(rc, crossing_axis)) {
    pieces.times.push_back(*t);
    pieces.axes.push_back(next_axis);
  }
}

// HS: the closest axis is the one carrying the largest |r_i|; under a channel
// with a preserved axis it hands over to that axis once the largest shrinking
// component falls below it.
Pieces hs_pieces(const RelationCase& rc) {
  const Axis largest = rc.ordering[2];
  Pieces pieces{{largest}, {}};
  const auto kept = preserved_axis(rc.channel);
  if (kept && *kept != largest) push_crossing(rc, pieces, largest, *kept);
  return pieces;
}

// Trace: the intermediate |r_i| changes each time a shrinking component
// crosses the preserved one.
Pieces trace_pieces(const RelationCase& rc) {
  const auto kept = preserved_axis(rc.channel);
  if (!kept) return {{rc.ordering[1]}, {}};
  const auto pos = std::find(rc.ordering.begin(), rc.ordering.end(), *kept) -
                   rc.ordering.begin();
  if (pos == 2) return {{rc.ordering[1]}, {}};
  if (pos == 1) {
    Pieces pieces{{*kept}, {}};
    push_crossing(rc, pieces, rc.ordering[2], rc.ordering[2]);
    return pieces;
  }
  Pieces pieces{{rc.ordering[1]}, {}};
  push_crossing(rc, pieces, rc.ordering[1], *kept);
  if (pieces.times.size() == 1) {
    push_crossing(rc, pieces, rc.ordering[2], rc.ordering[2]);
  }
  return pieces;
}

Axis piece_at(const Pieces& pieces, double p) {
  std::size_t idx = 0;
  while (idx < pieces.times.size() && pieces.times[idx] <= p) ++idx;
  return pieces.axes[idx];
}

bool piece_active(const Pieces& pieces, Axis axis, double p) {
  if (piece_at(pieces, p) == axis) return true;
  for (std::size_t k = 0; k < pieces.times.size(); ++k) {
    if (std::abs(p - pieces.times[k]) <= kSwitchSlack &&
        (pieces.axes[k] == axis || pieces.axes[k + 1] == axis)) {
      return true;
    }
  }
  return false;
}

void require_entangled(const RelationCase& rc) {
  if (!(rc.initial.abs_sum() > 1.0)) {
    throw Error(ErrorKind::kNotEntangled,
                "initial state lies inside the separable octahedron");
  }
}

void require_norm(const RelationCase& rc, Norm norm) {
  if (rc.norm != norm) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("relation case is for the ") + norm_name(rc.norm) +
                    " norm");
  }
}

// Maps a factor recovered from E or C back to p, enforcing p >= 0.
double p_from_recovered_factor(const RelationCase& rc, double factor) {
  if (!std::isfinite(factor) || factor > 1.0 + kFactorSlack) {
    throw Error(ErrorKind::kWindowViolation,
                "value exceeds its p = 0 level (factor " + fmt(factor) + ")");
  }
  return p_for_factor(rc.channel, std::clamp(factor, 0.0, 1.0));
}

void require_active(const RelationCase& rc, const Pieces& pieces, Axis axis,
                    double p, Branch branch) {
  // Axes with equal magnitude and equal scaling are interchangeable.
  const Axis active = piece_at(pieces, p);
  const bool twin =
      is_shrunk(rc.channel, axis) == is_shrunk(rc.channel, active) &&
      std::abs(abs_at(rc.initial, axis) - abs_at(rc.initial, active)) <=
          kOrderingTolerance;
  if (!twin && !piece_active(pieces, axis, p)) {
    throw Error(ErrorKind::kWindowViolation,
                "branch " + std::string(branch_name(branch)) +
                    " is not active at p = " + fmt(p));
  }
}

double frame_pair_sum(const CorrelationVector& frame, Branch pairing) {
  return pairing == Branch::kC2 ? std::abs(frame.r1() + frame.r2())
                                : std::abs(frame.r1() - frame.r2());
}

}  // namespace

std::string ordering_label(const std::array<Axis, 3>& ordering) {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) out += "<";
    out += "|r" + std::to_string(index_of(ordering[k]) + 1) + "|";
  }
  return out;
}

void validate(const RelationCase& rc) {
  require_physical(rc.initial);
  std::array<bool, 3> seen{};
  for (Axis axis : rc.ordering) seen[index_of(axis)] = true;
  if (!(seen[0] && seen[1] && seen[2])) {
    throw Error(ErrorKind::kInvalidArgument, "ordering is not a permutation");
  }
  for (int k = 0; k < 2; ++k) {
    const double lo = abs_at(rc.initial, rc.ordering[k]);
    const double hi = abs_at(rc.initial, rc.ordering[k + 1]);
    // Depolarizing shrinks every axis alike, so ties never change a piece.
    if (std::abs(hi - lo) <= kOrderingTolerance &&
        preserved_axis(rc.channel)) {
      throw Error(ErrorKind::kDegenerateOrdering,
                  "|r" + std::to_string(index_of(rc.ordering[k]) + 1) +
                      "| = |r" + std::to_string(index_of(rc.ordering[k + 1]) + 1) +
                      "|");
    }
    if (hi < lo) {
      throw Error(ErrorKind::kInvalidArgument,
                  "ordering " + ordering_label(rc.ordering) +
                      " inconsistent with the initial state");
    }
  }
}

RelationCase make_relation_case(ChannelKind channel, Norm norm,
                                const CorrelationVector& initial) {
  require_physical(initial);
  std::array<Axis, 3> ordering = kAxes;
  std::stable_sort(ordering.begin(), ordering.end(), [&](Axis lhs, Axis rhs) {
    return abs_at(initial, lhs) < abs_at(initial, rhs);
  });
  RelationCase rc{channel, norm, ordering, initial};
  validate(rc);
  return rc;
}

double shrink_factor(ChannelKind channel, double p) {
  if (channel == ChannelKind::kPhaseFlip) return (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
  return (1.0 - p) * (1.0 - p);
}

double p_for_factor(ChannelKind channel, double factor) {
  const double root = std::sqrt(factor);
  if (channel == ChannelKind::kPhaseFlip) return (1.0 - root) / 2.0;
  return 1.0 - root;
}

CorrelationVector to_channel_frame(ChannelKind channel,
                                   const CorrelationVector& r) {
  const auto kept = preserved_axis(channel);
  if (!kept || *kept == Axis::kZ) return r;
  std::array<double, 3> v = r.values();
  std::swap(v[index_of(*kept)], v[index_of(Axis::kZ)]);
  return CorrelationVector(v);
}

Branch frame_concurrence_branch(ChannelKind channel,
                                const CorrelationVector& r) {
  return concurrence_x(bd_to_xstate(to_channel_frame(channel, r))).branch;
}

std::optional<double> sudden_death_time(ChannelKind channel, Norm norm,
                                        const CorrelationVector& initial) {
  require_physical(initial);
  if (!(initial.abs_sum() > 1.0)) {
    throw Error(ErrorKind::kNotEntangled,
                "initial state lies inside the separable octahedron");
  }
  const auto kept = preserved_axis(channel);
  double factor = 0.0;
  if (norm == Norm::kHilbertSchmidt) {
    if (kept) {
      double shrinking = 0.0;
      for (Axis axis : kAxes) {
        if (axis != *kept) shrinking += abs_at(initial, axis);
      }
      factor = (1.0 - abs_at(initial, *kept)) / shrinking;
    } else {
      factor = 1.0 / initial.abs_sum();
    }
  } else {
    const CorrelationVector frame = to_channel_frame(channel, initial);
    const Branch pairing = frame_concurrence_branch(channel, initial);
    const double sign = pairing == Branch::kC2 ? 1.0 : -1.0;
    if (kept) {
      factor = (1.0 + sign * frame.r3()) / frame_pair_sum(frame, pairing);
    } else {
      factor = 1.0 / (frame_pair_sum(frame, pairing) - sign * frame.r3());
    }
  }
  if (!(factor > 0.0)) return std::nullopt;
  const double p = p_for_factor(channel, factor);
  if (!(p < monotone_p_limit(channel))) return std::nullopt;
  return p;
}

CriticalTimes critical_times(const RelationCase& rc) {
  validate(rc);
  CriticalTimes out;
  const Pieces pieces =
      rc.norm == Norm::kHilbertSchmidt ? hs_pieces(rc) : trace_pieces(rc);
  out.sudden_changes = pieces.times;
  if (rc.initial.abs_sum() > 1.0) {
    out.sudden_death = sudden_death_time(rc.channel, rc.norm, rc.initial);
  }
  return out;
}

Branch active_hs_branch(const RelationCase& rc, double p) {
  validate(rc);
  return hs_branch_for(piece_at(hs_pieces(rc), p));
}

Branch active_trace_branch(const RelationCase& rc, double p) {
  validate(rc);
  return trace_branch_for(piece_at(trace_pieces(rc), p));
}

double hs_discord_from_entanglement(double entanglement, const RelationCase& rc,
                                    std::optional<Branch> branch) {
  validate(rc);
  require_norm(rc, Norm::kHilbertSchmidt);
  if (!branch || !branch_axis(*branch) || *branch > Branch::kD3) {
    throw Error(ErrorKind::kBranchUnknown,
                "an active HS discord branch (D1, D2, D3) is required");
  }
  if (!(entanglement >= 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "entanglement " + fmt(entanglement));
  }
  require_entangled(rc);

  const CorrelationVector& r = rc.initial;
  const double root = std::sqrt(3.0 * entanglement);
  const auto kept = preserved_axis(rc.channel);
  double factor = 0.0;
  if (kept) {
    double shrinking = 0.0;
    for (Axis axis : kAxes) {
      if (axis != *kept) shrinking += abs_at(r, axis);
    }
    factor = (root - abs_at(r, *kept) + 1.0) / shrinking;
  } else {
    factor = (root + 1.0) / r.abs_sum();
  }
  const double p = p_from_recovered_factor(rc, factor);
  const Axis axis = *branch_axis(*branch);
  require_active(rc, hs_pieces(rc), axis, p, *branch);

  factor = std::min(factor, 1.0);
  double value = 0.0;
  for (Axis j : kAxes) {
    if (j == axis) continue;
    const double scaled = is_shrunk(rc.channel, j) ? r[j] * factor : r[j];
    value += scaled * scaled;
  }
  return value;
}

double trace_discord_from_concurrence(double concurrence,
                                      const RelationCase& rc,
                                      std::optional<Branch> concurrence_branch,
                                      std::optional<Branch> discord_branch) {
  validate(rc);
  require_norm(rc, Norm::kTrace);
  if (!concurrence_branch || (*concurrence_branch != Branch::kC1 &&
                              *concurrence_branch != Branch::kC2)) {
    throw Error(ErrorKind::kBranchUnknown,
                "a concurrence branch (C1 or C2) is required");
  }
  if (!discord_branch || *discord_branch < Branch::kI1 ||
      *discord_branch > Branch::kI3) {
    throw Error(ErrorKind::kBranchUnknown,
                "an active trace discord branch (I1, I2, I3) is required");
  }
  if (!(concurrence >= 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "concurrence " + fmt(concurrence));
  }
  require_entangled(rc);

  const CorrelationVector frame = to_channel_frame(rc.channel, rc.initial);
  const Branch pairing = *concurrence_branch;
  const double sign = pairing == Branch::kC2 ? 1.0 : -1.0;
  const double numerator = 2.0 * concurrence + 1.0;
  double factor = 0.0;
  if (preserved_axis(rc.channel)) {
    factor = (numerator + sign * frame.r3()) / frame_pair_sum(frame, pairing);
  } else {
    factor = numerator / (frame_pair_sum(frame, pairing) - sign * frame.r3());
  }
  const double p = p_from_recovered_factor(rc, factor);
  const Axis axis = *branch_axis(*discord_branch);
  require_active(rc, trace_pieces(rc), axis, p, *discord_branch);

  const double magnitude = abs_at(rc.initial, axis);
  return is_shrunk(rc.channel, axis) ? magnitude * std::min(factor, 1.0)
                                     : magnitude;
}

bool relation_is_extrapolated(const RelationCase& rc, Branch discord_branch) {
  validate(rc);
  const auto kept = preserved_axis(rc.channel);
  if (rc.norm != Norm::kTrace || !kept) return false;
  const auto axis = branch_axis(discord_branch);
  if (!axis) return false;
  const auto pos = std::find(rc.ordering.begin(), rc.ordering.end(), *kept) -
                   rc.ordering.begin();
  if (pos == 1) return *axis == rc.ordering[2];
  if (pos == 0) return *axis == rc.ordering[1];
  return false;
}

double piecewise_discord_pd_trace(double p, const CorrelationVector& r0) {
  const RelationCase rc =
      make_relation_case(ChannelKind::kPhaseDamping, Norm::kTrace, r0);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange, "p = " + fmt(p) + " outside [0, 1]");
  }
  const Axis axis = piece_at(trace_pieces(rc), p);
  const double magnitude = abs_at(r0, axis);
  return axis == Axis::kZ ? magnitude : magnitude * (1.0 - p) * (1.0 - p);
}

}  // namespace qcorr
