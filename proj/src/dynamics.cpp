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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kBisectionWidth = 1e-13;
// Label switches closer to p = 0 than this come from ties in the initial
// state, not from a kink along the trajectory. The same holds at the end of
// the range, where the shrinking components collapse onto each other.
constexpr double kInteriorMargin = 1e-9;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Branch discord_label(Norm norm, const TrajectorySample& s) {
  return norm == Norm::kHilbertSchmidt ? s.hs_branch : s.trace_branch;
}

double entanglement_of(Norm norm, const TrajectorySample& s) {
  return norm == Norm::kHilbertSchmidt ? s.hs_entanglement : s.concurrence;
}

// Finds every label change in (lo, hi), recursing when the midpoint shows a
// third label.
void locate_switches(const std::function<Branch(double)>& label, double lo,
                     Branch label_lo, double hi, Branch label_hi,
                     std::vector<double>& out, int depth = 0) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const Branch label_mid = label(mid);
    if (label_mid == label_lo) {
      lo = mid;
    } else if (label_mid == label_hi) {
      hi = mid;
    } else {
      if (depth > 8) break;
      locate_switches(label, lo, label_lo, mid, label_mid, out, depth + 1);
      locate_switches(label, mid, label_mid, hi, label_hi, out, depth + 1);
      return;
    }
  }
  out.push_back(0.5 * (lo + hi));
}

// Last p in [lo, hi] with positive entanglement, given positive at lo.
double locate_death(const std::function<bool(double)>& alive, double lo,
                    double hi) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    (alive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<double> nearest(const std::vector<double>& values, double x) {
  std::optional<double> best;
  for (double v : values) {
    if (!best || std::abs(v - x) < std::abs(*best - x)) best = v;
  }
  return best;
}

}  // namespace

std::string_view event_kind_name(EventKind kind) {
  return kind == EventKind::kSuddenChangeDiscord ? "SuddenChangeDiscord"
                                                 : "SuddenDeathEntanglement";
}

CriticalTimes Trajectory::detected(Norm norm) const {
  CriticalTimes out;
  for (const EventRecord& ev : events) {
    if (ev.norm != norm) continue;
    if (ev.kind == EventKind::kSuddenChangeDiscord) {
      out.sudden_changes.push_back(ev.p_detected);
    } else if (!out.sudden_death) {
      out.sudden_death = ev.p_detected;
    }
  }
  return out;
}

TrajectorySample sample_at(ChannelKind channel, const CorrelationVector& r0,
                           double p) {
  TrajectorySample s;
  s.p = p;
  s.r = evolved_vector(channel, r0, p);
  const QuantifierValue d_hs = hs_discord(s.r);
  const QuantifierValue d_tr = trace_discord(s.r);
  const QuantifierValue c = trace_entanglement(bd_to_xstate(s.r));
  s.hs_entanglement = hs_entanglement(s.r).value;
  s.hs_discord = d_hs.value;
  s.hs_branch = d_hs.branch;
  s.trace_discord = d_tr.value;
  s.trace_branch = d_tr.branch;
  s.concurrence = c.value;
  s.concurrence_branch = c.branch;
  return s;
}

Trajectory run_trajectory(ChannelKind channel, const CorrelationVector& r0,
                          double p_max, int n_samples) {
  require_physical(r0);
  if (n_samples < 2) {
    throw Error(ErrorKind::kOutOfRange,
                "n_samples = " + std::to_string(n_samples) + " < 2");
  }
  const double limit = monotone_p_limit(channel);
  if (!(p_max > 0.0 && p_max <= limit)) {
    throw Error(ErrorKind::kOutOfRange,
                "p_max = " + fmt(p_max) + " outside (0, " + fmt(limit) + "]");
  }

  Trajectory traj{channel, r0, p_max, {}, {}};
  traj.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double p = p_max * k / (n_samples - 1);
    traj.samples.push_back(sample_at(channel, r0, p));
  }

  std::optional<RelationCase> hs_case;
  std::optional<RelationCase> tr_case;
  try {
    hs_case = make_relation_case(channel, Norm::kHilbertSchmidt, r0);
    tr_case = make_relation_case(channel, Norm::kTrace, r0);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateOrdering) throw;
  }

  for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
    std::vector<double> analytic_changes;
    const auto& rc = norm == Norm::kHilbertSchmidt ? hs_case : tr_case;
    if (rc) analytic_changes = critical_times(*rc).sudden_changes;

    auto label = [&](double p) {
      return discord_label(norm, sample_at(channel, r0, p));
    };
    std::vector<double> switches;
    for (std::size_t k = 0; k + 1 < traj.samples.size(); ++k) {
      const Branch lo = discord_label(norm, traj.samples[k]);
      const Branch hi = discord_label(norm, traj.samples[k + 1]);
      if (lo != hi) {
        locate_switches(label, traj.samples[k].p, lo, traj.samples[k + 1].p, hi,
                        switches);
      }
    }
    for (double p : switches) {
      if (p < kInteriorMargin) continue;
      if (p > monotone_p_limit(channel) - kInteriorMargin) continue;
      std::optional<double> analytic;
      if (rc) analytic = nearest(analytic_changes, p);
      traj.events.push_back(
          {EventKind::kSuddenChangeDiscord, norm, p, analytic});
    }

    // Sudden death: first grid cell where the entanglement drops to zero.
    const auto& samples = traj.samples;
    if (entanglement_of(norm, samples.front()) <= kDeathTolerance) continue;
    auto alive = [&](double p) {
      return entanglement_of(norm, sample_at(channel, r0, p)) > 0.0;
    };
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
      if (entanglement_of(norm, samples[k + 1]) > kDeathTolerance) continue;
      std::size_t hi = k + 1;
      while (hi + 1 < samples.size() && entanglement_of(norm, samples[hi]) > 0.0) {
        ++hi;
      }
      const double p = entanglement_of(norm, samples[hi]) > 0.0
                           ? samples[hi].p
                           : locate_death(alive, samples[k].p, samples[hi].p);
      // Reaching the separable set only at the end of the parameter range
      // is not a sudden death.
      if (p >= monotone_p_limit(channel) - kInteriorMargin) break;
      std::optional<double> analytic;
      try {
        analytic = sudden_death_time(channel, norm, r0);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kNotEntangled) throw;
      }
      traj.events.push_back(
          {EventKind::kSuddenDeathEntanglement, norm, p, analytic});
      break;
    }
  }

  std::stable_sort(traj.events.begin(), traj.events.end(),
                   [](const EventRecord& lhs, const EventRecord& rhs) {
                     if (lhs.norm != rhs.norm) return lhs.norm < rhs.norm;
                     return lhs.p_detected < rhs.p_detected;
                   });
  return traj;
}

Curve d_vs_e_curve(const Trajectory& traj, Norm norm) {
  if (traj.samples.empty() ||
      !(entanglement_of(norm, traj.samples.front()) > 0.0)) {
    throw Error(ErrorKind::kEmptyWindow,
                "initial state is separable; no entangled window");
  }
  // The curve closes on the analytic death time when one is known; the
  // bisected time leaves a residue of order 1e-14 in E.
  Curve curve{norm, {}, {}, traj.detected(norm).sudden_death};
  for (const EventRecord& ev : traj.events) {
    if (ev.norm == norm && ev.kind == EventKind::kSuddenDeathEntanglement &&
        ev.p_analytic && std::abs(*ev.p_analytic - ev.p_detected) < 1e-6) {
      curve.sudden_death = ev.p_analytic;
    }
  }
  auto point = [&](const TrajectorySample& s) {
    return CurvePoint{s.p, entanglement_of(norm, s),
                      norm == Norm::kHilbertSchmidt ? s.hs_discord
                                                    : s.trace_discord,
                      discord_label(norm, s)};
  };
  const double end = curve.sudden_death.value_or(traj.p_max);
  for (const TrajectorySample& s : traj.samples) {
    if (s.p > end) break;
    curve.points.push_back(point(s));
  }
  if (curve.sudden_death && curve.points.back().p < end) {
    curve.points.push_back(point(sample_at(traj.channel, traj.initial, end)));
  }
  for (double p : traj.detected(norm).sudden_changes) {
    if (p < end) curve.kinks.push_back(p);
  }
  return curve;
}

ContractivityReport contractivity_scan(
    ChannelKind channel,
    std::span<const std::pair<CorrelationVector, CorrelationVector>> pairs,
    std::span<const double> p_grid, double tolerance) {
  ContractivityReport report;
  report.pairs = pairs.size();
  for (const auto& [lhs, rhs] : pairs) {
    double prev_hs = 0.0;
    double prev_tr = 0.0;
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
      const Matrix4 delta = bd_difference(evolved_vector(channel, lhs, p_grid[k]),
                                          evolved_vector(channel, rhs, p_grid[k]));
      const double d_hs = 4.0 * hs_norm_squared(delta);
      const double d_tr = trace_norm(delta);
      if (k > 0) {
        const double inc_hs = d_hs - prev_hs;
        const double inc_tr = d_tr - prev_tr;
        report.max_increment_hs = std::max(report.max_increment_hs, inc_hs);
        report.max_increment_trace = std::max(report.max_increment_trace, inc_tr);
        report.violations += static_cast<std::size_t>(inc_hs > tolerance) +
                             static_cast<std::size_t>(inc_tr > tolerance);
        ++report.steps;
      }
      prev_hs = d_hs;
      prev_tr = d_tr;
    }
  }
  return report;
}

}  // namespace qcorr
