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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   qcorr_acceptance                 run every criterion
//   qcorr_acceptance --criterion N   run criterion N only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/relations.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/states.hpp"

namespace {

using namespace qcorr;

const CorrelationVector kRef{0.65, 0.59, -0.38};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no stated budget
  std::function<Outcome()> run;
};

std::string fmt(const char* format, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// Tracks the largest deviation and the state that produced it.
struct MaxDeviation {
  double value = -1.0;
  std::string where;

  void add(double dev, const std::string& state) {
    if (!(dev <= value)) {
      value = dev;
      where = state;
    }
  }
  std::string str() const { return fmt("%.3e", value) + " at " + where; }
};

std::string show(const CorrelationVector& r) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "(" << r.r1() << "," << r.r2() << "," << r.r3() << ")";
  return ss.str();
}

Outcome hs_oracles() {
  MaxDeviation discord;
  MaxDeviation entanglement;
  for (const CorrelationVector& r : physical_grid(9)) {
    discord.add(std::abs(closest_classical(r, Norm::kHilbertSchmidt).distance -
                         hs_discord(r).value),
                show(r));
    entanglement.add(
        std::abs(closest_separable_hs(r).distance - hs_entanglement(r).value),
        show(r));
  }
  return {discord.value <= 1e-6 && entanglement.value <= 1e-8,
          "discord " + discord.str() + " (tol 1e-6); entanglement " +
              entanglement.str() + " (tol 1e-8)"};
}

Outcome trace_oracle() {
  MaxDeviation dev;
  for (const CorrelationVector& r : physical_grid(9)) {
    dev.add(std::abs(closest_classical(r, Norm::kTrace).distance -
                     trace_discord(r).value),
            show(r));
  }
  return {dev.value <= 1e-4, "discord " + dev.str() + " (tol 1e-4)"};
}

Outcome xstate_concurrence() {
  Rng rng(42);
  double grid_dev = 0.0;
  double analytic_dev = 0.0;
  int infeasible = 0;
  for (int k = 0; k < 1000; ++k) {
    const XState x = random_entangled_xstate(rng);
    const double c = concurrence_x(x).value;
    const OracleResult res = closest_separable_trace_xfamily(x);
    grid_dev = std::max(grid_dev, std::abs(res.distance - c));
    infeasible += !is_feasible(x, std::get<SeparableXCandidate>(res.minimizer));
    const SeparableXCandidate analytic = analytic_separable_candidate(x);
    infeasible += !is_feasible(x, analytic);
    analytic_dev =
        std::max(analytic_dev, std::abs(xfamily_trace_distance(x, analytic) - c));
  }
  return {grid_dev <= 1e-4 && analytic_dev <= 1e-12 && infeasible == 0,
          "grid " + fmt("%.3e", grid_dev) + " (tol 1e-4); analytic minimizer " +
              fmt("%.3e", analytic_dev) + " (tol 1e-12); infeasible " +
              std::to_string(infeasible)};
}

Outcome wootters() {
  Rng rng(42);
  double dev = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const XState x = random_xstate(rng);
    dev = std::max(dev, std::abs(concurrence_x(x).value -
                                 wootters_concurrence(to_density(x))));
  }
  return {dev <= 1e-10, "max deviation " + fmt("%.3e", dev) + " (tol 1e-10)"};
}

Outcome channel_agreement() {
  double dev = 0.0;
  const std::vector<CorrelationVector> grid = physical_grid(5);
  for (ChannelKind kind : kAllChannels) {
    for (int k = 0; k <= 10; ++k) {
      const double p = k / 10.0;
      const KrausChannel ch = kraus_for(kind, p);
      for (const CorrelationVector& r : grid) {
        const CorrelationVector numeric =
            density_to_bd(apply_local_pair(bd_to_density(r), ch));
        const CorrelationVector analytic = evolved_vector(kind, r, p);
        for (std::size_t i = 0; i < 3; ++i) {
          dev = std::max(dev, std::abs(numeric[i] - analytic[i]));
        }
      }
    }
  }
  return {dev <= 1e-12, "max deviation " + fmt("%.3e", dev) + " (tol 1e-12)"};
}

Outcome relation_identity() {
  Rng rng(42);
  std::vector<CorrelationVector> states;
  for (int k = 0; k < 200; ++k) states.push_back(random_strict_entangled_bd(rng));

  MaxDeviation dev;
  std::size_t checks = 0;
  std::string failure;
  for (ChannelKind kind :
       {ChannelKind::kPhaseDamping, ChannelKind::kBitFlip,
        ChannelKind::kBitPhaseFlip, ChannelKind::kDepolarizing}) {
    for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
      for (const CorrelationVector& r0 : states) {
        const RelationCase rc = make_relation_case(kind, norm, r0);
        const double p_sd = sudden_death_time(kind, norm, r0)
                                .value_or(monotone_p_limit(kind));
        const Branch initial_pairing = frame_concurrence_branch(kind, r0);
        std::vector<double> grid;
        for (int j = 0; j * 1e-3 < p_sd; ++j) grid.push_back(j * 1e-3);
        grid.push_back(p_sd);
        for (double p : grid) {
          const CorrelationVector r = evolved_vector(kind, r0, p);
          double direct = 0.0;
          double related = 0.0;
          try {
            if (norm == Norm::kHilbertSchmidt) {
              const QuantifierValue d = hs_discord(r);
              direct = d.value;
              related = hs_discord_from_entanglement(hs_entanglement(r).value,
                                                     rc, d.branch);
            } else {
              const QuantifierValue d = trace_discord(r);
              Branch pairing = frame_concurrence_branch(kind, r);
              if (pairing == Branch::kNone) pairing = initial_pairing;
              direct = d.value;
              related = trace_discord_from_concurrence(
                  trace_entanglement(bd_to_xstate(r)).value, rc, pairing,
                  d.branch);
            }
          } catch (const Error& e) {
            if (failure.empty()) {
              failure = std::string(channel_name(kind)) + "/" +
                        norm_name(norm) + " " + show(r0) + " p=" +
                        fmt("%.17g", p) + ": " + e.what();
            }
            continue;
          }
          ++checks;
          dev.add(std::abs(direct - related),
                  std::string(channel_name(kind)) + "/" + norm_name(norm) +
                      " " + show(r0) + " p=" + fmt("%.6f", p));
        }
      }
    }
  }
  Outcome out{dev.value <= 1e-9 && failure.empty(),
              std::to_string(checks) + " points, max deviation " + dev.str() +
                  " (tol 1e-9)"};
  if (!failure.empty()) out.detail += "; error " + failure;
  return out;
}

Outcome pd_kink_structure() {
  const ChannelKind pd = ChannelKind::kPhaseDamping;
  const Trajectory traj = run_trajectory(pd, kRef);
  const CriticalTimes hs_formula =
      critical_times(make_relation_case(pd, Norm::kHilbertSchmidt, kRef));
  const CriticalTimes tr_formula =
      critical_times(make_relation_case(pd, Norm::kTrace, kRef));
  const CriticalTimes hs_found = traj.detected(Norm::kHilbertSchmidt);
  const CriticalTimes tr_found = traj.detected(Norm::kTrace);
  const Curve tr_curve = d_vs_e_curve(traj, Norm::kTrace);
  const Curve hs_curve = d_vs_e_curve(traj, Norm::kHilbertSchmidt);

  bool pass = tr_found.sudden_changes.size() == 2 &&
              hs_found.sudden_changes.size() == 1 &&
              tr_formula.sudden_changes.size() == 2 &&
              hs_formula.sudden_changes.size() == 1 &&
              tr_curve.kinks.size() == 2 && hs_curve.kinks.size() == 1;
  double change_dev = 0.0;
  if (pass) {
    for (std::size_t i = 0; i < 2; ++i) {
      change_dev = std::max(change_dev, std::abs(tr_found.sudden_changes[i] -
                                                 tr_formula.sudden_changes[i]));
    }
    change_dev = std::max(change_dev, std::abs(hs_found.sudden_changes[0] -
                                               hs_formula.sudden_changes[0]));
    pass = change_dev <= 1e-6 &&
           std::abs(tr_formula.sudden_changes[0] - 0.19746) < 5e-6 &&
           std::abs(tr_formula.sudden_changes[1] - 0.23540) < 5e-6 &&
           std::abs(hs_formula.sudden_changes[0] - 0.23540) < 5e-6;
  }
  double death_gap = 1.0;
  double death_dev = 1.0;
  if (hs_formula.sudden_death && tr_formula.sudden_death &&
      hs_found.sudden_death && tr_found.sudden_death) {
    death_gap = std::abs(*hs_formula.sudden_death - *tr_formula.sudden_death);
    death_dev = std::max(std::abs(*hs_found.sudden_death - *hs_formula.sudden_death),
                         std::abs(*tr_found.sudden_death - *tr_formula.sudden_death));
    pass = pass && death_gap <= 1e-12 && death_dev <= 1e-8 &&
           std::abs(*tr_formula.sudden_death - 0.29289) < 5e-6;
  } else {
    pass = false;
  }
  std::string detail = "trace changes " +
                       std::to_string(tr_found.sudden_changes.size()) +
                       ", HS changes " +
                       std::to_string(hs_found.sudden_changes.size());
  detail += " (trace at";
  for (double p : tr_found.sudden_changes) detail += fmt(" %.8f", p);
  detail += ")";
  detail += "; formula vs detection " + fmt("%.3e", change_dev) +
            "; death HS/trace gap " + fmt("%.3e", death_gap) +
            ", detection " + fmt("%.3e", death_dev);
  if (tr_found.sudden_death) detail += fmt(" at %.8f", *tr_found.sudden_death);
  return {pass, detail};
}

Outcome depol_smooth_structure() {
  const Trajectory traj = run_trajectory(ChannelKind::kDepolarizing, kRef);
  const double expected = 1.0 - std::sqrt(1.0 / 1.62);
  bool pass = true;
  std::string detail;
  for (Norm norm : {Norm::kHilbertSchmidt, Norm::kTrace}) {
    const CriticalTimes found = traj.detected(norm);
    const double dev = found.sudden_death
                           ? std::abs(*found.sudden_death - expected)
                           : 1.0;
    pass = pass && found.sudden_changes.empty() && dev <= 1e-8 &&
           d_vs_e_curve(traj, norm).kinks.empty();
    detail += std::string(detail.empty() ? "" : "; ") + norm_name(norm) +
              " changes " + std::to_string(found.sudden_changes.size()) +
              ", death dev " + fmt("%.3e", dev);
  }
  return {pass, detail};
}

Outcome contractivity() {
  Rng rng(42);
  std::vector<std::pair<CorrelationVector, CorrelationVector>> pairs;
  for (int k = 0; k < 100; ++k) {
    const CorrelationVector a = random_bd_state(rng);
    pairs.emplace_back(a, random_bd_state(rng));
  }
  std::size_t violations = 0;
  double worst = -1.0;
  for (ChannelKind kind : kAllChannels) {
    std::vector<double> grid;
    for (int k = 0; k <= 200; ++k) grid.push_back(monotone_p_limit(kind) * k / 200);
    const ContractivityReport rep = contractivity_scan(kind, pairs, grid, 1e-12);
    violations += rep.violations;
    worst = std::max({worst, rep.max_increment_hs, rep.max_increment_trace});
  }
  return {violations == 0, std::to_string(violations) +
                               " violations, largest increment " +
                               fmt("%.3e", worst) + " (tol 1e-12)"};
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const std::string base = "qcorr_acceptance_verify_";
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    const std::string path = base + std::to_string(run) + ".json";
    const std::string cmd =
        std::string(QCORR_CLI_PATH) + " verify --seed 42 --out " + path;
    const int status = std::system(cmd.c_str());
    if (status != 0) {
      return {false, "verify run " + std::to_string(run) + " exited with " +
                         std::to_string(status)};
    }
    auto text = read_file(path);
    if (!text) return {false, "missing report " + path};
    reports.push_back(*text);
    std::remove(path.c_str());
  }
  const bool same = reports[0] == reports[1];
  return {same, same ? std::to_string(reports[0].size()) + " identical bytes"
                     : "reports differ"};
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "hs-oracle-equivalence", 30, hs_oracles},
      {2, "trace-oracle-equivalence", 120, trace_oracle},
      {3, "xstate-trace-entanglement-is-concurrence", 120, xstate_concurrence},
      {4, "concurrence-vs-wootters", 10, wootters},
      {5, "channel-analytic-vs-kraus", 10, channel_agreement},
      {6, "discord-entanglement-relations", 60, relation_identity},
      {7, "phase-damping-two-kink-structure", 0, pd_kink_structure},
      {8, "depolarizing-smooth-structure", 0, depol_smooth_structure},
      {9, "contractivity-scan", 60, contractivity},
      {10, "verify-determinism", 0, determinism},
  };

  int failures = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only && *only != c.id) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      out.pass = false;
      out.detail += fmt("; over the %.0f s budget", c.budget_seconds);
    }
    failures += !out.pass;
    std::printf("criterion %2d %-42s %s  %s [%.2f s]\n", c.id, c.name,
                out.pass ? "PASS" : "FAIL", out.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only.value_or(0));
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
