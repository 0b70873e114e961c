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

// qcorr: Bell-diagonal correlation dynamics from the command line.
//
// Exit codes: 0 success, 2 configuration error, 3 non-physical state,
// 4 separable initial state (empty entangled window), 5 verification
// tolerance exceeded, 1 internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "qcorr/io.hpp"
#include "qcorr/relations.hpp"
#include "qcorr/verification.hpp"

namespace {

using namespace qcorr;

constexpr int kExitConfig = 2;
constexpr int kExitNonPhysical = 3;
constexpr int kExitEmptyWindow = 4;
constexpr int kExitTolerance = 5;
constexpr int kExitInternal = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NormChoice { kHs, kTrace, kBoth };

struct RunConfig {
  std::string command;
  std::string channel_text;
  std::string state_text;
  std::string xstate_path;
  std::string norm_text = "both";
  std::optional<double> pmax;
  int samples = 0;
  std::uint64_t seed = 42;
  int grid = 9;
  std::string out;
  bool mutate = false;
};

// Values resolved from RunConfig; every module precondition holds once this
// exists.
struct Resolved {
  ChannelKind channel = ChannelKind::kPhaseDamping;
  std::optional<CorrelationVector> state;
  std::optional<XState> xstate;
  NormChoice norm = NormChoice::kBoth;
  double p_max = 1.0;
};

std::vector<Norm> norms_of(NormChoice choice) {
  switch (choice) {
    case NormChoice::kHs:
      return {Norm::kHilbertSchmidt};
    case NormChoice::kTrace:
      return {Norm::kTrace};
    case NormChoice::kBoth:
      break;
  }
  return {Norm::kHilbertSchmidt, Norm::kTrace};
}

XState read_xstate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--xstate: cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("--xstate: invalid JSON in '" + path + "'");
  }
  try {
    return xstate_from_json(j);
  } catch (const Error& e) {
    throw ConfigError("--xstate: " + e.detail());
  }
}

Resolved resolve(const RunConfig& cfg, bool needs_channel, bool needs_state) {
  Resolved res;
  std::optional<double> channel_p;
  if (needs_channel) {
    if (cfg.channel_text.empty()) throw ConfigError("--channel: required");
    try {
      const ChannelSpec spec = parse_channel_spec(cfg.channel_text);
      res.channel = spec.kind;
      channel_p = spec.p;
    } catch (const Error& e) {
      throw ConfigError("--" + e.detail());
    }
  }

  if (cfg.norm_text == "hs") {
    res.norm = NormChoice::kHs;
  } else if (cfg.norm_text == "trace") {
    res.norm = NormChoice::kTrace;
  } else if (cfg.norm_text == "both") {
    res.norm = NormChoice::kBoth;
  } else {
    throw ConfigError("--norm: expected hs, trace or both, got '" +
                      cfg.norm_text + "'");
  }

  if (!cfg.state_text.empty() && !cfg.xstate_path.empty()) {
    throw ConfigError("--state: give either --state or --xstate, not both");
  }
  if (!cfg.state_text.empty()) {
    try {
      res.state = parse_state_triple(cfg.state_text);
    } catch (const Error& e) {
      throw ConfigError("--" + e.detail());
    }
  }
  if (!cfg.xstate_path.empty()) {
    if (needs_state) {
      throw ConfigError("--xstate: " + cfg.command +
                        " needs a Bell-diagonal --state r1,r2,r3");
    }
    res.xstate = read_xstate(cfg.xstate_path);
  }
  if (needs_state && !res.state) throw ConfigError("--state: required");

  if (cfg.samples != 0 && cfg.samples < 2) {
    throw ConfigError("--samples: must be at least 2");
  }
  if (cfg.grid < 2) throw ConfigError("--grid: must be at least 2");

  if (needs_channel) {
    const double limit = monotone_p_limit(res.channel);
    if (cfg.pmax && channel_p && *cfg.pmax != *channel_p) {
      throw ConfigError("--pmax: conflicts with the p given in --channel");
    }
    res.p_max = cfg.pmax.value_or(channel_p.value_or(limit));
    if (!(res.p_max > 0.0 && res.p_max <= limit)) {
      throw ConfigError("--pmax: " + format_double(res.p_max) +
                        " outside (0, " + format_double(limit) + "]");
    }
  }

  // Physicality is checked last so configuration errors win.
  if (res.state) require_physical(*res.state);
  if (res.xstate) require_physical(*res.xstate);
  return res;
}

std::string events_path_for(const std::string& csv_path) {
  const std::size_t slash = csv_path.find_last_of('/');
  const std::size_t dot = csv_path.find_last_of('.');
  const bool has_ext = dot != std::string::npos &&
                       (slash == std::string::npos || dot > slash);
  return (has_ext ? csv_path.substr(0, dot) : csv_path) + ".events.json";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("--out: cannot write '" + path + "'");
  return out;
}

int run_simulate(const RunConfig& cfg) {
  const Resolved res = resolve(cfg, true, true);
  const Trajectory traj =
      run_trajectory(res.channel, *res.state, res.p_max,
                     cfg.samples ? cfg.samples : kDefaultSamples);
  if (!cfg.out.empty()) {
    {
      std::ofstream csv = open_output(cfg.out);
      write_trajectory_csv(csv, traj);
    }
    std::ofstream events = open_output(events_path_for(cfg.out));
    events << events_json(traj).dump(2) << '\n';
  }

  std::cout << "channel " << channel_name(res.channel) << " p_max "
            << format_double(res.p_max) << '\n';
  for (Norm norm : norms_of(res.norm)) {
    std::size_t changes = 0;
    for (const EventRecord& ev : traj.events) {
      if (ev.norm != norm) continue;
      changes += ev.kind == EventKind::kSuddenChangeDiscord;
      std::cout << (ev.kind == EventKind::kSuddenChangeDiscord
                        ? "sudden_change"
                        : "sudden_death")
                << ' ' << norm_name(norm) << " p=" << format_double(ev.p_detected)
                << " analytic="
                << (ev.p_analytic ? format_double(*ev.p_analytic) : "none")
                << '\n';
    }
    std::cout << "sudden_changes " << norm_name(norm) << " count=" << changes
              << '\n';
  }
  return 0;
}

void print_kinks(std::ostream& out, const Curve& curve) {
  for (double p : curve.kinks) {
    out << "kink " << norm_name(curve.norm) << " p=" << format_double(p) << '\n';
  }
  if (curve.sudden_death) {
    out << "sudden_death " << norm_name(curve.norm)
        << " p=" << format_double(*curve.sudden_death) << '\n';
  }
}

int run_curve(const RunConfig& cfg, bool with_relation) {
  const Resolved res = resolve(cfg, true, true);
  const Trajectory traj =
      run_trajectory(res.channel, *res.state, res.p_max,
                     cfg.samples ? cfg.samples : kDefaultSamples);

  std::vector<Curve> curves;
  for (Norm norm : norms_of(res.norm)) curves.push_back(d_vs_e_curve(traj, norm));

  std::ostringstream csv;
  csv << (with_relation
              ? "norm,p,E,D,D_relation,branch,concurrence_branch,extrapolated\n"
              : "norm,p,E,D,branch\n");
  for (const Curve& curve : curves) {
    std::optional<RelationCase> rc;
    if (with_relation) {
      try {
        rc = make_relation_case(res.channel, curve.norm, *res.state);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateOrdering) throw;
      }
    }
    const Branch initial_pairing =
        frame_concurrence_branch(res.channel, *res.state);
    for (const CurvePoint& pt : curve.points) {
      csv << norm_name(curve.norm) << ',' << format_double(pt.p) << ','
          << format_double(pt.entanglement) << ',' << format_double(pt.discord)
          << ',';
      if (!with_relation) {
        csv << branch_name(pt.branch) << '\n';
        continue;
      }
      Branch pairing = Branch::kNone;
      std::string related;
      std::string extrapolated;
      if (rc) {
        if (curve.norm == Norm::kHilbertSchmidt) {
          related = format_double(
              hs_discord_from_entanglement(pt.entanglement, *rc, pt.branch));
          extrapolated = "false";
        } else {
          pairing = frame_concurrence_branch(
              res.channel, evolved_vector(res.channel, *res.state, pt.p));
          if (pairing == Branch::kNone) pairing = initial_pairing;
          related = format_double(trace_discord_from_concurrence(
              pt.entanglement, *rc, pairing, pt.branch));
          extrapolated =
              relation_is_extrapolated(*rc, pt.branch) ? "true" : "false";
        }
      }
      csv << related << ',' << branch_name(pt.branch) << ','
          << (curve.norm == Norm::kTrace ? branch_name(pairing) : "") << ','
          << extrapolated << '\n';
    }
  }

  if (cfg.out.empty()) {
    std::cout << csv.str();
    for (const Curve& curve : curves) print_kinks(std::cerr, curve);
  } else {
    std::ofstream out = open_output(cfg.out);
    out << csv.str();
    for (const Curve& curve : curves) print_kinks(std::cout, curve);
  }
  return 0;
}

int run_verify(const RunConfig& cfg) {
  const Resolved res = resolve(cfg, false, false);
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.grid = cfg.grid;
  if (cfg.samples != 0) {
    vc.proposition_samples = cfg.samples;
    vc.wootters_samples = 10 * cfg.samples;
  }
  vc.mutate = cfg.mutate;
  if (res.xstate) vc.extra_state = res.xstate;
  if (res.state) vc.extra_state = bd_to_xstate(*res.state);

  const VerifyReport report = run_verification(vc);
  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out = open_output(cfg.out);
    out << text;
  }
  if (const MeasureCheck* worst = report.worst_failure()) {
    throw ToleranceExceeded(worst->measure + " deviation " +
                            format_double(worst->max_abs_deviation) + " > " +
                            format_double(worst->tolerance) + " at " +
                            worst->worst_case_state.dump());
  }
  return 0;
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--channel", cfg.channel_text,
                  "Channel kind[:p]: pd, bf, bpf, pf or depol");
  sub->add_option("--state", cfg.state_text, "Correlation vector r1,r2,r3");
  sub->add_option("--xstate", cfg.xstate_path, "X-state JSON file");
  sub->add_option("--norm", cfg.norm_text, "hs, trace or both");
  sub->add_option("--pmax", cfg.pmax, "Largest channel parameter");
  sub->add_option("--samples", cfg.samples, "Grid points / sample count");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--grid", cfg.grid, "Points per axis of the state grid");
  sub->add_option("--out", cfg.out, "Output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and discord of Bell-diagonal states under local "
               "decoherence"};
  app.require_subcommand(1);
  RunConfig cfg;
  CLI::App* simulate = app.add_subcommand("simulate", "Trajectory CSV and events");
  CLI::App* relate = app.add_subcommand("relate", "D(E) relation check along the curve");
  CLI::App* verify = app.add_subcommand("verify", "Oracle vs closed-form report");
  CLI::App* curve = app.add_subcommand("curve", "Discord-vs-entanglement curve");
  for (CLI::App* sub : {simulate, relate, verify, curve}) {
    add_common_options(sub, cfg);
  }
  verify->add_flag("--mutate", cfg.mutate)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      cfg.command = "simulate";
      return run_simulate(cfg);
    }
    if (relate->parsed()) {
      cfg.command = "relate";
      return run_curve(cfg, true);
    }
    if (curve->parsed()) {
      cfg.command = "curve";
      return run_curve(cfg, false);
    }
    cfg.command = "verify";
    return run_verify(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ToleranceExceeded& e) {
    std::cerr << "ToleranceExceeded: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kNonPhysical:
        return kExitNonPhysical;
      case ErrorKind::kEmptyWindow:
      case ErrorKind::kNotEntangled:
        return kExitEmptyWindow;
      case ErrorKind::kNumericalFailure:
        return kExitInternal;
      default:
        return kExitConfig;
    }
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << '\n';
    return kExitInternal;
  }
}
