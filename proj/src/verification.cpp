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

#include "qcorr/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "qcorr/oracles.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/sampling.hpp"

namespace qcorr {

namespace {

struct Deviation {
  double value = 0.0;
  std::size_t evaluations = 0;
};

// Folds per-case deviations in case order, so the report does not depend on
// the thread count.
template <typename State>
MeasureCheck fold(std::string name, double tol, const std::vector<State>& cases,
                  const std::vector<Deviation>& results) {
  MeasureCheck check;
  check.measure = std::move(name);
  check.tolerance = tol;
  check.cases = cases.size();
  bool first = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    check.evaluations += results[i].evaluations;
    const double value =
        std::isnan(results[i].value) ? std::numeric_limits<double>::infinity()
                                     : results[i].value;
    if (first || value > check.max_abs_deviation) {
      check.max_abs_deviation = value;
      check.worst_case_state = to_json(cases[i]);
      first = false;
    }
  }
  return check;
}

template <typename State>
MeasureCheck check_all(std::string name, double tol,
                       const std::vector<State>& cases,
                       const std::function<Deviation(const State&)>& measure,
                       int threads) {
  std::vector<Deviation> results(cases.size());
  parallel_for(
      cases.size(), [&](std::size_t i) { results[i] = measure(cases[i]); },
      threads);
  return fold(std::move(name), tol, cases, results);
}

double corrupted_trace_discord(const CorrelationVector& r) {
  return std::max({std::abs(r.r1()), std::abs(r.r2()), std::abs(r.r3())});
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const MeasureCheck& c) { return c.pass(); });
}

const MeasureCheck* VerifyReport::worst_failure() const {
  const MeasureCheck* worst = nullptr;
  for (const MeasureCheck& c : checks) {
    if (c.pass()) continue;
    if (worst == nullptr || c.max_abs_deviation / c.tolerance >
                                worst->max_abs_deviation / worst->tolerance) {
      worst = &c;
    }
  }
  return worst;
}

Json VerifyReport::to_json() const {
  Json measures = Json::array();
  for (const MeasureCheck& c : checks) {
    measures.push_back(Json{{"measure", c.measure},
                            {"max_abs_deviation", c.max_abs_deviation},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass()},
                            {"worst_case_state", c.worst_case_state},
                            {"cases", c.cases},
                            {"evaluations", c.evaluations}});
  }
  return Json{{"seed", seed},
              {"grid", grid},
              {"pass", pass()},
              {"measures", std::move(measures)}};
}

VerifyReport run_verification(const VerifyConfig& cfg) {
  VerifyReport report;
  report.seed = cfg.seed;
  report.grid = cfg.grid;
  const int threads = cfg.threads;

  const std::vector<CorrelationVector> grid = physical_grid(cfg.grid);

  report.checks.push_back(check_all<CorrelationVector>(
      "HsDiscord", tolerance::kHsClassical, grid,
      [](const CorrelationVector& r) {
        const OracleResult o = closest_classical(r, Norm::kHilbertSchmidt);
        return Deviation{std::abs(hs_discord(r).value - o.distance),
                         o.evaluations};
      },
      threads));

  report.checks.push_back(check_all<CorrelationVector>(
      "HsEntanglement", tolerance::kHsSeparable, grid,
      [](const CorrelationVector& r) {
        const OracleResult o = closest_separable_hs(r);
        return Deviation{std::abs(hs_entanglement(r).value - o.distance),
                         o.evaluations};
      },
      threads));

  const bool mutate = cfg.mutate;
  report.checks.push_back(check_all<CorrelationVector>(
      "TraceDiscord", tolerance::kTraceOracle, grid,
      [mutate](const CorrelationVector& r) {
        const OracleResult o = closest_classical(r, Norm::kTrace);
        const double closed =
            mutate ? corrupted_trace_discord(r) : trace_discord(r).value;
        return Deviation{std::abs(closed - o.distance), o.evaluations};
      },
      threads));

  Rng proposition_rng(cfg.seed);
  std::vector<XState> entangled;
  for (int i = 0; i < cfg.proposition_samples; ++i) {
    entangled.push_back(random_entangled_xstate(proposition_rng));
  }
  if (cfg.extra_state) entangled.push_back(*cfg.extra_state);

  struct XFamilyOutcome {
    Deviation oracle;
    Deviation analytic;
    Deviation feasibility;
  };
  std::vector<XFamilyOutcome> outcomes(entangled.size());
  parallel_for(
      entangled.size(),
      [&](std::size_t i) {
        const XState& x = entangled[i];
        const OracleResult o = closest_separable_trace_xfamily(x);
        const double concurrence = concurrence_x(x).value;
        const SeparableXCandidate analytic = analytic_separable_candidate(x);
        const double bound =
            std::min(std::sqrt(x.a * x.d), std::sqrt(x.b * x.c));
        const auto excess = [bound](const SeparableXCandidate& c) {
          return std::max({0.0, std::abs(c.e_prime) - bound,
                           std::abs(c.f_prime) - bound});
        };
        outcomes[i].oracle = {std::abs(concurrence - o.distance),
                              o.evaluations};
        outcomes[i].analytic = {
            std::abs(concurrence - xfamily_trace_distance(x, analytic)), 1};
        outcomes[i].feasibility = {
            std::max(excess(std::get<SeparableXCandidate>(o.minimizer)),
                     excess(analytic)),
            0};
      },
      threads);
  const auto pick = [&](Deviation XFamilyOutcome::*field) {
    std::vector<Deviation> out;
    out.reserve(outcomes.size());
    for (const XFamilyOutcome& o : outcomes) out.push_back(o.*field);
    return out;
  };
  report.checks.push_back(fold("TraceEntanglement", tolerance::kTraceOracle,
                               entangled, pick(&XFamilyOutcome::oracle)));
  report.checks.push_back(fold("TraceEntanglementAnalyticMinimizer",
                               tolerance::kAnalyticMinimizer, entangled,
                               pick(&XFamilyOutcome::analytic)));
  report.checks.push_back(fold("MinimizerFeasibility", tolerance::kFeasibility,
                               entangled, pick(&XFamilyOutcome::feasibility)));

  Rng wootters_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<XState> generic;
  for (int i = 0; i < cfg.wootters_samples; ++i) {
    generic.push_back(random_xstate(wootters_rng));
  }
  if (cfg.extra_state) generic.push_back(*cfg.extra_state);

  report.checks.push_back(check_all<XState>(
      "Concurrence", tolerance::kWootters, generic,
      [](const XState& x) {
        return Deviation{std::abs(concurrence_x(x).value -
                                  wootters_concurrence(to_density(x))),
                         1};
      },
      threads));

  return report;
}

}  // namespace qcorr
