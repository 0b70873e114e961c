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

// Oracle-versus-closed-form verification suite behind `qcorr verify`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/io.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace tolerance {
inline constexpr double kHsClassical = 1e-6;
inline constexpr double kHsSeparable = 1e-8;
inline constexpr double kTraceOracle = 1e-4;
inline constexpr double kAnalyticMinimizer = 1e-12;
inline constexpr double kWootters = 1e-10;
inline constexpr double kFeasibility = 1e-12;
}  // namespace tolerance

struct VerifyConfig {
  std::uint64_t seed = 42;
  int grid = 9;
  int proposition_samples = 1000;
  int wootters_samples = 10000;
  /// Swaps the trace discord formula for max|r_i| to prove the harness
  /// can fail.
  bool mutate = false;
  std::optional<XState> extra_state;
  int threads = configured_threads();
};

struct MeasureCheck {
  std::string measure;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  Json worst_case_state;
  std::size_t evaluations = 0;
  std::size_t cases = 0;

  bool pass() const { return max_abs_deviation <= tolerance; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int grid = 0;
  std::vector<MeasureCheck> checks;

  bool pass() const;
  const MeasureCheck* worst_failure() const;
  Json to_json() const;
};

VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace qcorr
