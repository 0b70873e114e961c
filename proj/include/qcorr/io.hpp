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

// Serialization shared by the CLI, fixtures and the Python module.
//
//   CorrelationVector  {"r":[r1,r2,r3]}
//   XState             {"diag":[a,b,c,d],"e":[re,im],"f":[re,im]}
//   trajectory CSV     p,r1,r2,r3,E_hs,D_hs,C,D_tr,branch_hs,branch_tr
//   events JSON        {"events":[{"kind","norm","p_detected","p_analytic"}]}

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

using Json = nlohmann::ordered_json;

/// %.17g: enough digits to round-trip any double.
std::string format_double(double v);

Json to_json(const CorrelationVector& r);
Json to_json(const XState& x);
CorrelationVector correlation_vector_from_json(const Json& j);
XState xstate_from_json(const Json& j);

/// "r1,r2,r3". Throws Error(kInvalidArgument) on malformed input; does not
/// check physicality.
CorrelationVector parse_state_triple(std::string_view text);

/// "pd", "pd:0.3", "depol:1", ... The optional number is a probability.
struct ChannelSpec {
  ChannelKind kind;
  std::optional<double> p;
};
ChannelSpec parse_channel_spec(std::string_view text);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
Json events_json(const Trajectory& traj);

}  // namespace qcorr
