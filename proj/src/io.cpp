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

#include "qcorr/io.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

double number_at(const Json& arr, std::size_t i, const char* what) {
  if (!arr.is_array() || i >= arr.size() || !arr[i].is_number()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("expected numeric array field '") + what + "'");
  }
  return arr[i].get<double>();
}

Complex complex_from(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("missing field '") + key + "'");
  }
  const Json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("field '") + key + "' must be [re, im]");
  }
  return {number_at(v, 0, key), number_at(v, 1, key)};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json to_json(const CorrelationVector& r) {
  return Json{{"r", {r.r1(), r.r2(), r.r3()}}};
}

Json to_json(const XState& x) {
  return Json{{"diag", {x.a, x.b, x.c, x.d}},
              {"e", {x.e.real(), x.e.imag()}},
              {"f", {x.f.real(), x.f.imag()}}};
}

CorrelationVector correlation_vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.at("r").is_array() ||
      j.at("r").size() != 3) {
    throw Error(ErrorKind::kInvalidArgument, "expected {\"r\":[r1,r2,r3]}");
  }
  const Json& r = j.at("r");
  return {number_at(r, 0, "r"), number_at(r, 1, "r"), number_at(r, 2, "r")};
}

XState xstate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("diag") || !j.at("diag").is_array() ||
      j.at("diag").size() != 4) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected {\"diag\":[a,b,c,d],\"e\":[re,im],\"f\":[re,im]}");
  }
  const Json& diag = j.at("diag");
  XState x;
  x.a = number_at(diag, 0, "diag");
  x.b = number_at(diag, 1, "diag");
  x.c = number_at(diag, 2, "diag");
  x.d = number_at(diag, 3, "diag");
  x.e = complex_from(j, "e");
  x.f = complex_from(j, "f");
  return x;
}

CorrelationVector parse_state_triple(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    values.push_back(parse_number(token, "state"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "state: expected three comma-separated values, got " +
                    std::to_string(values.size()));
  }
  return {values[0], values[1], values[2]};
}

ChannelSpec parse_channel_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto kind = parse_channel_kind(name);
  if (!kind) {
    throw Error(ErrorKind::kInvalidArgument,
                "channel: unknown kind '" + std::string(name) +
                    "' (expected pd, bf, bpf, pf or depol)");
  }
  ChannelSpec spec{*kind, std::nullopt};
  if (colon != std::string_view::npos) {
    const double p = parse_number(text.substr(colon + 1), "channel");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "channel: p = " + format_double(p) + " outside [0, 1]");
    }
    spec.p = p;
  }
  return spec;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "p,r1,r2,r3,E_hs,D_hs,C,D_tr,branch_hs,branch_tr\n";
  for (const TrajectorySample& s : traj.samples) {
    out << format_double(s.p) << ',' << format_double(s.r.r1()) << ','
        << format_double(s.r.r2()) << ',' << format_double(s.r.r3()) << ','
        << format_double(s.hs_entanglement) << ','
        << format_double(s.hs_discord) << ',' << format_double(s.concurrence)
        << ',' << format_double(s.trace_discord) << ','
        << branch_name(s.hs_branch) << ',' << branch_name(s.trace_branch)
        << '\n';
  }
}

Json events_json(const Trajectory& traj) {
  Json events = Json::array();
  for (const EventRecord& ev : traj.events) {
    Json entry{{"kind", event_kind_name(ev.kind)},
               {"norm", norm_name(ev.norm)},
               {"p_detected", ev.p_detected}};
    entry["p_analytic"] = ev.p_analytic ? Json(*ev.p_analytic) : Json(nullptr);
    events.push_back(std::move(entry));
  }
  return Json{{"events", std::move(events)}};
}

}  // namespace qcorr
