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

// Python bindings for the qcorr core. Correlation vectors travel as 3-tuples,
// density matrices as complex 4x4 numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/relations.hpp"
#include "qcorr/states.hpp"
#include "qcorr/verification.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

using Triple = std::array<double, 3>;

CorrelationVector vec(const Triple& r) { return CorrelationVector(r); }

ChannelKind channel_arg(const std::string& name) {
  if (auto kind = parse_channel_kind(name)) return *kind;
  throw Error(ErrorKind::kInvalidArgument, "unknown channel '" + name + "'");
}

Norm norm_arg(const std::string& name) {
  if (name == "hs" || name == "HS") return Norm::kHilbertSchmidt;
  if (name == "trace" || name == "Trace") return Norm::kTrace;
  throw Error(ErrorKind::kInvalidArgument, "unknown norm '" + name + "'");
}

std::optional<Branch> branch_arg(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  if (auto b = parse_branch(*name)) return *b;
  throw Error(ErrorKind::kBranchUnknown, "unknown branch '" + *name + "'");
}

py::tuple quantifier(const QuantifierValue& q) {
  return py::make_tuple(q.value, std::string(branch_name(q.branch)));
}

py::object from_json(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict oracle_dict(const OracleResult& res) {
  py::dict out;
  out["distance"] = res.distance;
  out["evaluations"] = res.evaluations;
  if (const auto* r = std::get_if<CorrelationVector>(&res.minimizer)) {
    out["minimizer"] = r->values();
  } else {
    const auto& c = std::get<SeparableXCandidate>(res.minimizer);
    out["minimizer"] = py::make_tuple(c.e_prime, c.f_prime);
  }
  return out;
}

py::dict trajectory_dict(const Trajectory& traj) {
  py::list p, r, e_hs, d_hs, conc, d_tr, b_hs, b_tr;
  for (const TrajectorySample& s : traj.samples) {
    p.append(s.p);
    r.append(s.r.values());
    e_hs.append(s.hs_entanglement);
    d_hs.append(s.hs_discord);
    conc.append(s.concurrence);
    d_tr.append(s.trace_discord);
    b_hs.append(std::string(branch_name(s.hs_branch)));
    b_tr.append(std::string(branch_name(s.trace_branch)));
  }
  py::list events;
  for (const EventRecord& ev : traj.events) {
    py::dict d;
    d["kind"] = std::string(event_kind_name(ev.kind));
    d["norm"] = std::string(norm_name(ev.norm));
    d["p_detected"] = ev.p_detected;
    d["p_analytic"] = ev.p_analytic;
    events.append(d);
  }
  py::dict out;
  out["channel"] = std::string(channel_short_name(traj.channel));
  out["p"] = p;
  out["r"] = r;
  out["E_hs"] = e_hs;
  out["D_hs"] = d_hs;
  out["C"] = conc;
  out["D_tr"] = d_tr;
  out["branch_hs"] = b_hs;
  out["branch_tr"] = b_tr;
  out["events"] = events;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Correlation quantifiers of Bell-diagonal and X states";

  // Messages carry the error kind as a "Kind: detail" prefix.
  py::register_exception<Error>(m, "QcorrError", PyExc_ValueError);

  py::class_<XState>(m, "XState")
      .def(py::init([](double a, double b, double c, double d, Complex e,
                       Complex f) { return XState{a, b, c, d, e, f}; }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
           py::arg("e"), py::arg("f"))
      .def_readwrite("a", &XState::a)
      .def_readwrite("b", &XState::b)
      .def_readwrite("c", &XState::c)
      .def_readwrite("d", &XState::d)
      .def_readwrite("e", &XState::e)
      .def_readwrite("f", &XState::f)
      .def("density", [](const XState& x) { return to_density(x).matrix(); })
      .def("__repr__", [](const XState& x) { return to_json(x).dump(); });

  m.def("is_physical", [](const Triple& r) { return is_physical(vec(r)); });
  m.def("bell_eigenvalues",
        [](const Triple& r) { return bell_eigenvalues(vec(r)); });
  m.def("classify_region", [](const Triple& r) {
    return std::string(region_name(classify_region(vec(r))));
  });
  m.def("bd_to_density",
        [](const Triple& r) { return bd_to_density(vec(r)).matrix(); });
  m.def("density_to_bd", [](const Matrix4& rho) {
    return density_to_bd(DensityMatrix::from_matrix(rho)).values();
  });
  m.def("bd_to_xstate", [](const Triple& r) { return bd_to_xstate(vec(r)); });

  m.def("hs_discord",
        [](const Triple& r) { return quantifier(hs_discord(vec(r))); });
  m.def("hs_entanglement",
        [](const Triple& r) { return hs_entanglement(vec(r)).value; });
  m.def("trace_discord",
        [](const Triple& r) { return quantifier(trace_discord(vec(r))); });
  m.def("concurrence",
        [](const XState& x) { return quantifier(trace_entanglement(x)); });
  m.def("wootters_concurrence", [](const Matrix4& rho) {
    return wootters_concurrence(DensityMatrix::from_matrix(rho));
  });

  m.def("evolved_vector",
        [](const std::string& channel, const Triple& r, double p) {
          return evolved_vector(channel_arg(channel), vec(r), p).values();
        },
        py::arg("channel"), py::arg("r"), py::arg("p"));
  m.def("apply_channel",
        [](const std::string& channel, double p, const Matrix4& rho) {
          return apply_local_pair(DensityMatrix::from_matrix(rho),
                                  kraus_for(channel_arg(channel), p))
              .matrix();
        },
        py::arg("channel"), py::arg("p"), py::arg("rho"));

  m.def("closest_classical",
        [](const Triple& r, const std::string& norm) {
          return oracle_dict(closest_classical(vec(r), norm_arg(norm)));
        },
        py::arg("r"), py::arg("norm"));
  m.def("closest_separable_hs", [](const Triple& r) {
    return oracle_dict(closest_separable_hs(vec(r)));
  });
  m.def("closest_separable_trace_xfamily", [](const XState& x) {
    return oracle_dict(closest_separable_trace_xfamily(x));
  });

  m.def("critical_times",
        [](const std::string& channel, const std::string& norm,
           const Triple& r) {
          const CriticalTimes t = critical_times(
              make_relation_case(channel_arg(channel), norm_arg(norm), vec(r)));
          py::dict out;
          out["sudden_changes"] = t.sudden_changes;
          out["sudden_death"] = t.sudden_death;
          return out;
        },
        py::arg("channel"), py::arg("norm"), py::arg("r"));
  m.def("hs_discord_from_entanglement",
        [](double e, const std::string& channel, const Triple& r0,
           const std::optional<std::string>& branch) {
          return hs_discord_from_entanglement(
              e, make_relation_case(channel_arg(channel), Norm::kHilbertSchmidt,
                                    vec(r0)),
              branch_arg(branch));
        },
        py::arg("entanglement"), py::arg("channel"), py::arg("r0"),
        py::arg("branch") = py::none());
  m.def("trace_discord_from_concurrence",
        [](double c, const std::string& channel, const Triple& r0,
           const std::optional<std::string>& concurrence_branch,
           const std::optional<std::string>& discord_branch) {
          return trace_discord_from_concurrence(
              c, make_relation_case(channel_arg(channel), Norm::kTrace, vec(r0)),
              branch_arg(concurrence_branch), branch_arg(discord_branch));
        },
        py::arg("concurrence"), py::arg("channel"), py::arg("r0"),
        py::arg("concurrence_branch") = py::none(),
        py::arg("discord_branch") = py::none());

  m.def("run_trajectory",
        [](const std::string& channel, const Triple& r0, double p_max,
           int samples) {
          return trajectory_dict(
              run_trajectory(channel_arg(channel), vec(r0), p_max, samples));
        },
        py::arg("channel"), py::arg("r0"), py::arg("p_max") = 1.0,
        py::arg("samples") = kDefaultSamples);

  m.def("verify",
        [](std::uint64_t seed, int grid, int samples) {
          VerifyConfig cfg;
          cfg.seed = seed;
          cfg.grid = grid;
          cfg.proposition_samples = samples;
          cfg.wootters_samples = 10 * samples;
          return from_json(run_verification(cfg).to_json());
        },
        py::arg("seed") = 42, py::arg("grid") = 9, py::arg("samples") = 1000);
}
