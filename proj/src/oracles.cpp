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

#include "qcorr/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kClassicalGridStep = 1e-3;
constexpr double kClassicalTolerance = 1e-8;
constexpr int kXGridPoints = 200;
constexpr double kXRefineTolerance = 1e-6;

const std::array<Matrix4, 3>& correlation_operators() {
  static const std::array<Matrix4, 3> kOps = {
      kron(pauli(Axis::kX), pauli(Axis::kX)),
      kron(pauli(Axis::kY), pauli(Axis::kY)),
      kron(pauli(Axis::kZ), pauli(Axis::kZ))};
  return kOps;
}

Complex with_phase_of(double magnitude, Complex reference) {
  const double modulus = std::abs(reference);
  if (modulus == 0.0) return {magnitude, 0.0};
  return magnitude * (reference / modulus);
}

double separable_bound(const XState& x) {
  return std::min(std::sqrt(std::max(0.0, x.a * x.d)),
                  std::sqrt(std::max(0.0, x.b * x.c)));
}

}  // namespace

const char* norm_name(Norm norm) {
  return norm == Norm::kHilbertSchmidt ? "HS" : "Trace";
}

double trace_norm(const Matrix4& delta) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(delta, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure, "eigensolver did not converge");
  }
  return solver.eigenvalues().cwiseAbs().sum();
}

double hs_norm_squared(const Matrix4& delta) {
  return (delta.adjoint() * delta).trace().real();
}

Matrix4 bd_difference(const CorrelationVector& lhs,
                      const CorrelationVector& rhs) {
  const auto& ops = correlation_operators();
  Matrix4 out = Matrix4::Zero();
  for (int j = 0; j < 3; ++j) out += (lhs[j] - rhs[j]) * ops[j];
  return out / 4.0;
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               std::size_t* evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  std::size_t count = 2;
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    ++count;
  }
  if (evaluations != nullptr) *evaluations += count;
  return 0.5 * (lo + hi);
}

OracleResult closest_classical(const CorrelationVector& r, Norm norm) {
  require_physical(r);
  OracleResult result;
  result.distance = std::numeric_limits<double>::infinity();

  auto distance_to = [&](const CorrelationVector& chi) {
    const Matrix4 delta = bd_difference(r, chi);
    ++result.evaluations;
    return norm == Norm::kHilbertSchmidt ? 4.0 * hs_norm_squared(delta)
                                         : trace_norm(delta);
  };

  const int steps = static_cast<int>(std::lround(2.0 / kClassicalGridStep));
  for (Axis axis : kAxes) {
    auto on_axis = [axis](double t) {
      std::array<double, 3> v{0.0, 0.0, 0.0};
      v[index_of(axis)] = t;
      return CorrelationVector(v);
    };
    auto objective = [&](double t) { return distance_to(on_axis(t)); };

    int best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= steps; ++k) {
      const double value = objective(-1.0 + k * kClassicalGridStep);
      if (value < best) {
        best = value;
        best_k = k;
      }
    }
    const double lo = -1.0 + std::max(0, best_k - 1) * kClassicalGridStep;
    const double hi = -1.0 + std::min(steps, best_k + 1) * kClassicalGridStep;
    std::size_t refine_evals = 0;
    const double t =
        golden_section_minimize(objective, lo, hi, kClassicalTolerance,
                                &refine_evals);
    const double refined = objective(t);
    const double t_best = refined <= best ? t : -1.0 + best_k * kClassicalGridStep;
    const double d_best = std::min(refined, best);
    if (d_best < result.distance) {
      result.distance = d_best;
      result.minimizer = on_axis(t_best);
    }
  }
  return result;
}

OracleResult closest_separable_hs(const CorrelationVector& r) {
  require_physical(r);
  OracleResult result;
  result.evaluations = 1;
  std::array<double, 3> y{std::abs(r.r1()), std::abs(r.r2()), std::abs(r.r3())};
  if (y[0] + y[1] + y[2] <= 1.0) {
    result.minimizer = r;
    result.distance = 0.0;
    return result;
  }
  // Projection onto the simplex {z >= 0, sum z = 1}: z_i = max(y_i - tau, 0).
  std::array<double, 3> sorted = y;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (int k = 0; k < 3; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / (k + 1);
    if (sorted[k] - candidate > 0.0) tau = candidate;
  }
  std::array<double, 3> z{};
  double distance = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double zi = std::max(y[i] - tau, 0.0);
    z[i] = std::copysign(zi, r[i]);
    distance += (y[i] - zi) * (y[i] - zi);
  }
  result.minimizer = CorrelationVector(z);
  result.distance = distance;
  return result;
}

double xfamily_trace_distance(const XState& x,
                              const SeparableXCandidate& candidate) {
  Matrix4 delta = Matrix4::Zero();
  delta(0, 3) = x.e - candidate.e_prime;
  delta(3, 0) = std::conj(delta(0, 3));
  delta(1, 2) = x.f - candidate.f_prime;
  delta(2, 1) = std::conj(delta(1, 2));
  return trace_norm(delta);
}

OracleResult closest_separable_trace_xfamily(const XState& x) {
  require_physical(x);
  const double bound = separable_bound(x);
  OracleResult result;

  auto candidate_at = [&](double e_mod, double f_mod) {
    return SeparableXCandidate{with_phase_of(e_mod, x.e),
                               with_phase_of(f_mod, x.f)};
  };
  auto objective = [&](double e_mod, double f_mod) {
    ++result.evaluations;
    return xfamily_trace_distance(x, candidate_at(e_mod, f_mod));
  };

  const double h = bound / (kXGridPoints - 1);
  double best = std::numeric_limits<double>::infinity();
  double best_e = 0.0;
  double best_f = 0.0;
  for (int i = 0; i < kXGridPoints; ++i) {
    for (int j = 0; j < kXGridPoints; ++j) {
      const double e_mod = i * h;
      const double f_mod = j * h;
      const double value = objective(e_mod, f_mod);
      if (value < best) {
        best = value;
        best_e = e_mod;
        best_f = f_mod;
      }
    }
  }

  // Zoom: resample an 11x11 patch of half-width `radius` around the
  // incumbent, shrinking by 5x per round.
  constexpr int kPatch = 11;
  double radius = h;
  while (radius > kXRefineTolerance && bound > 0.0) {
    const double lo_e = std::max(0.0, best_e - radius);
    const double hi_e = std::min(bound, best_e + radius);
    const double lo_f = std::max(0.0, best_f - radius);
    const double hi_f = std::min(bound, best_f + radius);
    const double centre_e = best_e;
    const double centre_f = best_f;
    for (int i = 0; i < kPatch; ++i) {
      for (int j = 0; j < kPatch; ++j) {
        const double e_mod = lo_e + (hi_e - lo_e) * i / (kPatch - 1);
        const double f_mod = lo_f + (hi_f - lo_f) * j / (kPatch - 1);
        const double value = objective(e_mod, f_mod);
        if (value < best) {
          best = value;
          best_e = e_mod;
          best_f = f_mod;
        }
      }
    }
    if (best_e == centre_e && best_f == centre_f) radius /= 5.0;
  }

  result.minimizer = candidate_at(best_e, best_f);
  result.distance = best;
  return result;
}

SeparableXCandidate analytic_separable_candidate(const XState& x) {
  const double bound = separable_bound(x);
  return {with_phase_of(std::min(std::abs(x.e), bound), x.e),
          with_phase_of(std::min(std::abs(x.f), bound), x.f)};
}

bool is_feasible(const XState& x, const SeparableXCandidate& candidate,
                 double tol) {
  const double bound = separable_bound(x);
  return std::abs(candidate.e_prime) <= bound + tol &&
         std::abs(candidate.f_prime) <= bound + tol;
}

}  // namespace qcorr
