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

#include "qcorr/quantifiers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcorr/error.hpp"

namespace qcorr {

std::string_view measure_name(Measure measure) {
  switch (measure) {
    case Measure::kHsDiscord:
      return "HsDiscord";
    case Measure::kHsEntanglement:
      return "HsEntanglement";
    case Measure::kTraceDiscord:
      return "TraceDiscord";
    case Measure::kTraceEntanglement:
      return "TraceEntanglement";
    case Measure::kConcurrence:
      return "Concurrence";
  }
  return "";
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::kNone:
      return "None";
    case Branch::kD1:
      return "D1";
    case Branch::kD2:
      return "D2";
    case Branch::kD3:
      return "D3";
    case Branch::kI1:
      return "I1";
    case Branch::kI2:
      return "I2";
    case Branch::kI3:
      return "I3";
    case Branch::kC1:
      return "C1";
    case Branch::kC2:
      return "C2";
  }
  return "";
}

std::optional<Branch> parse_branch(std::string_view name) {
  constexpr std::array<Branch, 9> kAll = {
      Branch::kNone, Branch::kD1, Branch::kD2, Branch::kD3, Branch::kI1,
      Branch::kI2,   Branch::kI3, Branch::kC1, Branch::kC2};
  for (Branch b : kAll) {
    if (branch_name(b) == name) return b;
  }
  return std::nullopt;
}

std::optional<Axis> branch_axis(Branch branch) {
  switch (branch) {
    case Branch::kD1:
    case Branch::kI1:
      return Axis::kX;
    case Branch::kD2:
    case Branch::kI2:
      return Axis::kY;
    case Branch::kD3:
    case Branch::kI3:
      return Axis::kZ;
    default:
      return std::nullopt;
  }
}

Branch hs_branch_for(Axis axis) {
  constexpr Branch kMap[] = {Branch::kD1, Branch::kD2, Branch::kD3};
  return kMap[index_of(axis)];
}

Branch trace_branch_for(Axis axis) {
  constexpr Branch kMap[] = {Branch::kI1, Branch::kI2, Branch::kI3};
  return kMap[index_of(axis)];
}

QuantifierValue hs_discord(const CorrelationVector& r) {
  const double sq[] = {r.r1() * r.r1(), r.r2() * r.r2(), r.r3() * r.r3()};
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const double di = sq[(i + 1) % 3] + sq[(i + 2) % 3];
    if (di < best_value) {
      best_value = di;
      best = i;
    }
  }
  return {Measure::kHsDiscord, best_value,
          hs_branch_for(static_cast<Axis>(best))};
}

QuantifierValue hs_entanglement(const CorrelationVector& r) {
  const double excess = r.abs_sum() - 1.0;
  const double value = excess > 0.0 ? excess * excess / 3.0 : 0.0;
  return {Measure::kHsEntanglement, value, Branch::kNone};
}

QuantifierValue trace_discord(const CorrelationVector& r) {
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return std::abs(r[lhs]) < std::abs(r[rhs]);
  });
  const int middle = order[1];
  return {Measure::kTraceDiscord, std::abs(r[middle]),
          trace_branch_for(static_cast<Axis>(middle))};
}

QuantifierValue concurrence_x(const XState& x) {
  const double root_bc = std::sqrt(std::max(0.0, x.b * x.c));
  const double root_ad = std::sqrt(std::max(0.0, x.a * x.d));
  const double via_e = std::abs(x.e) - root_bc;
  const double via_f = std::abs(x.f) - root_ad;
  // Differences within a few ulps are rounding residue of a boundary state.
  const double residue =
      4.0 * std::numeric_limits<double>::epsilon() *
      std::max({std::abs(x.e), std::abs(x.f), root_bc, root_ad});
  if (via_e <= residue && via_f <= residue) {
    return {Measure::kConcurrence, 0.0, Branch::kNone};
  }
  if (via_e >= via_f) return {Measure::kConcurrence, 2.0 * via_e, Branch::kC1};
  return {Measure::kConcurrence, 2.0 * via_f, Branch::kC2};
}

QuantifierValue trace_entanglement(const XState& x) {
  QuantifierValue c = concurrence_x(x);
  c.measure = Measure::kTraceEntanglement;
  return c;
}

double wootters_concurrence(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4> eig(rho.matrix());
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure, "eigensolver did not converge");
  }
  // Round-off eigenvalues of a rank-deficient state would otherwise surface
  // as O(sqrt(eps)) noise in the square root.
  Eigen::Vector4d w = eig.eigenvalues();
  const double cutoff = 16.0 * std::numeric_limits<double>::epsilon() *
                        std::max(1.0, w.cwiseAbs().maxCoeff());
  for (int i = 0; i < 4; ++i) w(i) = w(i) <= cutoff ? 0.0 : std::sqrt(w(i));
  const Matrix4 sqrt_rho =
      eig.eigenvectors() * w.cast<Complex>().asDiagonal() *
      eig.eigenvectors().adjoint();

  const Matrix4 flip = kron(pauli(Axis::kY), pauli(Axis::kY));
  const Matrix4 sqrt_flipped = flip * sqrt_rho.conjugate() * flip;
  Eigen::JacobiSVD<Matrix4> svd(sqrt_rho * sqrt_flipped);
  Eigen::Vector4d s = svd.singularValues();
  if (!s.allFinite()) {
    throw Error(ErrorKind::kNumericalFailure, "singular values not finite");
  }
  std::sort(s.data(), s.data() + 4, std::greater<>());
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

}  // namespace qcorr
