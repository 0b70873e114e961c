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

#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-12;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double CorrelationVector::abs_sum() const {
  return std::abs(values_[0]) + std::abs(values_[1]) + std::abs(values_[2]);
}

std::array<double, 4> bell_eigenvalues(const CorrelationVector& r) {
  return {(1.0 + r.r1() - r.r2() + r.r3()) / 4.0,
          (1.0 - r.r1() + r.r2() + r.r3()) / 4.0,
          (1.0 + r.r1() + r.r2() - r.r3()) / 4.0,
          (1.0 - r.r1() - r.r2() - r.r3()) / 4.0};
}

bool is_physical(const CorrelationVector& r) {
  for (double v : r.values()) {
    if (!std::isfinite(v)) return false;
  }
  const auto eig = bell_eigenvalues(r);
  return std::all_of(eig.begin(), eig.end(),
                     [](double l) { return l >= -kPsdTolerance; });
}

void require_physical(const CorrelationVector& r) {
  for (double v : r.values()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonPhysical, "non-finite correlation component");
    }
  }
  const auto eig = bell_eigenvalues(r);
  const double lowest = *std::min_element(eig.begin(), eig.end());
  if (lowest < -kPsdTolerance) {
    throw Error(ErrorKind::kNonPhysical, "eigenvalue " + format_double(lowest));
  }
}

DensityMatrix DensityMatrix::from_matrix(const Matrix4& m) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::kNonPhysical, "non-finite matrix entry");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    throw Error(ErrorKind::kNonPhysical,
                "matrix not Hermitian (deviation " + format_double(asym) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw Error(ErrorKind::kNonPhysical, "trace " + format_double(tr.real()));
  }
  const Matrix4 herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure, "eigensolver did not converge");
  }
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < -kPsdTolerance) {
    throw Error(ErrorKind::kNonPhysical, "eigenvalue " + format_double(lowest));
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix4::Identity() / 4.0);
}

bool is_physical(const XState& x) {
  const double pops[] = {x.a, x.b, x.c, x.d};
  for (double v : pops) {
    if (!std::isfinite(v) || v < -kPsdTolerance) return false;
  }
  if (std::abs(x.a + x.b + x.c + x.d - 1.0) > kTraceTolerance) return false;
  const double ad = std::max(0.0, x.a * x.d);
  const double bc = std::max(0.0, x.b * x.c);
  return std::abs(x.e) <= std::sqrt(ad) + kPsdTolerance &&
         std::abs(x.f) <= std::sqrt(bc) + kPsdTolerance;
}

void require_physical(const XState& x) {
  const double pops[] = {x.a, x.b, x.c, x.d};
  for (double v : pops) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonPhysical, "non-finite population");
    }
    if (v < -kPsdTolerance) {
      throw Error(ErrorKind::kNonPhysical, "population " + format_double(v));
    }
  }
  const double total = x.a + x.b + x.c + x.d;
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::kNonPhysical, "trace " + format_double(total));
  }
  if (std::abs(x.e) > std::sqrt(std::max(0.0, x.a * x.d)) + kPsdTolerance) {
    throw Error(ErrorKind::kNonPhysical,
                "|e| = " + format_double(std::abs(x.e)) + " exceeds sqrt(ad)");
  }
  if (std::abs(x.f) > std::sqrt(std::max(0.0, x.b * x.c)) + kPsdTolerance) {
    throw Error(ErrorKind::kNonPhysical,
                "|f| = " + format_double(std::abs(x.f)) + " exceeds sqrt(bc)");
  }
}

DensityMatrix to_density(const XState& x) {
  require_physical(x);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = x.a;
  m(1, 1) = x.b;
  m(2, 2) = x.c;
  m(3, 3) = x.d;
  m(0, 3) = x.e;
  m(3, 0) = std::conj(x.e);
  m(1, 2) = x.f;
  m(2, 1) = std::conj(x.f);
  return DensityMatrix::from_matrix(m);
}

const char* region_name(RegionLabel region) {
  switch (region) {
    case RegionLabel::kEntangled:
      return "Entangled";
    case RegionLabel::kSeparableNonClassical:
      return "SeparableNonClassical";
    case RegionLabel::kClassical:
      return "Classical";
  }
  return "Unknown";
}

const Matrix2& pauli(Axis axis) {
  static const Matrix2 kSigma1 = (Matrix2() << 0, 1, 1, 0).finished();
  static const Matrix2 kSigma2 =
      (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Matrix2 kSigma3 = (Matrix2() << 1, 0, 0, -1).finished();
  switch (axis) {
    case Axis::kX:
      return kSigma1;
    case Axis::kY:
      return kSigma2;
    case Axis::kZ:
      return kSigma3;
  }
  return kSigma3;
}

Matrix4 kron(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = lhs(i, j) * rhs;
    }
  }
  return out;
}

Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = m.block<2, 2>(2 * i, 2 * j).transpose();
    }
  }
  return out;
}

DensityMatrix bd_to_density(const CorrelationVector& r) {
  require_physical(r);
  Matrix4 m = Matrix4::Identity();
  for (Axis axis : kAxes) {
    m += r[axis] * kron(pauli(axis), pauli(axis));
  }
  return DensityMatrix::from_matrix(m / 4.0);
}

CorrelationVector density_to_bd(const DensityMatrix& rho) {
  std::array<double, 3> r{};
  for (Axis axis : kAxes) {
    const Matrix4 product = rho.matrix() * kron(pauli(axis), pauli(axis));
    r[index_of(axis)] = product.trace().real();
  }
  return CorrelationVector(r);
}

XState bd_to_xstate(const CorrelationVector& r) {
  require_physical(r);
  XState x;
  x.a = x.d = (1.0 + r.r3()) / 4.0;
  x.b = x.c = (1.0 - r.r3()) / 4.0;
  x.e = Complex((r.r1() - r.r2()) / 4.0, 0.0);
  x.f = Complex((r.r1() + r.r2()) / 4.0, 0.0);
  return x;
}

RegionLabel classify_region(const CorrelationVector& r) {
  require_physical(r);
  if (r.abs_sum() > 1.0) return RegionLabel::kEntangled;
  const int zeros = static_cast<int>(r.r1() == 0.0) +
                    static_cast<int>(r.r2() == 0.0) +
                    static_cast<int>(r.r3() == 0.0);
  return zeros >= 2 ? RegionLabel::kClassical
                    : RegionLabel::kSeparableNonClassical;
}

}  // namespace qcorr
