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

// Two-qubit Bell-diagonal and X states.
//
// Basis ordering is |00>, |01>, |10>, |11> and the Pauli matrices follow the
// standard convention, so a Bell-diagonal state (I + sum_j r_j s_j (x) s_j)/4
// has populations a = d = (1 + r3)/4, b = c = (1 - r3)/4 and coherences
// <00|rho|11> = (r1 - r2)/4, <01|rho|10> = (r1 + r2)/4.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Negative eigenvalues down to -kPsdTolerance count as zero.
inline constexpr double kPsdTolerance = 1e-12;

/// Correlation axes, zero-based: kX is r1, kY is r2, kZ is r3.
enum class Axis : int { kX = 0, kY = 1, kZ = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::kX, Axis::kY, Axis::kZ};

inline constexpr int index_of(Axis axis) { return static_cast<int>(axis); }

/// The triple r_j = Tr(rho s_j (x) s_j) of a Bell-diagonal state.
class CorrelationVector {
 public:
  constexpr CorrelationVector() = default;
  constexpr CorrelationVector(double r1, double r2, double r3)
      : values_{r1, r2, r3} {}
  explicit constexpr CorrelationVector(const std::array<double, 3>& values)
      : values_(values) {}

  constexpr double r1() const { return values_[0]; }
  constexpr double r2() const { return values_[1]; }
  constexpr double r3() const { return values_[2]; }
  constexpr double operator[](std::size_t i) const { return values_[i]; }
  constexpr double operator[](Axis axis) const {
    return values_[static_cast<std::size_t>(axis)];
  }
  constexpr const std::array<double, 3>& values() const { return values_; }

  /// |r1| + |r2| + |r3|; the separable octahedron is abs_sum() <= 1.
  double abs_sum() const;

  friend constexpr bool operator==(const CorrelationVector&,
                                   const CorrelationVector&) = default;

 private:
  std::array<double, 3> values_{0.0, 0.0, 0.0};
};

/// Eigenvalues of the Bell-diagonal state in the order
/// Phi+, Phi-, Psi+, Psi-.
std::array<double, 4> bell_eigenvalues(const CorrelationVector& r);

/// Throws Error(kNonPhysical) when r lies outside the tetrahedron.
void require_physical(const CorrelationVector& r);
bool is_physical(const CorrelationVector& r);

/// A validated two-qubit density matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity (all to 1e-12).
  static DensityMatrix from_matrix(const Matrix4& m);
  static DensityMatrix maximally_mixed();

  const Matrix4& matrix() const { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Two-qubit X state: populations on the diagonal, coherences e = <00|.|11>
/// and f = <01|.|10> on the anti-diagonal.
struct XState {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  Complex e{0.0, 0.0};
  Complex f{0.0, 0.0};
};

void require_physical(const XState& x);
bool is_physical(const XState& x);

/// Embeds the X state as a 4x4 matrix; validates physicality first.
DensityMatrix to_density(const XState& x);

enum class RegionLabel { kEntangled, kSeparableNonClassical, kClassical };

const char* region_name(RegionLabel region);

DensityMatrix bd_to_density(const CorrelationVector& r);
CorrelationVector density_to_bd(const DensityMatrix& rho);
XState bd_to_xstate(const CorrelationVector& r);
RegionLabel classify_region(const CorrelationVector& r);

/// Pauli matrix for the given axis.
const Matrix2& pauli(Axis axis);

Matrix4 kron(const Matrix2& lhs, const Matrix2& rhs);

/// Transpose on the second qubit.
Matrix4 partial_transpose(const Matrix4& m);

}  // namespace qcorr
