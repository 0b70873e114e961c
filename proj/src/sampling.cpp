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

#include "qcorr/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qcorr {

namespace {

std::array<double, 4> uniform_simplex(Rng& rng) {
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.uniform());
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

Complex uniform_disk(Rng& rng, double radius) {
  const double rho = radius * std::sqrt(rng.uniform());
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(rho, phi);
}

}  // namespace

XState random_xstate(Rng& rng) {
  const auto w = uniform_simplex(rng);
  XState x;
  x.a = w[0];
  x.b = w[1];
  x.c = w[2];
  x.d = w[3];
  x.e = uniform_disk(rng, std::sqrt(x.a * x.d));
  x.f = uniform_disk(rng, std::sqrt(x.b * x.c));
  return x;
}

XState random_entangled_xstate(Rng& rng) {
  for (;;) {
    XState x = random_xstate(rng);
    if (std::abs(x.e) > std::sqrt(x.b * x.c) ||
        std::abs(x.f) > std::sqrt(x.a * x.d)) {
      return x;
    }
  }
}

CorrelationVector random_bd_state(Rng& rng) {
  static constexpr std::array<std::array<double, 3>, 4> kVertices = {
      {{1.0, 1.0, -1.0}, {-1.0, -1.0, -1.0}, {1.0, -1.0, 1.0}, {-1.0, 1.0, 1.0}}};
  const auto w = uniform_simplex(rng);
  std::array<double, 3> r{0.0, 0.0, 0.0};
  for (int v = 0; v < 4; ++v) {
    for (int j = 0; j < 3; ++j) r[j] += w[v] * kVertices[v][j];
  }
  return CorrelationVector(r);
}

CorrelationVector random_strict_entangled_bd(Rng& rng, double min_gap) {
  for (;;) {
    const CorrelationVector r = random_bd_state(rng);
    if (!(r.abs_sum() > 1.0) || !is_physical(r)) continue;
    const double a = std::abs(r.r1());
    const double b = std::abs(r.r2());
    const double c = std::abs(r.r3());
    if (std::abs(a - b) < min_gap || std::abs(b - c) < min_gap ||
        std::abs(a - c) < min_gap) {
      continue;
    }
    return r;
  }
}

std::vector<CorrelationVector> physical_grid(int points_per_axis) {
  std::vector<CorrelationVector> out;
  if (points_per_axis < 2) return out;
  // One correctly rounded division per coordinate, no accumulated steps.
  const double denom = points_per_axis - 1;
  auto coord = [&](int i) { return (2.0 * i - denom) / denom; };
  for (int i = 0; i < points_per_axis; ++i) {
    for (int j = 0; j < points_per_axis; ++j) {
      for (int k = 0; k < points_per_axis; ++k) {
        const CorrelationVector r(coord(i), coord(j), coord(k));
        if (is_physical(r)) out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace qcorr
