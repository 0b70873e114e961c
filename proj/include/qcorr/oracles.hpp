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

// Brute-force minimizers over the classical and separable sets. These are the
// independent checks for the closed forms in quantifiers.hpp and never call
// into them.

#pragma once

#include <cstddef>
#include <functional>
#include <variant>

#include "qcorr/states.hpp"

namespace qcorr {

enum class Norm { kHilbertSchmidt, kTrace };

const char* norm_name(Norm norm);

/// Coherences of a candidate X state sharing the reference diagonal.
struct SeparableXCandidate {
  Complex e_prime;
  Complex f_prime;
};

struct OracleResult {
  std::variant<CorrelationVector, SeparableXCandidate> minimizer;
  double distance = 0.0;
  std::size_t evaluations = 0;
};

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix4& delta);

/// ||delta||_2^2 = Tr(delta^dag delta).
double hs_norm_squared(const Matrix4& delta);

/// (dr . Sigma) / 4, the operator difference of two Bell-diagonal states.
Matrix4 bd_difference(const CorrelationVector& lhs,
                      const CorrelationVector& rhs);

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than tol. Counts evaluations.
double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               std::size_t* evaluations = nullptr);

/// Distance from r to the classical states (t,0,0), (0,t,0), (0,0,t),
/// t in [-1, 1], by a 1e-3 grid on t followed by golden-section refinement
/// to 1e-8. Both norms act on the operator difference; the HS value is
/// rescaled by 4 to correlation-vector units.
OracleResult closest_classical(const CorrelationVector& r, Norm norm);

/// Squared distance from (|r1|,|r2|,|r3|) to the octahedron by Euclidean
/// projection onto the l1 ball. The minimizer keeps the signs of r.
OracleResult closest_separable_hs(const CorrelationVector& r);

/// Trace norm of rho_X - sigma_X where sigma_X shares the diagonal of x.
double xfamily_trace_distance(const XState& x,
                              const SeparableXCandidate& candidate);

/// 200x200 grid over (|e'|, |f'|) in [0, min(sqrt(ad), sqrt(bc))]^2 with
/// phases aligned to e and f, then local refinement down to 1e-6.
OracleResult closest_separable_trace_xfamily(const XState& x);

/// Clamps whichever coherence exceeds min(sqrt(ad), sqrt(bc)) onto that bound
/// and keeps the other one.
SeparableXCandidate analytic_separable_candidate(const XState& x);

/// True when |e'|, |f'| <= min(sqrt(ad), sqrt(bc)) + tol.
bool is_feasible(const XState& x, const SeparableXCandidate& candidate,
                 double tol = 1e-12);

}  // namespace qcorr
