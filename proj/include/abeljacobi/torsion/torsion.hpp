// Copyright 2026 The abeljacobi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abeljacobi/analytic/inversion.hpp"
#include "abeljacobi/numerics/polynomial.hpp"

namespace abeljacobi::torsion {

using analytic::PeriodLattice;
using curve::CurvePoint;
using curve::WeierstrassCurve;
using numerics::Complex;
using numerics::ComplexPolynomial;
using numerics::Integer;
using numerics::PrecisionContext;
using numerics::RationalPolynomial;
using numerics::Real;

inline constexpr int kMaxPrecisionRetries = 3;

// One (i, j) per class of (J[ell] \ {0}) / +-1, indexing (i*omega1 + j*omega2)/ell.
struct TorsionOrbitSet {
  long ell;
  std::vector<std::pair<long, long>> reps;
};

// Keeps (i, j) when it is lexicographically smaller than its negative
// (ell - i mod ell, ell - j mod ell). Requires an odd prime ell.
TorsionOrbitSet enumerate_torsion_reps(long ell);

// The torsion point with log = (i*omega1 + j*omega2)/ell: a linear-algebra
// seed refined by the secant method.
CurvePoint invert_torsion_point(const WeierstrassCurve& E, const PeriodLattice& L, long ell, long i,
                                long j);

// x-coordinates of the inverted points, in the order of orbits.reps. The
// parallel version spreads the inversions over `threads` OpenMP threads
// (0 = runtime default); its output is identical to the serial reference.
std::vector<Complex> torsion_x_values(const WeierstrassCurve& E, const PeriodLattice& L,
                                      const TorsionOrbitSet& orbits, int threads = 0);
std::vector<Complex> torsion_x_values_serial(const WeierstrassCurve& E, const PeriodLattice& L,
                                             const TorsionOrbitSet& orbits);

// Exact rational coefficients of an approximately rational polynomial.
// Each imaginary part must be within 2^(-bits/2) * max |coefficient|
// (ImaginaryResidue otherwise); real parts are recovered as integers over
// ell when ell*c is that close to an integer, else by rational_reconstruct
// with the given height bound (ReconstructFailed when none qualifies).
RationalPolynomial recover_exact(const ComplexPolynomial& approx, long ell, const Integer& height_bound);

struct TorsionOptions {
  // Fixed height bound; default 2^(bits/4) at each attempted precision.
  std::optional<Integer> height_bound;
  int threads = 0;
  bool parallel = true;
};

struct AnalyticTorsionResult {
  RationalPolynomial poly;
  std::vector<Complex> x_values;
  // Precision of the successful attempt.
  int bits;
};

// H(T) = prod (T - x(P_a)) over the orbit representatives, recovered
// exactly. On ReconstructFailed the precision is doubled, at most three
// times.
AnalyticTorsionResult torsion_poly_analytic(const WeierstrassCurve& E, long ell, PrecisionContext ctx,
                                            const TorsionOptions& options = {});

// Exact equality with psi_ell / ell.
bool verify_against_algebraic(const WeierstrassCurve& E, long ell, const RationalPolynomial& analytic);

}  // namespace abeljacobi::torsion
