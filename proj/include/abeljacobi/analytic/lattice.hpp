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

#include <utility>
#include <vector>

#include "abeljacobi/curve/curve.hpp"
#include "abeljacobi/numerics/complex.hpp"

namespace abeljacobi::analytic {

using curve::CurvePoint;
using curve::WeierstrassCurve;
using numerics::Complex;
using numerics::Integer;
using numerics::PrecisionContext;
using numerics::Rational;
using numerics::Real;

struct LatticeCoordinates {
  Real u;
  Real v;
};

// Solves z = u*b1 + v*b2 over the reals. Throws DegenerateLattice when b1
// and b2 are R-dependent to within tolerance.
LatticeCoordinates real_coordinates(const Complex& z, const Complex& b1, const Complex& b2);

struct LatticeResidue {
  Complex value;
  Real u;
  Real v;
};

// A rank-2 lattice omega1*Z + omega2*Z in C with Im(omega2/omega1) > 0.
class PeriodLattice {
 public:
  // Swaps orientation if needed. Throws DegenerateLattice for R-dependent
  // generators.
  PeriodLattice(Complex omega1, Complex omega2);

  const Complex& omega1() const { return omega1_; }
  const Complex& omega2() const { return omega2_; }
  PrecisionContext context() const { return omega1_.context(); }

  // Roots of the 2-division cubic, when the lattice came from periods().
  const std::vector<Complex>& branch_points() const { return branch_points_; }
  void set_branch_points(std::vector<Complex> roots) { branch_points_ = std::move(roots); }

  LatticeCoordinates coordinates(const Complex& z) const;
  Complex point(const Real& u, const Real& v) const;

  // Canonical representative: coordinates reduced into [0, 1), where
  // values within 2^(-bits/2) below an integer snap up to it.
  LatticeResidue reduce(const Complex& z) const;
  // Translate of the canonical representative by {-1,0,1}omega1 +
  // {-1,0,1}omega2 of least modulus.
  Complex smallest_representative(const Complex& z) const;
  // |z|_Lambda: distance from z to the nearest lattice point.
  Real distance(const Complex& z) const { return abs(smallest_representative(z)); }
  // min(|omega1|, |omega2|, |omega1 + omega2|, |omega1 - omega2|).
  Real shortest_vector() const;
  // Default direct-accuracy tolerance: tol * max(1, |omega1|, |omega2|).
  Real tolerance() const;

 private:
  Complex omega1_;
  Complex omega2_;
  std::vector<Complex> branch_points_;
};

// Period lattice of dx/(2y + a1 x + a3), by the complex AGM. Normalized so
// omega1 is the positive real generator of the real periods, Im omega2 > 0
// and Re omega2 is 0 or -omega1/2.
PeriodLattice periods(const WeierstrassCurve& E, PrecisionContext ctx);

// Arithmetic-geometric mean with the branch |a_n - b_n| <= |a_n + b_n|.
Complex agm(Complex a, Complex b);

}  // namespace abeljacobi::analytic
