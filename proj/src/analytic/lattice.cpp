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

#include "abeljacobi/analytic/lattice.hpp"

#include "abeljacobi/errors.hpp"

namespace abeljacobi::analytic {

namespace {

Real cross(const Complex& a, const Complex& b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

// Subtracts floor(t + snap) so the result lies in [-snap, 1 - snap).
Real reduce_unit(const Real& t, const Real& snap) { return t - floor(t + snap); }

}  // namespace

LatticeCoordinates real_coordinates(const Complex& z, const Complex& b1, const Complex& b2) {
  const Real det = cross(b1, b2);
  const Real scale = abs(b1) * abs(b2);
  if (!(abs(det) > Real::tolerance(z.context()) * scale)) {
    throw DegenerateLattice("basis vectors are linearly dependent over R");
  }
  return {cross(z, b2) / det, cross(b1, z) / det};
}

PeriodLattice::PeriodLattice(Complex omega1, Complex omega2)
    : omega1_(std::move(omega1)), omega2_(std::move(omega2)) {
  if (omega1_.bits() != omega2_.bits()) throw PrecisionMismatch("periods differ in precision");
  const Real det = cross(omega1_, omega2_);
  if (!(abs(det) > Real::tolerance(context()) * abs(omega1_) * abs(omega2_))) {
    throw DegenerateLattice("periods are linearly dependent over R");
  }
  if (det.sign() < 0) omega2_ = -omega2_;
}

LatticeCoordinates PeriodLattice::coordinates(const Complex& z) const {
  return real_coordinates(z, omega1_, omega2_);
}

Complex PeriodLattice::point(const Real& u, const Real& v) const { return omega1_ * u + omega2_ * v; }

LatticeResidue PeriodLattice::reduce(const Complex& z) const {
  const Real snap = Real::pow2(-context().bits() / 2, context());
  LatticeCoordinates c = coordinates(z);
  Real u = reduce_unit(c.u, snap);
  Real v = reduce_unit(c.v, snap);
  Complex value = point(u, v);
  return {std::move(value), std::move(u), std::move(v)};
}

Complex PeriodLattice::smallest_representative(const Complex& z) const {
  const Complex base = reduce(z).value;
  Complex best = base;
  Real best_abs = abs(base);
  for (long i = -1; i <= 1; ++i) {
    for (long j = -1; j <= 1; ++j) {
      if (i == 0 && j == 0) continue;
      Complex candidate = base + omega1_ * i + omega2_ * j;
      Real a = abs(candidate);
      if (a < best_abs) {
        best_abs = std::move(a);
        best = std::move(candidate);
      }
    }
  }
  return best;
}

Real PeriodLattice::shortest_vector() const {
  return min(min(abs(omega1_), abs(omega2_)), min(abs(omega1_ + omega2_), abs(omega1_ - omega2_)));
}

Real PeriodLattice::tolerance() const {
  const Real one(1, context());
  return Real::tolerance(context()) * max(one, max(abs(omega1_), abs(omega2_)));
}

}  // namespace abeljacobi::analytic
