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

#include <string>

#include "abeljacobi/analytic/lattice.hpp"
#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/roots.hpp"

namespace abeljacobi::analytic {

namespace {

constexpr int kExtraBits = 32;
constexpr int kMaxAgmSteps = 200;

// Nearest integer to a coordinate that must be integral up to noise.
Integer integral(const Real& t) {
  const Integer n = t.round_to_integer();
  if (abs(t - Real(n, t.context())) > Real::from_double(1e-6, t.context())) {
    throw DegenerateLattice("conjugation does not preserve the computed lattice");
  }
  return n;
}

// Rewrites a basis of a lattice stable under complex conjugation so that
// omega1 > 0 generates the real periods, Im omega2 > 0 and
// Re omega2 is in {0, -omega1/2}.
std::pair<Complex, Complex> normalize_real_basis(const Complex& w1, const Complex& w2) {
  const PrecisionContext ctx = w1.context();
  const LatticeCoordinates c1 = real_coordinates(numerics::conj(w1), w1, w2);
  const LatticeCoordinates c2 = real_coordinates(numerics::conj(w2), w1, w2);
  // Columns of the integer matrix of conjugation, minus the identity.
  const Integer a00 = integral(c1.u) - 1, a01 = integral(c2.u);
  const Integer a10 = integral(c1.v), a11 = integral(c2.v) - 1;
  Integer m, n;
  if (a00 != 0 || a01 != 0) {
    m = a01;
    n = -a00;
  } else {
    m = a11;
    n = -a10;
  }
  if (m == 0 && n == 0) throw DegenerateLattice("lattice has no real periods");
  const Integer g = gcd(m, n);
  m /= g;
  n /= g;

  Complex omega1 = w1 * Real(m, ctx) + w2 * Real(n, ctx);
  omega1.imag() = Real(ctx);
  Integer s, t, unit;
  mpz_gcdext(unit.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  // m*s + n*t = 1, so (m, n), (-t, s) is a unimodular change of basis.
  Complex omega2 = w1 * Real(Integer(-t), ctx) + w2 * Real(s, ctx);
  if (omega1.real().sign() < 0) omega1 = -omega1;
  if (omega2.imag().sign() < 0) omega2 = -omega2;

  const Real snap = Real::pow2(-ctx.bits() / 2, ctx);
  const Real ratio = omega2.real() / omega1.real();
  const Integer shift = floor(ratio + Real::from_double(0.5, ctx) + snap).floor_to_integer();
  omega2 -= omega1 * Real(shift, ctx);
  const Real r = omega2.real() / omega1.real();
  if (abs(r) <= snap) {
    omega2.real() = Real(ctx);
  } else if (abs(r + Real::from_double(0.5, ctx)) <= snap) {
    omega2.real() = -ldexp(omega1.real(), -1);
  }
  return {std::move(omega1), std::move(omega2)};
}

}  // namespace

Complex agm(Complex a, Complex b) {
  const Real eps = Real::pow2(-a.bits() + 4, a.context());
  for (int step = 0; step < kMaxAgmSteps; ++step) {
    Complex mean = ldexp(a + b, -1);
    Complex geo = numerics::sqrt(a * b);
    if (abs(mean - geo) > abs(mean + geo)) geo = -geo;
    if (abs(mean - geo) <= eps * abs(mean)) return mean;
    a = std::move(mean);
    b = std::move(geo);
  }
  throw NonConvergence("AGM did not converge in " + std::to_string(kMaxAgmSteps) + " steps");
}

PeriodLattice periods(const WeierstrassCurve& E, PrecisionContext ctx) {
  const PrecisionContext work(ctx.bits() + kExtraBits);
  std::vector<Complex> cubic;
  const numerics::RationalPolynomial F = E.two_division_cubic();
  for (const auto& q : F.coeffs()) cubic.emplace_back(q, work);
  const std::vector<Complex> e = numerics::poly_roots(numerics::ComplexPolynomial(std::move(cubic)));

  const Complex a = numerics::sqrt(e[0] - e[2]);
  Complex b = numerics::sqrt(e[0] - e[1]);
  Complex c = numerics::sqrt(e[1] - e[2]);
  if (abs(a - b) > abs(a + b)) b = -b;
  if (abs(a - c) > abs(a + c)) c = -c;
  const Real pi = Real::pi(work);
  const Complex w1 = Complex(pi) / agm(a, b);
  const Complex w2 = Complex(Real(work), pi) / agm(a, c);

  auto [omega1, omega2] = normalize_real_basis(w1, w2);
  PeriodLattice lattice(omega1.rounded(ctx), omega2.rounded(ctx));
  std::vector<Complex> roots;
  for (const Complex& r : e) roots.push_back(r.rounded(ctx));
  lattice.set_branch_points(std::move(roots));
  return lattice;
}

}  // namespace abeljacobi::analytic
