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

#include "abeljacobi/analytic/elliptic_log.hpp"

#include <array>
#include <optional>
#include <string>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/roots.hpp"

namespace abeljacobi::analytic {

namespace {

constexpr int kMaxDuplications = 200;

std::vector<Complex> branch_points_of(const WeierstrassCurve& E, const PeriodLattice& L) {
  if (!L.branch_points().empty()) return L.branch_points();
  std::vector<Complex> cubic;
  const numerics::RationalPolynomial F = E.two_division_cubic();
  for (const auto& q : F.coeffs()) cubic.emplace_back(q, L.context());
  return numerics::poly_roots(numerics::ComplexPolynomial(std::move(cubic)));
}

// pi - |arg w|, or pi for w == 0: the angular clearance from the cut.
Real clearance(const Complex& w) {
  const Real pi = Real::pi(w.context());
  if (w.is_zero()) return pi;
  return pi - abs(atan2(w.imag(), w.real()));
}

}  // namespace

Complex carlson_rf(Complex x, Complex y, Complex z) {
  const PrecisionContext ctx = x.context();
  const Real stop = Real::pow2(-(ctx.bits() + 4) / 8, ctx);
  Complex mean = (x + y + z) / 3L;
  for (int step = 0; step < kMaxDuplications; ++step) {
    const Complex sx = numerics::sqrt(x);
    const Complex sy = numerics::sqrt(y);
    const Complex sz = numerics::sqrt(z);
    const Complex lambda = sx * sy + sx * sz + sy * sz;
    x = ldexp(x + lambda, -2);
    y = ldexp(y + lambda, -2);
    z = ldexp(z + lambda, -2);
    mean = ldexp(mean + lambda, -2);
    const Complex X = (mean - x) / mean;
    const Complex Y = (mean - y) / mean;
    if (max(abs(X), abs(Y)) < stop && abs(X + Y) < stop) {
      const Complex Z = -(X + Y);
      const Complex E2 = X * Y - Z * Z;
      const Complex E3 = X * Y * Z;
      Complex s = Complex(1, ctx) - E2 / 10L + E3 / 14L + E2 * E2 / 24L - E2 * E3 * 3L / 44L -
                  E2 * E2 * E2 * 5L / 208L + E3 * E3 * 3L / 104L + E2 * E2 * E3 / 16L;
      return s / numerics::sqrt(mean);
    }
  }
  throw NonConvergence("R_F duplication did not converge in " + std::to_string(kMaxDuplications) +
                       " steps");
}

Complex elliptic_log_value(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P) {
  const PrecisionContext ctx = L.context();
  if (P.is_infinity()) return Complex(ctx);
  const CurvePoint Pc = P.to_complex(ctx);
  const Complex& x = Pc.complex().x;
  const Complex& y = Pc.complex().y;
  const std::vector<Complex> e = branch_points_of(E, L);
  const Complex Y = 2 * y + Complex(E.a1(), ctx) * x + Complex(E.a3(), ctx);

  // Integrate along the ray x + u*t, t >= 0, for a direction u keeping all
  // (x - e_i)/u well away from the negative real axis.
  const std::array<Complex, 4> quarter{Complex(1, 0, ctx), Complex(0, 1, ctx), Complex(-1, 0, ctx),
                                       Complex(0, -1, ctx)};
  std::optional<Complex> direction;
  for (const Complex& u : quarter) {
    bool ok = true;
    for (const Complex& ei : e) ok = ok && numerics::away_from_negative_axis((x - ei) / u);
    if (ok) {
      direction = u;
      break;
    }
  }
  if (!direction) {
    Real best(-1, ctx);
    const Real step = Real::pi(ctx) / 8L;
    for (long k = 0; k < 16; ++k) {
      Complex u = Complex::polar(Real(1, ctx), step * k);
      Real worst = Real::pi(ctx);
      for (const Complex& ei : e) worst = min(worst, clearance((x - ei) / u));
      if (worst > best) {
        best = worst;
        direction = u;
      }
    }
  }
  const Complex& u = *direction;
  const Complex w0 = (x - e[0]) / u;
  const Complex w1 = (x - e[1]) / u;
  const Complex w2 = (x - e[2]) / u;
  const Complex su = numerics::sqrt(u);
  const Complex z = carlson_rf(w0, w1, w2) / su;
  const Complex Y0 = 2 * su * su * su * numerics::sqrt(w0) * numerics::sqrt(w1) * numerics::sqrt(w2);
  return abs(Y - Y0) <= abs(Y + Y0) ? -z : z;
}

LatticeResidue elliptic_log(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P) {
  return L.reduce(elliptic_log_value(E, L, P));
}

}  // namespace abeljacobi::analytic
