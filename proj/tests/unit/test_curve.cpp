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

#include <doctest.h>

#include <random>
#include <vector>

#include "abeljacobi/curve/curve.hpp"
#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/roots.hpp"
#include "printers.hpp"

using namespace abeljacobi;
using namespace abeljacobi::curve;
using numerics::ComplexPolynomial;
using numerics::Real;

namespace {

const WeierstrassCurve& x11() {
  static const WeierstrassCurve E = WeierstrassCurve::parse("0,-1,-1,0,0");
  return E;
}

// Conductor 37 curve of rank one, generated by (0,0).
const WeierstrassCurve& rank_one() {
  static const WeierstrassCurve E = WeierstrassCurve::parse("0,0,1,-1,0");
  return E;
}

CurvePoint pt(long x, long y) { return CurvePoint(Rational(x), Rational(y)); }

ComplexPolynomial to_complex(const RationalPolynomial& p, PrecisionContext ctx) {
  std::vector<Complex> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q, ctx);
  return ComplexPolynomial(std::move(c));
}

// psi_n(x) as an exact value, given the stored pair convention.
Rational psi_squared(const WeierstrassCurve& E, long n, const Rational& x) {
  const DivisionPolynomial d = division_polynomial(E, n);
  const Rational v = d.poly(x);
  const Rational sq = v * v;
  return d.even ? Rational(sq * E.two_division_cubic()(x)) : sq;
}

Rational psi_product(const WeierstrassCurve& E, long m, long n, const Rational& x) {
  const DivisionPolynomial a = division_polynomial(E, m);
  const DivisionPolynomial b = division_polynomial(E, n);
  Rational v = a.poly(x) * b.poly(x);
  if (a.even && b.even) v *= E.two_division_cubic()(x);
  return v;
}

CurvePoint random_complex_point(const WeierstrassCurve& E, std::mt19937_64& rng, PrecisionContext ctx) {
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const Complex x(Real::from_double(coord(rng), ctx), Real::from_double(coord(rng), ctx));
  return CurvePoint(x, ordinates_from_x(E, x)[rng() % 2]);
}

Real point_gap(const CurvePoint& P, const CurvePoint& Q) {
  const auto& a = P.complex();
  const auto& b = Q.complex();
  return max(abs(a.x - b.x), abs(a.y - b.y));
}

}  // namespace

TEST_CASE("curve parsing and invariants") {
  const auto& E = x11();
  CHECK(E.b2() == -4);
  CHECK(E.b4() == 0);
  CHECK(E.b6() == 1);
  CHECK(E.b8() == -1);
  CHECK(E.discriminant() == -11);
  CHECK_THROWS_AS(WeierstrassCurve::parse("0,0,0,0,0"), SingularCurve);
  CHECK_THROWS_AS(WeierstrassCurve::parse("0,0,0,0"), ParseError);
  CHECK_THROWS_AS(WeierstrassCurve::parse("0,x,0,0,1"), ParseError);
  CHECK(WeierstrassCurve::parse("1/2,0,0,-1,3/4").a1() == Rational(1, 2));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int k = 0; k < 200; ++k) {
    try {
      const WeierstrassCurve F(Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng)),
                               Rational(c(rng), 7));
      CHECK(4 * F.b8() == F.b2() * F.b6() - F.b4() * F.b4());
    } catch (const SingularCurve&) {
    }
  }
}

TEST_CASE("is_on_curve") {
  CHECK(is_on_curve(x11(), pt(0, 0)));
  CHECK(is_on_curve(x11(), CurvePoint::infinity()));
  CHECK_FALSE(is_on_curve(x11(), pt(2, 2)));
}

TEST_CASE("chord-tangent fixtures") {
  const auto& E = x11();
  const CurvePoint P = pt(0, 0);
  CHECK(add(E, P, P) == pt(1, 1));
  CHECK(add(E, P, pt(1, 1)) == pt(1, 0));
  CHECK(add(E, P, CurvePoint::infinity()) == P);
  CHECK(neg(E, P) == pt(0, 1));
  CHECK(neg(E, CurvePoint::infinity()).is_infinity());
  CHECK(add(E, pt(1, 1), neg(E, pt(1, 1))).is_infinity());
  CHECK(mul_scalar(E, P, 5).is_infinity());
  CHECK(mul_scalar(E, P, 3) == pt(1, 0));
  CHECK(mul_scalar(E, P, -2) == mul_scalar(E, P, 3));
  CHECK(mul_scalar(E, P, 0).is_infinity());
  const PrecisionContext ctx(64);
  CHECK_THROWS_AS(add(E, P, P.to_complex(ctx)), MixedScalarKinds);
}

TEST_CASE("multiples of the rank-one generator") {
  // Reference multiples of (0,0) on y^2 + y = x^3 - x.
  const auto& E = rank_one();
  const CurvePoint P = pt(0, 0);
  CHECK(mul_scalar(E, P, 2) == pt(1, 0));
  CHECK(mul_scalar(E, P, 3) == pt(-1, -1));
  CHECK(mul_scalar(E, P, 4) == pt(2, -3));
  CHECK(mul_scalar(E, P, 5) == CurvePoint(Rational(1, 4), Rational(-5, 8)));
  CHECK(mul_scalar(E, P, 6) == pt(6, 14));
}

TEST_CASE("exact group law is associative and commutative") {
  const auto& E = rank_one();
  const CurvePoint G = pt(0, 0);
  std::vector<CurvePoint> multiples;
  for (long n = -6; n <= 6; ++n) multiples.push_back(mul_scalar(E, G, n));
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> pick(0, multiples.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const auto& P = multiples[pick(rng)];
    const auto& Q = multiples[pick(rng)];
    const auto& R = multiples[pick(rng)];
    CHECK(add(E, P, Q) == add(E, Q, P));
    CHECK(add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R)));
  }
}

TEST_CASE("complex group law is associative and commutative") {
  const auto& E = x11();
  const PrecisionContext ctx(256);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    const CurvePoint P = random_complex_point(E, rng, ctx);
    const CurvePoint Q = random_complex_point(E, rng, ctx);
    const CurvePoint R = random_complex_point(E, rng, ctx);
    const CurvePoint left = add(E, add(E, P, Q), R);
    const CurvePoint right = add(E, P, add(E, Q, R));
    REQUIRE(left.is_complex());
    REQUIRE(right.is_complex());
    const Real scale = max(Real(1, ctx), abs(left.complex().y));
    CHECK(point_gap(left, right) <= Real::tolerance(ctx) * 1000L * scale);
    CHECK(point_gap(add(E, P, Q), add(E, Q, P)) <= Real::tolerance(ctx) * 10L * scale);
    CHECK(is_on_curve(E, left));
  }
}

TEST_CASE("ordinates_from_x") {
  const auto& E = x11();
  CHECK(ordinates_from_x(E, Rational(0)) == std::vector<Rational>{1, 0});
  CHECK(ordinates_from_x(E, Rational(1)) == std::vector<Rational>{1, 0});
  CHECK(ordinates_from_x(E, Rational(2)).empty());
  const PrecisionContext ctx(128);
  const Complex x = Complex::parse("6.796539142094915911068237206-7.525908029899464321854796862i", ctx);
  const Complex y = Complex::parse("-8.056577776742775028742861296+30.05694612451787404370259256i", ctx);
  const auto ys = ordinates_from_x(E, x);
  CHECK(min(abs(ys[0] - y), abs(ys[1] - y)) < Real::parse("1e-24", ctx));
}

TEST_CASE("division polynomial fixtures") {
  const auto& E = x11();
  CHECK(division_polynomial(E, 3).poly ==
        RationalPolynomial({Rational(-1), Rational(3), Rational(0), Rational(-4), Rational(3)}));
  CHECK(division_polynomial(E, 5).poly(Rational(0)) == 0);
  CHECK(division_polynomial(E, 11).poly(Rational(0)) == 1);
  CHECK(torsion_annihilator_exact(E, 3) == RationalPolynomial({Rational(-1, 3), Rational(1), Rational(0),
                                                               Rational(-4, 3), Rational(1)}));
  for (long ell : {3L, 5L, 7L, 11L, 13L}) {
    const RationalPolynomial H = torsion_annihilator_exact(E, ell);
    CHECK(H.degree() == (ell * ell - 1) / 2);
    CHECK(H.leading() == 1);
  }
  CHECK_THROWS_AS(torsion_annihilator_exact(E, 9), InvalidArgument);
}

TEST_CASE("division polynomials agree with the group law") {
  // x(nP) = x - psi_{n-1} psi_{n+1} / psi_n^2 on a point of infinite order.
  const auto& E = rank_one();
  const CurvePoint G = pt(0, 0);
  for (long m = 1; m <= 3; ++m) {
    const CurvePoint P = mul_scalar(E, G, m);
    const Rational x = P.exact().x;
    for (long n = 2; n <= 8; ++n) {
      const Rational predicted = x - psi_product(E, n - 1, n + 1, x) / psi_squared(E, n, x);
      CHECK(mul_scalar(E, P, n).exact().x == predicted);
    }
  }
}

TEST_CASE("roots of odd division polynomials are torsion x-coordinates") {
  const auto& E = x11();
  const PrecisionContext ctx(256);
  for (long k : {3L, 5L, 7L, 9L, 11L, 13L}) {
    const DivisionPolynomial d = division_polynomial(E, k);
    REQUIRE_FALSE(d.even);
    CHECK(d.poly.degree() == (k * k - 1) / 2);
    CHECK(d.poly.leading() == k);
    const auto roots = numerics::poly_roots(to_complex(d.poly, ctx));
    CHECK(roots.size() == static_cast<std::size_t>((k * k - 1) / 2));
    const ComplexPolynomial p = to_complex(d.poly, ctx);
    const ComplexPolynomial dp = p.derivative();
    for (const auto& x : roots) {
      // (k-1)P must coincide with -P up to 10^3 tol, scaled by the root's
      // condition number sum |c_j| |x|^j / |x p'(x)|.
      Real magnitude(ctx);
      for (std::size_t j = p.coeffs().size(); j-- > 0;) magnitude = magnitude * abs(x) + abs(p.coeffs()[j]);
      const Real condition = max(Real(1, ctx), magnitude / (max(Real(1, ctx), abs(x)) * abs(dp(x))));
      const CurvePoint P(x, ordinates_from_x(E, x)[0]);
      const CurvePoint Q = mul_scalar(E, P, k - 1);
      REQUIRE(Q.is_complex());
      const Real scale = max(Real(1, ctx), max(abs(x), abs(P.complex().y)));
      INFO("k = ", k);
      CHECK(point_gap(Q, neg(E, P)) / (scale * condition) <= Real::tolerance(ctx) * 1000L);
    }
  }
}
