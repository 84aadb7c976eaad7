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

#include "abeljacobi/curve/curve.hpp"

#include <string>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/fast_exp.hpp"

namespace abeljacobi::curve {

using numerics::Real;

WeierstrassCurve::WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  for (Rational* a : {&a1_, &a2_, &a3_, &a4_, &a6_}) a->canonicalize();
  b2_ = a1_ * a1_ + 4 * a2_;
  b4_ = 2 * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + 4 * a6_;
  b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
  if (disc_ == 0) throw SingularCurve("curve [" + to_string() + "] has zero discriminant");
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text) {
  std::vector<Rational> a;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    a.push_back(numerics::parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (a.size() != 5) {
    throw ParseError("curve needs five coefficients a1,a2,a3,a4,a6: '" + std::string(text) + "'");
  }
  return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]);
}

RationalPolynomial WeierstrassCurve::two_division_cubic() const {
  return RationalPolynomial({b6_, 2 * b4_, b2_, Rational(4)});
}

std::string WeierstrassCurve::to_string() const {
  using numerics::to_string;
  return to_string(a1_) + "," + to_string(a2_) + "," + to_string(a3_) + "," + to_string(a4_) + "," +
         to_string(a6_);
}

CurvePoint CurvePoint::to_complex(PrecisionContext ctx) const {
  if (is_infinity()) return *this;
  if (is_complex()) {
    if (complex().x.bits() != ctx.bits()) throw PrecisionMismatch("point has a different precision");
    return *this;
  }
  return CurvePoint(Complex(exact().x, ctx), Complex(exact().y, ctx));
}

namespace {

// The curve coefficients lifted to complex numbers at one precision.
struct Lifted {
  Complex a1, a2, a3, a4, a6;
  explicit Lifted(const WeierstrassCurve& E, PrecisionContext ctx)
      : a1(E.a1(), ctx), a2(E.a2(), ctx), a3(E.a3(), ctx), a4(E.a4(), ctx), a6(E.a6(), ctx) {}
};

template <class T>
T equation_residual(const T& x, const T& y, const T& a1, const T& a2, const T& a3, const T& a4,
                    const T& a6) {
  return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
}

template <class T>
CurvePoint from_lambda(const T& lambda, const T& nu, const T& x1, const T& x2, const T& a1, const T& a2,
                       const T& a3) {
  T x3 = lambda * lambda + a1 * lambda - a2 - x1 - x2;
  T y3 = -(lambda + a1) * x3 - nu - a3;
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint add_exact(const WeierstrassCurve& E, const ExactAffine& P, const ExactAffine& Q) {
  Rational lambda;
  if (P.x == Q.x) {
    const Rational denom = 2 * P.y + E.a1() * P.x + E.a3();
    if (P.y != Q.y || denom == 0) return CurvePoint::infinity();
    lambda = (3 * P.x * P.x + 2 * E.a2() * P.x + E.a4() - E.a1() * P.y) / denom;
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  const Rational nu = P.y - lambda * P.x;
  return from_lambda(lambda, nu, P.x, Q.x, E.a1(), E.a2(), E.a3());
}

CurvePoint add_complex(const WeierstrassCurve& E, const ComplexAffine& P, const ComplexAffine& Q) {
  const PrecisionContext ctx = P.x.context();
  if (Q.x.bits() != ctx.bits()) throw PrecisionMismatch("points have different precision");
  const Lifted c(E, ctx);
  const Real tol = Real::tolerance(ctx);
  const Real one(1, ctx);
  Complex lambda(ctx);
  const Complex dx = Q.x - P.x;
  if (abs(dx) <= tol * max(one, abs(P.x))) {
    const Complex denom = 2 * P.y + c.a1 * P.x + c.a3;
    const Real scale = max(one, abs(P.y));
    if (abs(Q.y - P.y) > tol * scale || abs(denom) <= tol * scale) return CurvePoint::infinity();
    lambda = (3 * P.x * P.x + 2 * c.a2 * P.x + c.a4 - c.a1 * P.y) / denom;
  } else {
    lambda = (Q.y - P.y) / dx;
  }
  const Complex nu = P.y - lambda * P.x;
  CurvePoint sum = from_lambda(lambda, nu, P.x, Q.x, c.a1, c.a2, c.a3);
  // Errors transverse to the curve are amplified by repeated doubling, so
  // the chord-tangent ordinate is replaced by the nearest exact root.
  const Complex& x3 = sum.complex().x;
  const Complex& y3 = sum.complex().y;
  std::vector<Complex> ys = ordinates_from_x(E, x3);
  const bool second = abs(ys[1] - y3) < abs(ys[0] - y3);
  return CurvePoint(x3, std::move(ys[second ? 1 : 0]));
}

}  // namespace

bool is_on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
  if (P.is_infinity()) return true;
  if (P.is_exact()) {
    const auto& p = P.exact();
    return equation_residual(p.x, p.y, E.a1(), E.a2(), E.a3(), E.a4(), E.a6()) == 0;
  }
  const auto& p = P.complex();
  const PrecisionContext ctx = p.x.context();
  const Lifted c(E, ctx);
  const Real r = abs(equation_residual(p.x, p.y, c.a1, c.a2, c.a3, c.a4, c.a6));
  const Real ax = abs(p.x);
  const Real ay = abs(p.y);
  const Real scale = max(Real(1, ctx), max(ax * ax * ax, ay * ay));
  return r <= Real::tolerance(ctx) * scale;
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  if (P.is_exact() != Q.is_exact()) throw MixedScalarKinds("cannot add an exact and a complex point");
  if (P.is_exact()) return add_exact(E, P.exact(), Q.exact());
  return add_complex(E, P.complex(), Q.complex());
}

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P) {
  if (P.is_infinity()) return P;
  if (P.is_exact()) {
    const auto& p = P.exact();
    return CurvePoint(p.x, -p.y - E.a1() * p.x - E.a3());
  }
  const auto& p = P.complex();
  const Lifted c(E, p.x.context());
  return CurvePoint(p.x, -p.y - c.a1 * p.x - c.a3);
}

CurvePoint sub(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  return add(E, P, neg(E, Q));
}

CurvePoint mul_scalar(const WeierstrassCurve& E, const CurvePoint& P, const Integer& n) {
  const CurvePoint base = n < 0 ? neg(E, P) : P;
  const Integer e = abs(n);
  return numerics::fast_exp(
      base, e, [&E](const CurvePoint& a, const CurvePoint& b) { return add(E, a, b); },
      CurvePoint::infinity());
}

std::vector<Rational> ordinates_from_x(const WeierstrassCurve& E, const Rational& x) {
  const Rational b = E.a1() * x + E.a3();
  const Rational disc = E.two_division_cubic()(x);
  if (disc < 0) return {};
  Integer num_root, den_root;
  if (!mpz_perfect_square_p(disc.get_num_mpz_t()) || !mpz_perfect_square_p(disc.get_den_mpz_t())) {
    return {};
  }
  mpz_sqrt(num_root.get_mpz_t(), disc.get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), disc.get_den_mpz_t());
  const Rational root(num_root, den_root);
  if (root == 0) return {-b / 2};
  return {(-b + root) / 2, (-b - root) / 2};
}

std::vector<Complex> ordinates_from_x(const WeierstrassCurve& E, const Complex& x) {
  const PrecisionContext ctx = x.context();
  const Lifted c(E, ctx);
  const Complex b = c.a1 * x + c.a3;
  const Complex disc = 4 * (x * x * x + c.a2 * x * x + c.a4 * x + c.a6) + b * b;
  const Complex root = numerics::sqrt(disc);
  return {ldexp(root - b, -1), ldexp(-root - b, -1)};
}

DivisionPolynomial division_polynomial(const WeierstrassCurve& E, long k) {
  if (k < 1) throw InvalidArgument("division polynomial index must be >= 1");
  const Rational& b2 = E.b2();
  const Rational& b4 = E.b4();
  const Rational& b6 = E.b6();
  const Rational& b8 = E.b8();
  const RationalPolynomial F = E.two_division_cubic();
  const RationalPolynomial F2 = F * F;

  std::vector<RationalPolynomial> f(static_cast<std::size_t>(std::max(k, 4L)) + 1);
  f[0] = RationalPolynomial();
  f[1] = RationalPolynomial({Rational(1)});
  f[2] = RationalPolynomial({Rational(1)});
  f[3] = RationalPolynomial({b8, 3 * b6, 3 * b4, b2, Rational(3)});
  f[4] = RationalPolynomial({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, Rational(2)});
  for (long n = 5; n <= k; ++n) {
    const long m = n / 2;
    if (n % 2 == 1) {
      const auto head = f[m + 2] * f[m] * f[m] * f[m];
      const auto tail = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
      f[n] = m % 2 == 0 ? F2 * head - tail : head - F2 * tail;
    } else {
      f[n] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  return {f[k], k % 2 == 0};
}

RationalPolynomial torsion_annihilator_exact(const WeierstrassCurve& E, long ell) {
  if (ell < 3 || mpz_probab_prime_p(Integer(ell).get_mpz_t(), 30) == 0) {
    throw InvalidArgument("torsion annihilator needs an odd prime, got " + std::to_string(ell));
  }
  return division_polynomial(E, ell).poly / Rational(ell);
}

}  // namespace abeljacobi::curve
