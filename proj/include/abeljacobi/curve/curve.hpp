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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abeljacobi/numerics/complex.hpp"
#include "abeljacobi/numerics/exact.hpp"
#include "abeljacobi/numerics/polynomial.hpp"

namespace abeljacobi::curve {

using numerics::Complex;
using numerics::Integer;
using numerics::PrecisionContext;
using numerics::Rational;
using numerics::RationalPolynomial;

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
class WeierstrassCurve {
 public:
  // Throws SingularCurve when the discriminant vanishes.
  WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);

  // "a1,a2,a3,a4,a6", each an integer or p/q. Throws ParseError.
  static WeierstrassCurve parse(std::string_view text);

  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  const Rational& a3() const { return a3_; }
  const Rational& a4() const { return a4_; }
  const Rational& a6() const { return a6_; }
  const Rational& b2() const { return b2_; }
  const Rational& b4() const { return b4_; }
  const Rational& b6() const { return b6_; }
  const Rational& b8() const { return b8_; }
  const Rational& discriminant() const { return disc_; }

  // 4x^3 + b2 x^2 + 2 b4 x + b6, whose roots are the x-coordinates of the
  // nonzero 2-torsion points.
  RationalPolynomial two_division_cubic() const;

  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  Rational a1_, a2_, a3_, a4_, a6_;
  Rational b2_, b4_, b6_, b8_, disc_;
};

struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) = default;
};

struct ExactAffine {
  Rational x;
  Rational y;
  friend bool operator==(const ExactAffine&, const ExactAffine&) = default;
};

struct ComplexAffine {
  Complex x;
  Complex y;
  friend bool operator==(const ComplexAffine&, const ComplexAffine&) = default;
};

// The point at infinity, an affine point with rational coordinates, or an
// affine point with arbitrary-precision complex coordinates.
class CurvePoint {
 public:
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y) : v_(ExactAffine{std::move(x), std::move(y)}) {}
  CurvePoint(Complex x, Complex y) : v_(ComplexAffine{std::move(x), std::move(y)}) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return std::holds_alternative<Infinity>(v_); }
  bool is_exact() const { return std::holds_alternative<ExactAffine>(v_); }
  bool is_complex() const { return std::holds_alternative<ComplexAffine>(v_); }
  const ExactAffine& exact() const { return std::get<ExactAffine>(v_); }
  const ComplexAffine& complex() const { return std::get<ComplexAffine>(v_); }

  // Complex coordinates at the given precision; Infinity stays Infinity.
  CurvePoint to_complex(PrecisionContext ctx) const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  std::variant<Infinity, ExactAffine, ComplexAffine> v_;
};

// Exact test for rational points; for complex points the residual of the
// curve equation must be at most tol * max(1, |x|^3, |y|^2).
bool is_on_curve(const WeierstrassCurve& E, const CurvePoint& P);

// Chord-tangent addition with Infinity as identity. Throws
// MixedScalarKinds when one point is exact and the other complex.
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint sub(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
// n*P via fast exponentiation; negative n negates first.
CurvePoint mul_scalar(const WeierstrassCurve& E, const CurvePoint& P, const Integer& n);

// The y with (x, y) on E: over Q the rational solutions (zero, one or
// two); over C both roots of the quadratic, +sqrt branch first.
std::vector<Rational> ordinates_from_x(const WeierstrassCurve& E, const Rational& x);
std::vector<Complex> ordinates_from_x(const WeierstrassCurve& E, const Complex& x);

// psi_k for odd k; psi_k / psi_2 for even k (with psi_2^2 replaced by the
// 2-division cubic), so every value is a polynomial in x alone.
struct DivisionPolynomial {
  RationalPolynomial poly;
  bool even;
};
DivisionPolynomial division_polynomial(const WeierstrassCurve& E, long k);

// psi_ell / ell: monic of degree (ell^2 - 1)/2; its roots are the
// x-coordinates of the nonzero ell-torsion points. Requires an odd prime.
RationalPolynomial torsion_annihilator_exact(const WeierstrassCurve& E, long ell);

}  // namespace abeljacobi::curve
