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

#include "abeljacobi/numerics/real.hpp"

namespace abeljacobi::numerics {

// Arbitrary-precision complex number: a pair of Reals sharing one precision.
class Complex {
 public:
  explicit Complex(PrecisionContext ctx) : re_(ctx), im_(ctx) {}
  Complex(long re, PrecisionContext ctx) : re_(re, ctx), im_(ctx) {}
  Complex(long re, long im, PrecisionContext ctx) : re_(re, ctx), im_(im, ctx) {}
  explicit Complex(Real re);
  Complex(Real re, Real im);
  Complex(const Rational& re, PrecisionContext ctx) : re_(re, ctx), im_(ctx) {}

  // Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" where a, b are decimal or
  // rational literals; "I" and "*i" are also understood. Throws ParseError.
  static Complex parse(std::string_view text, PrecisionContext ctx);
  // r * (cos(theta) + i sin(theta)).
  static Complex polar(const Real& r, const Real& theta);

  // Both parts rounded to nearest at another precision.
  Complex rounded(PrecisionContext ctx) const { return Complex(re_.rounded(ctx), im_.rounded(ctx)); }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }
  PrecisionContext context() const { return re_.context(); }
  int bits() const { return re_.bits(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator+=(const Real& rhs);
  Complex& operator-=(const Real& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex& operator+=(long rhs);
  Complex& operator-=(long rhs);
  Complex& operator*=(long rhs);
  Complex& operator/=(long rhs);
  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator+(Complex a, const Real& b) { return a += b; }
  friend Complex operator-(Complex a, const Real& b) { return a -= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator+(Complex a, long b) { return a += b; }
  friend Complex operator-(Complex a, long b) { return a -= b; }
  friend Complex operator*(Complex a, long b) { return a *= b; }
  friend Complex operator/(Complex a, long b) { return a /= b; }
  friend Complex operator*(long a, Complex b) { return b *= a; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "re im" pair in scientific notation with the given significant digits.
  std::string to_string(int digits) const;

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
// |z|^2
Real norm(const Complex& z);
Complex conj(const Complex& z);
// Principal square root: real part >= 0, branch cut on the negative axis
// (sqrt(-1) = i).
Complex sqrt(const Complex& z);
Complex ldexp(const Complex& z, long e);
// True when z == 0 or |arg z| < 3pi/4.
bool away_from_negative_axis(const Complex& z);

}  // namespace abeljacobi::numerics
