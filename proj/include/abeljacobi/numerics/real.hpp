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

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "abeljacobi/numerics/exact.hpp"
#include "abeljacobi/numerics/precision.hpp"

namespace abeljacobi::numerics {

// Arbitrary-precision binary floating-point real (RAII wrapper over mpfr_t).
//
// Every value carries the precision it was created with. Arithmetic between
// two Reals of different precision throws PrecisionMismatch; results always
// keep the operands' precision. Rounding is to nearest.
class Real {
 public:
  explicit Real(PrecisionContext ctx);
  Real(long value, PrecisionContext ctx);
  Real(const Integer& value, PrecisionContext ctx);
  Real(const Rational& value, PrecisionContext ctx);

  static Real from_double(double value, PrecisionContext ctx);
  // Decimal ("-1.25e-3") or rational ("p/q") text, rounded to nearest.
  static Real parse(std::string_view text, PrecisionContext ctx);
  static Real pi(PrecisionContext ctx);
  // 2^exponent, exact.
  static Real pow2(long exponent, PrecisionContext ctx);
  static Real tolerance(PrecisionContext ctx) { return pow2(ctx.tol_exponent(), ctx); }

  // This value rounded to nearest at another precision.
  Real rounded(PrecisionContext ctx) const;

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  PrecisionContext context() const { return PrecisionContext(static_cast<int>(mpfr_get_prec(v_))); }
  int bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // The exact binary value as a rational.
  Rational to_rational() const;
  Integer trunc_to_integer() const;
  Integer floor_to_integer() const;
  Integer round_to_integer() const;

  // Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  // Enough decimal digits to represent the mantissa faithfully.
  std::string to_string() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  void require_same_precision(const Real& other) const;

  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real floor(const Real& x);
// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// Number of decimal digits that faithfully represent `bits` binary digits.
int decimal_digits_for_bits(int bits);

}  // namespace abeljacobi::numerics
