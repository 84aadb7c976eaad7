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

#include "abeljacobi/numerics/real.hpp"

#include <cmath>
#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

PrecisionContext::PrecisionContext(int bits) : bits_(bits) {
  if (bits < kMinBits) {
    throw InvalidArgument("precision must be at least " + std::to_string(kMinBits) +
                          " bits, got " + std::to_string(bits));
  }
}

Real::Real(PrecisionContext ctx) {
  mpfr_init2(v_, ctx.mpfr_bits());
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, PrecisionContext ctx) {
  mpfr_init2(v_, ctx.mpfr_bits());
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, PrecisionContext ctx) {
  mpfr_init2(v_, ctx.mpfr_bits());
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, PrecisionContext ctx) {
  mpfr_init2(v_, ctx.mpfr_bits());
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::from_double(double value, PrecisionContext ctx) {
  Real r(ctx);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, PrecisionContext ctx) {
  if (text.find('/') != std::string_view::npos) return Real(parse_rational(text), ctx);
  Real r(ctx);
  std::string s(text);
  char* end = nullptr;
  if (s.empty()) throw ParseError("empty real number");
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end != s.c_str() + s.size()) throw ParseError("not a real number: '" + s + "'");
  if (!r.is_finite()) throw ParseError("not a finite real number: '" + s + "'");
  return r;
}

Real Real::pi(PrecisionContext ctx) {
  Real r(ctx);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long exponent, PrecisionContext ctx) {
  Real r(1, ctx);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

Real Real::rounded(PrecisionContext ctx) const {
  Real r(ctx);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// A moved-from Real has a null limb pointer; it may only be destroyed or
// assigned to.
Real::Real(Real&& other) noexcept {
  *v_ = *other.v_;
  other.v_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (v_->_mpfr_d == nullptr) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
  } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
  *v_ = *other.v_;
  other.v_->_mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::require_same_precision(const Real& other) const {
  if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    throw PrecisionMismatch("operands have " + std::to_string(bits()) + " and " +
                            std::to_string(other.bits()) + " bits");
  }
}

Real& Real::operator+=(const Real& rhs) {
  require_same_precision(rhs);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  require_same_precision(rhs);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  require_same_precision(rhs);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  require_same_precision(rhs);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw InvalidArgument("cannot convert a non-finite value to a rational");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

namespace {
Integer to_integer(mpfr_srcptr v, mpfr_rnd_t mode) {
  if (mpfr_number_p(v) == 0) throw InvalidArgument("cannot convert a non-finite value to an integer");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v, mode);
  return z;
}
}  // namespace

Integer Real::trunc_to_integer() const { return to_integer(v_, MPFR_RNDZ); }
Integer Real::floor_to_integer() const { return to_integer(v_, MPFR_RNDD); }
Integer Real::round_to_integer() const { return to_integer(v_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string Real::to_string() const { return to_string(decimal_digits_for_bits(bits())); }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x);
  mpfr_floor(r.get(), r.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(y.context());
  if (y.bits() != x.bits()) throw PrecisionMismatch("atan2 operands differ in precision");
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

int decimal_digits_for_bits(int bits) {
  return static_cast<int>(std::ceil(bits * std::log10(2.0))) + 1;
}

}  // namespace abeljacobi::numerics
