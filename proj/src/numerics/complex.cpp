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

#include "abeljacobi/numerics/complex.hpp"

#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.context()) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.bits() != im_.bits()) {
    throw PrecisionMismatch("real and imaginary parts differ in precision");
  }
}

namespace {

bool is_imaginary_unit(char c) { return c == 'i' || c == 'I'; }

Real parse_coefficient(std::string_view text, PrecisionContext ctx, bool imaginary) {
  if (imaginary && (text.empty() || text == "+")) return Real(1, ctx);
  if (imaginary && text == "-") return Real(-1, ctx);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return Real::parse(text, ctx);
}

}  // namespace

Complex Complex::parse(std::string_view text, PrecisionContext ctx) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty complex number");
  if (!is_imaginary_unit(s.back())) return Complex(Real::parse(s, ctx));

  std::string_view body(s);
  body.remove_suffix(1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  // The split point is the last sign that is not leading and not part of
  // an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return Complex(Real(ctx), parse_coefficient(body, ctx, true));
  }
  return Complex(parse_coefficient(body.substr(0, split), ctx, false),
                 parse_coefficient(body.substr(split), ctx, true));
}

Complex Complex::polar(const Real& r, const Real& theta) {
  Real s(theta.context());
  Real c(theta.context());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(r * c, r * s);
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real denom = norm(rhs);
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  im_ = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator+=(const Real& rhs) {
  re_ += rhs;
  return *this;
}
Complex& Complex::operator-=(const Real& rhs) {
  re_ -= rhs;
  return *this;
}
Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}
Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}
Complex& Complex::operator+=(long rhs) {
  re_ += rhs;
  return *this;
}
Complex& Complex::operator-=(long rhs) {
  re_ -= rhs;
  return *this;
}
Complex& Complex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}
Complex& Complex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string Complex::to_string(int digits) const {
  return re_.to_string(digits) + " " + im_.to_string(digits);
}

Real abs(const Complex& z) {
  Real r(z.context());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex sqrt(const Complex& z) {
  const PrecisionContext ctx = z.context();
  if (z.imag().is_zero()) {
    if (z.real().sign() >= 0) return Complex(sqrt(z.real()), Real(ctx));
    return Complex(Real(ctx), sqrt(-z.real()));
  }
  const Real r = abs(z);
  if (z.real().sign() >= 0) {
    Real t = sqrt(ldexp(r + z.real(), -1));
    Real im = z.imag() / ldexp(t, 1);
    return Complex(std::move(t), std::move(im));
  }
  Real t = sqrt(ldexp(r - z.real(), -1));
  Real re = abs(z.imag()) / ldexp(t, 1);
  if (z.imag().sign() < 0) t = -t;
  return Complex(std::move(re), std::move(t));
}

Complex ldexp(const Complex& z, long e) { return Complex(ldexp(z.real(), e), ldexp(z.imag(), e)); }

bool away_from_negative_axis(const Complex& z) {
  if (z.is_zero()) return true;
  if (z.real().sign() >= 0) return true;
  return abs(z.imag()) > -z.real();
}

}  // namespace abeljacobi::numerics
