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

#include <cstddef>
#include <utility>
#include <vector>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/complex.hpp"
#include "abeljacobi/numerics/exact.hpp"

namespace abeljacobi::numerics {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct ScalarTraits<Complex> {
  static Complex zero_like(const Complex& like) { return Complex(like.context()); }
  static bool is_zero(const Complex& x) { return x.is_zero(); }
};

// Dense univariate polynomial; coeffs()[k] is the coefficient of T^k.
// Trailing zero coefficients are stripped, so the zero polynomial is empty.
template <class T>
class DensePolynomial {
 public:
  using Traits = ScalarTraits<T>;

  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const T& leading() const {
    if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  // Coefficient of T^k, or a zero of the same kind as `like` past the degree.
  T coeff(std::size_t k, const T& like) const {
    return k < coeffs_.size() ? coeffs_[k] : Traits::zero_like(like);
  }

  // Horner evaluation.
  T operator()(const T& x) const {
    T acc = Traits::zero_like(x);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc *= x;
      acc += coeffs_[k];
    }
    return acc;
  }

  DensePolynomial derivative() const {
    std::vector<T> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
    return DensePolynomial(std::move(out));
  }

  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
    const DensePolynomial& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const DensePolynomial& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    std::vector<T> out = longer.coeffs_;
    for (std::size_t k = 0; k < shorter.coeffs_.size(); ++k) out[k] += shorter.coeffs_[k];
    return DensePolynomial(std::move(out));
  }

  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
    return a + b.negated();
  }

  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return DensePolynomial();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, Traits::zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePolynomial(std::move(out));
  }

  template <class S>
  friend DensePolynomial operator*(const DensePolynomial& a, const S& s) {
    std::vector<T> out = a.coeffs_;
    for (auto& c : out) c *= s;
    return DensePolynomial(std::move(out));
  }

  template <class S>
  friend DensePolynomial operator/(const DensePolynomial& a, const S& s) {
    std::vector<T> out = a.coeffs_;
    for (auto& c : out) c /= s;
    return DensePolynomial(std::move(out));
  }

  DensePolynomial negated() const {
    std::vector<T> out = coeffs_;
    for (auto& c : out) c = -c;
    return DensePolynomial(std::move(out));
  }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = DensePolynomial<Rational>;
using ComplexPolynomial = DensePolynomial<Complex>;

// prod (T - r) over the given roots; 1 for an empty list.
ComplexPolynomial from_roots(const std::vector<Complex>& roots, PrecisionContext ctx);

}  // namespace abeljacobi::numerics
