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

#include "abeljacobi/numerics/continued_fraction.hpp"

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

namespace {

// Euclid's algorithm on num/den, one partial quotient per call.
class TermStream {
 public:
  explicit TermStream(const Rational& y) : num_(y.get_num()), den_(y.get_den()) {}

  bool next(Integer& term) {
    if (den_ == 0) return false;
    Integer rem;
    mpz_fdiv_qr(term.get_mpz_t(), rem.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ = den_;
    den_ = rem;
    return true;
  }

 private:
  Integer num_;
  Integer den_;
};

}  // namespace

ContinuedFraction continued_fraction(const Rational& y) {
  ContinuedFraction cf;
  TermStream stream(y);
  Integer a;
  while (stream.next(a)) cf.terms.push_back(a);
  return cf;
}

Rational ContinuedFraction::evaluate() const {
  if (terms.empty()) throw InvalidArgument("empty continued fraction");
  Rational value(terms.back());
  for (std::size_t k = terms.size() - 1; k-- > 0;) {
    value = Rational(terms[k]) + 1 / value;
  }
  value.canonicalize();
  return value;
}

std::vector<Rational> ContinuedFraction::convergents() const {
  std::vector<Rational> out;
  Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (const Integer& a : terms) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

std::optional<Rational> rational_reconstruct(const Rational& y, const Integer& h) {
  if (h < 1) throw InvalidArgument("height bound must be >= 1");
  TermStream stream(y);
  Integer a;
  Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  std::optional<Rational> candidate;
  while (stream.next(a)) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    if (q > h) break;
    candidate = Rational(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  if (!candidate) return std::nullopt;
  const Rational gap = abs(*candidate - y);
  if (gap * 2 * h * h >= 1) return std::nullopt;
  return candidate;
}

}  // namespace abeljacobi::numerics
