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

#include "abeljacobi/numerics/exact.hpp"

#include <cctype>
#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str(10);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer height(const Rational& q) {
  const Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  return num > den ? num : den;
}

Integer floor(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

}  // namespace abeljacobi::numerics
