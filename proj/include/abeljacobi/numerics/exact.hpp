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

#include <gmpxx.h>

namespace abeljacobi::numerics {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "p/q" (optional sign, no whitespace) into a canonical
// rational. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// "num/den" in lowest terms; integers are printed without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// max(|numerator|, |denominator|) of a canonical rational.
Integer height(const Rational& q);

// Floor of a rational as an integer.
Integer floor(const Rational& q);

}  // namespace abeljacobi::numerics
