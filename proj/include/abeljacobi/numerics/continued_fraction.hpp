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

#include <optional>
#include <vector>

#include "abeljacobi/numerics/exact.hpp"

namespace abeljacobi::numerics {

// [a0; a1, ..., an] with a_i > 0 for i > 0 and a_n > 1 when n > 0.
struct ContinuedFraction {
  std::vector<Integer> terms;

  Rational evaluate() const;
  // p_k/q_k for k = 0..n, each in lowest terms.
  std::vector<Rational> convergents() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction continued_fraction(const Rational& y);

// The rational with denominator <= h within 1/(2h^2) of y, if there is one. The
// candidate is the last convergent of y with denominator <= h.
std::optional<Rational> rational_reconstruct(const Rational& y, const Integer& h);

}  // namespace abeljacobi::numerics
