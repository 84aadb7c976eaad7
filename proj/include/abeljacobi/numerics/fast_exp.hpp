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
#include <utility>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/exact.hpp"

namespace abeljacobi::numerics {

// g^e by right-to-left binary exponentiation: b_0 = g, b_k = b_{k-1}^2 and
// the result collects the b_k for the set bits of e. The accumulator starts
// at the first set bit, so the identity is never multiplied in. Uses at
// most 2*floor(log2 e) + 1 calls to `mul` for e >= 1; returns `id` when
// e == 0. Throws InvalidArgument for negative e.
template <class G, class Mul>
G fast_exp(const G& g, const Integer& e, Mul&& mul, const G& id) {
  if (e < 0) throw InvalidArgument("fast_exp needs a non-negative exponent");
  if (e == 0) return id;
  const mp_bitcnt_t top = mpz_sizeinbase(e.get_mpz_t(), 2) - 1;
  std::optional<G> result;
  G square = g;
  for (mp_bitcnt_t k = 0;; ++k) {
    if (mpz_tstbit(e.get_mpz_t(), k)) {
      result = result ? mul(*result, square) : square;
    }
    if (k == top) break;
    square = mul(square, square);
  }
  return std::move(*result);
}

template <class G, class Mul>
G fast_exp(const G& g, unsigned long e, Mul&& mul, const G& id) {
  return fast_exp(g, Integer(e), std::forward<Mul>(mul), id);
}

}  // namespace abeljacobi::numerics
