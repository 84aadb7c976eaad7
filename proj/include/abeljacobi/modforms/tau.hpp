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

#include <utility>
#include <vector>

#include "abeljacobi/modforms/series.hpp"
#include "abeljacobi/numerics/crt.hpp"
#include "abeljacobi/numerics/real.hpp"

namespace abeljacobi::modforms {

using numerics::Real;

struct PrimePower {
  Integer p;
  unsigned long e;
};
using Factorization = std::vector<PrimePower>;

// Coefficients of q * prod_{n >= 1} (1 - q^n)^24 up to q^N: entry n is
// tau(n), entry 0 is 0.
IntegerSeries eta_product_tau(std::size_t N, int threads = 0);

// tau(n) from tau(p) values via multiplicativity and
// tau(p^r) = tau(p) tau(p^(r-1)) - p^11 tau(p^(r-2)). The tau(p) come
// from `table` (which must reach the largest prime) or from a fresh
// eta-product expansion. Throws BadFactorization when the factorization
// does not describe n with distinct primes.
Integer tau_at(const Integer& n, const Factorization& factorization);
Integer tau_at(const Integer& n, const Factorization& factorization, const IntegerSeries& table);

// Trial-division factorization, for callers without one.
Factorization factorize(unsigned long n);

// tau(p)^2 <= 4 p^11, exactly.
bool deligne_check(unsigned long p);
bool deligne_check(unsigned long p, const Integer& tau_p);

// tau(p) from its residues modulo small primes. Requires the moduli to be
// coprime, different from p, and (prod l)^2 > 16 p^11
// (InsufficientModuli otherwise).
Integer tau_crt_recover(unsigned long p, const std::vector<numerics::Residue>& residues);

// Partial sum sum_{n <= N} tau(n) n^-s and partial Euler product
// prod_{p <= N} (1 - tau(p) p^-s + p^(11 - 2s))^-1, at the precision of s.
// Requires s > 13/2.
std::pair<Real, Real> dirichlet_euler_check(const Real& s, std::size_t N);

}  // namespace abeljacobi::modforms
