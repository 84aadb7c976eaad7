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
#include <functional>
#include <vector>

#include "abeljacobi/numerics/polynomial.hpp"

namespace abeljacobi::numerics {

inline constexpr int kAberthMaxSweeps = 200;

// All deg(p) complex roots of p, with multiplicity, by Aberth-Ehrlich
// simultaneous iteration. Each returned r satisfies
//   |p(r)| <= tol * max_k |p_k| * max(1, |r|)^deg.
// Throws InvalidArgument for constant p and NonConvergence when the sweep
// budget runs out.
std::vector<Complex> poly_roots(const ComplexPolynomial& p);

// Positive root of |p_n| x^n - sum_{k<n} |p_k| x^k: every root of p has
// modulus at most this value. Computed in double-exponent range.
Real cauchy_bound(const ComplexPolynomial& p);

// Roots in the closed disk |z| <= 1/2 + tol of the degree-K truncation of
// a power series given by its coefficient stream.
std::vector<Complex> truncated_series_roots(const std::function<Complex(std::size_t)>& coeff,
                                            std::size_t K, PrecisionContext ctx);

// Truncation order for series with coefficients bounded by 1 and radius of
// convergence at least 1: the tail on |z| <= 1/2 is below tol.
std::size_t default_truncation_order(PrecisionContext ctx);

}  // namespace abeljacobi::numerics
