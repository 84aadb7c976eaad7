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

#include "abeljacobi/modforms/series.hpp"

namespace abeljacobi::modforms {

// Non-trivial character mod 4: 0 on even n, 1 on n = 1 mod 4, -1 on n = 3 mod 4.
int chi(const Integer& n);
int chi(long n);

// r_d(n) from the closed divisor-sum formulas, d in {2,4,6,8,10,12}, n >= 1.
// Throws UnsupportedD for other d.
Integer rd_formula(unsigned d, const Integer& n);

// Number of x in Z^d with x_1^2 + ... + x_d^2 = n.
Integer rd_brute_force(unsigned d, unsigned long n);

// (sum_{x in Z} q^(x^2))^d truncated at q^N.
IntegerSeries theta_power(unsigned d, std::size_t N, int threads = 0);

// Sum of (a + bi)^4 over a^2 + b^2 = n, kept as an exact integer pair.
struct GaussianSum {
  Integer re;
  Integer im;
};
GaussianSum gaussian_fourth_power_sum(const Integer& n);

}  // namespace abeljacobi::modforms
