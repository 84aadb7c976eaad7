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
#include <vector>

#include "abeljacobi/numerics/exact.hpp"

namespace abeljacobi::modforms {

using numerics::Integer;

// Truncated power series sum_{n <= N} c_n q^n with exact integer
// coefficients. Products are truncated at the common order N.
class IntegerSeries {
 public:
  // The zero series of order N.
  explicit IntegerSeries(std::size_t order) : coeffs_(order + 1) {}
  // Order = coeffs.size() - 1; coeffs must be non-empty.
  explicit IntegerSeries(std::vector<Integer> coeffs);

  static IntegerSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
  Integer& operator[](std::size_t n) { return coeffs_[n]; }

  // In-place multiplication by (1 - q^m).
  void multiply_by_one_minus_q_power(std::size_t m);

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

// Schoolbook truncated product, single thread. Reference for multiply().
IntegerSeries multiply_serial(const IntegerSeries& a, const IntegerSeries& b);

// Same product with the output coefficients distributed over OpenMP
// threads (0 = runtime default). Bit-identical to multiply_serial.
IntegerSeries multiply(const IntegerSeries& a, const IntegerSeries& b, int threads = 0);

// a^e by fast exponentiation over multiply().
IntegerSeries power(const IntegerSeries& a, unsigned long e, int threads = 0);

}  // namespace abeljacobi::modforms
