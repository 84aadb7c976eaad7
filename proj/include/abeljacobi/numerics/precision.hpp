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

#include <compare>

#include <mpfr.h>

namespace abeljacobi::numerics {

// Working precision for arbitrary-precision computations.
//
// `bits` is the MPFR mantissa size. The derived tolerance is
// 2^(-bits + kGuardBits): sixteen bits of slack absorb rounding noise
// accumulated over composed operations.
class PrecisionContext {
 public:
  static constexpr int kGuardBits = 16;
  static constexpr int kMinBits = 53;

  // Throws InvalidArgument when bits < kMinBits.
  explicit PrecisionContext(int bits);

  int bits() const noexcept { return bits_; }
  mpfr_prec_t mpfr_bits() const noexcept { return static_cast<mpfr_prec_t>(bits_); }

  // Binary exponent of the tolerance: tol = 2^tol_exponent().
  long tol_exponent() const noexcept { return -static_cast<long>(bits_) + kGuardBits; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int bits_;
};

}  // namespace abeljacobi::numerics
