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

#include "abeljacobi/modforms/series.hpp"

#include <omp.h>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/fast_exp.hpp"

namespace abeljacobi::modforms {

namespace {

void require_same_order(const IntegerSeries& a, const IntegerSeries& b) {
  if (a.order() != b.order()) throw InvalidArgument("series orders differ");
}

void convolve_into(Integer& out, const IntegerSeries& a, const IntegerSeries& b, std::size_t n) {
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k] == 0) continue;
    mpz_addmul(out.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
  }
}

}  // namespace

IntegerSeries::IntegerSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("a series needs at least the constant term");
}

IntegerSeries IntegerSeries::one(std::size_t order) {
  IntegerSeries s(order);
  s[0] = 1;
  return s;
}

void IntegerSeries::multiply_by_one_minus_q_power(std::size_t m) {
  if (m == 0) throw InvalidArgument("factor 1 - q^0 is zero");
  for (std::size_t k = order(); k >= m; --k) {
    coeffs_[k] -= coeffs_[k - m];
    if (k == m) break;
  }
}

IntegerSeries multiply_serial(const IntegerSeries& a, const IntegerSeries& b) {
  require_same_order(a, b);
  IntegerSeries c(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) convolve_into(c[n], a, b, n);
  return c;
}

IntegerSeries multiply(const IntegerSeries& a, const IntegerSeries& b, int threads) {
  require_same_order(a, b);
  IntegerSeries c(a.order());
  const long top = static_cast<long>(a.order());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
  for (long n = 0; n <= top; ++n) convolve_into(c[static_cast<std::size_t>(n)], a, b, static_cast<std::size_t>(n));
  return c;
}

IntegerSeries power(const IntegerSeries& a, unsigned long e, int threads) {
  return numerics::fast_exp(
      a, e, [threads](const IntegerSeries& x, const IntegerSeries& y) { return multiply(x, y, threads); },
      IntegerSeries::one(a.order()));
}

}  // namespace abeljacobi::modforms
