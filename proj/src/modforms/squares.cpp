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

#include "abeljacobi/modforms/squares.hpp"

#include <string>
#include <vector>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::modforms {

namespace {

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small;
  std::vector<unsigned long> large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divisor sums over d | m, empty when m is not an integer (m = n / k).
Integer sigma(unsigned long n, unsigned long k, unsigned long power, bool odd_only = false) {
  Integer sum = 0;
  if (n % k != 0) return sum;
  for (unsigned long d : divisors(n / k)) {
    if (odd_only && d % 2 == 0) continue;
    sum += pow_ui(Integer(d), power);
  }
  return sum;
}

Integer sigma_chi(unsigned long n, unsigned long power) {
  Integer sum = 0;
  for (unsigned long d : divisors(n)) sum += chi(static_cast<long>(d)) * pow_ui(Integer(d), power);
  return sum;
}

Integer sigma_chi_cofactor(unsigned long n, unsigned long power) {
  Integer sum = 0;
  for (unsigned long d : divisors(n)) sum += chi(static_cast<long>(n / d)) * pow_ui(Integer(d), power);
  return sum;
}

// Coefficient of q^n in q prod_{m >= 1} (1 - q^(2m))^12.
Integer eta_twelve_coefficient(unsigned long n) {
  if (n % 2 == 0) return 0;
  const std::size_t k = (n - 1) / 2;
  IntegerSeries eta = IntegerSeries::one(k);
  for (std::size_t m = 1; m <= k; ++m) eta.multiply_by_one_minus_q_power(m);
  return power(eta, 12)[k];
}

Integer divide_exact(const Integer& value, long by, const char* what) {
  if (value % by != 0) throw NumericalFailure("NumericalFailure", std::string(what) + " not divisible");
  return value / by;
}

}  // namespace

int chi(long n) {
  const long r = ((n % 4) + 4) % 4;
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

int chi(const Integer& n) { return chi(static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 4))); }

GaussianSum gaussian_fourth_power_sum(const Integer& n) {
  GaussianSum sum{0, 0};
  if (n < 0) return sum;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), n.get_mpz_t());
  for (Integer a = -bound; a <= bound; ++a) {
    const Integer rest = n - a * a;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    Integer b;
    mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
    const Integer a2 = a * a;
    const Integer b2 = b * b;
    const Integer re = a2 * a2 - 6 * a2 * b2 + b2 * b2;
    const Integer im = 4 * a2 * a * b - 4 * a * b2 * b;
    sum.re += re;
    sum.im += im;
    if (b != 0) {
      sum.re += re;
      sum.im -= im;
    }
  }
  return sum;
}

Integer rd_formula(unsigned d, const Integer& n_big) {
  if (n_big < 1) throw InvalidArgument("rd_formula needs n >= 1");
  if (!n_big.fits_ulong_p()) throw InvalidArgument("n too large");
  const unsigned long n = n_big.get_ui();
  switch (d) {
    case 2:
      return 4 * sigma_chi(n, 0);
    case 4:
      return 8 * sigma(n, 1, 1, true) + 16 * sigma(n, 2, 1, true);
    case 6:
      return 16 * sigma_chi_cofactor(n, 2) - 4 * sigma_chi(n, 2);
    case 8:
      return 16 * sigma(n, 1, 3) - 32 * sigma(n, 2, 3) + 256 * sigma(n, 4, 3);
    case 10: {
      const GaussianSum g = gaussian_fourth_power_sum(n_big);
      if (g.im != 0) throw NumericalFailure("NumericalFailure", "Gaussian sum has non-zero imaginary part");
      const Integer five_r = 4 * sigma_chi(n, 4) + 64 * sigma_chi_cofactor(n, 4) + 8 * g.re;
      return divide_exact(five_r, 5, "5 r_10");
    }
    case 12:
      return 8 * sigma(n, 1, 5) - 512 * sigma(n, 4, 5) + 16 * eta_twelve_coefficient(n);
    default:
      throw UnsupportedD("no closed formula for d = " + std::to_string(d));
  }
}

Integer rd_brute_force(unsigned d, unsigned long n) {
  if (d < 1) throw InvalidArgument("rd_brute_force needs d >= 1");
  // count[m] holds the number of representations of m by the coordinates
  // placed so far.
  std::vector<Integer> count(n + 1, Integer(0));
  count[0] = 1;
  for (unsigned k = 0; k < d; ++k) {
    std::vector<Integer> next(n + 1, Integer(0));
    for (unsigned long m = 0; m <= n; ++m) {
      if (count[m] == 0) continue;
      for (unsigned long x = 0; m + x * x <= n; ++x) {
        next[m + x * x] += x == 0 ? count[m] : 2 * count[m];
      }
    }
    count = std::move(next);
  }
  return count[n];
}

IntegerSeries theta_power(unsigned d, std::size_t N, int threads) {
  if (d < 1) throw InvalidArgument("theta_power needs d >= 1");
  IntegerSeries theta(N);
  theta[0] = 1;
  for (std::size_t x = 1; x * x <= N; ++x) theta[x * x] = 2;
  return power(theta, d, threads);
}

}  // namespace abeljacobi::modforms
