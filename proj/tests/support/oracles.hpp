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

// Independent reference computations used by the tests. Nothing here calls
// into the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// Composite Simpson rule on [a, b] with n (even) panels, in double.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int k = 1; k < n; ++k) sum += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Real root of a real cubic c3 x^3 + c2 x^2 + c1 x + c0 with a single real
// root, by bisection on a bracketing interval.
inline double cubic_real_root(double c3, double c2, double c1, double c0, double lo, double hi) {
  auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// int_x^inf dt / sqrt(F(t)) for F = c3 t^3 + c2 t^2 + c1 t + c0 with c3 > 0,
// x at or above the largest real root e. Substituting t = e + tan(theta)^2
// leaves a smooth integrand when x = e.
inline double tail_integral(double c3, double c2, double c1, [[maybe_unused]] double c0, double e,
                             double x) {
  // F(t) = (t - e) Q(t) with Q(t) = c3 t^2 + (c2 + c3 e) t + (c1 + (c2 + c3 e) e).
  const double q2 = c3;
  const double q1 = c2 + c3 * e;
  const double q0 = c1 + q1 * e;
  auto Q = [&](double t) { return (q2 * t + q1) * t + q0; };
  const double theta0 = std::atan(std::sqrt(std::max(0.0, x - e)));
  const double half_pi = std::acos(0.0);
  auto integrand = [&](double theta) {
    if (half_pi - theta < 1e-12) return 2.0 / std::sqrt(q2);
    const double u = std::tan(theta);
    return 2.0 * (1.0 + u * u) / std::sqrt(Q(e + u * u));
  };
  return simpson(integrand, theta0, half_pi);
}

// Truncated product of power series with exact integer coefficients.
inline std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// tau(1..N) by multiplying out q * prod (1 - q^n), one linear factor at a
// time, 24 times over.
inline std::vector<mpz_class> tau_by_factors(std::size_t N) {
  std::vector<mpz_class> s(N, 0);
  s[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    for (std::size_t n = 1; n < N; ++n) {
      std::vector<mpz_class> f(N, 0);
      f[0] = 1;
      f[n] = -1;
      s = series_mul(s, f);
    }
  }
  std::vector<mpz_class> tau(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) tau[n] = s[n - 1];
  return tau;
}

// Lattice points of Z^d on the sphere of radius^2 n, by nested enumeration.
inline long count_squares(int d, long n) {
  if (d == 0) return n == 0 ? 1 : 0;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  long total = 0;
  for (long x = -r; x <= r; ++x) total += count_squares(d - 1, n - x * x);
  return total;
}

// CRT lift in [0, prod m) by incremental search.
inline mpz_class crt_nonnegative(const std::vector<mpz_class>& r, const std::vector<mpz_class>& m) {
  mpz_class x = 0;
  mpz_class M = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    // Find x' = x + M t with x' = r_i mod m_i by searching t.
    mpz_class t = 0;
    while (((x + M * t - r[i]) % m[i] + m[i]) % m[i] != 0) ++t;
    x += M * t;
    M *= m[i];
  }
  return x;
}

}  // namespace oracles
