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

#include "abeljacobi/modforms/tau.hpp"

#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::modforms {

namespace {

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0; }

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Real real_pow(unsigned long base, const Real& exponent) {
  Real out(exponent.context());
  Real b(static_cast<long>(base), exponent.context());
  mpfr_pow(out.get(), b.get(), exponent.get(), MPFR_RNDN);
  return out;
}

}  // namespace

IntegerSeries eta_product_tau(std::size_t N, int threads) {
  if (N < 1) throw InvalidArgument("eta product needs N >= 1");
  // prod (1 - q^n) to order N - 1, raised to the 24th power, shifted by q.
  IntegerSeries eta = IntegerSeries::one(N - 1);
  for (std::size_t n = 1; n <= N - 1; ++n) eta.multiply_by_one_minus_q_power(n);
  const IntegerSeries eta24 = power(eta, 24, threads);
  IntegerSeries tau(N);
  for (std::size_t n = 1; n <= N; ++n) tau[n] = eta24[n - 1];
  return tau;
}

Factorization factorize(unsigned long n) {
  if (n == 0) throw InvalidArgument("cannot factor 0");
  Factorization out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({Integer(p), e});
  }
  if (n > 1) out.push_back({Integer(n), 1});
  return out;
}

Integer tau_at(const Integer& n, const Factorization& factorization, const IntegerSeries& table) {
  if (n < 1) throw BadFactorization("tau is defined for n >= 1");
  Integer product = 1;
  for (std::size_t i = 0; i < factorization.size(); ++i) {
    const auto& [p, e] = factorization[i];
    if (!is_prime(p)) throw BadFactorization(p.get_str() + " is not prime");
    if (e == 0) throw BadFactorization("exponent of " + p.get_str() + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (factorization[j].p == p) throw BadFactorization("prime " + p.get_str() + " repeated");
    }
    product *= pow_ui(p, e);
  }
  if (product != n) throw BadFactorization("factorization multiplies to " + product.get_str());

  Integer tau = 1;
  for (const auto& [p, e] : factorization) {
    if (p > table.order()) throw InvalidArgument("tau table too short for prime " + p.get_str());
    const Integer& tp = table[p.get_ui()];
    const Integer p11 = pow_ui(p, 11);
    Integer prev = 1;
    Integer cur = tp;
    for (unsigned long r = 2; r <= e; ++r) {
      Integer next = tp * cur - p11 * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    tau *= cur;
  }
  return tau;
}

Integer tau_at(const Integer& n, const Factorization& factorization) {
  Integer largest = 1;
  for (const auto& f : factorization) {
    if (f.p > largest) largest = f.p;
  }
  if (!largest.fits_ulong_p()) throw BadFactorization("prime too large");
  return tau_at(n, factorization, eta_product_tau(std::max(1UL, largest.get_ui())));
}

bool deligne_check(unsigned long p, const Integer& tau_p) {
  return tau_p * tau_p <= 4 * pow_ui(Integer(p), 11);
}

bool deligne_check(unsigned long p) {
  if (!is_prime(Integer(p))) throw InvalidArgument(std::to_string(p) + " is not prime");
  return deligne_check(p, eta_product_tau(p)[p]);
}

Integer tau_crt_recover(unsigned long p, const std::vector<numerics::Residue>& residues) {
  if (!is_prime(Integer(p))) throw InvalidArgument(std::to_string(p) + " is not prime");
  Integer modulus = 1;
  for (const auto& res : residues) {
    if (res.m == p) throw BadModuli("modulus equals p");
    modulus *= res.m;
  }
  const Integer p11 = pow_ui(Integer(p), 11);
  if (modulus * modulus <= 16 * p11) {
    throw InsufficientModuli("product of moduli must exceed 4 p^(11/2)");
  }
  Integer bound;
  const Integer four_p11 = 4 * p11;
  mpz_sqrt(bound.get_mpz_t(), four_p11.get_mpz_t());
  return numerics::crt_reconstruct_signed(residues, bound);
}

std::pair<Real, Real> dirichlet_euler_check(const Real& s, std::size_t N) {
  const numerics::PrecisionContext ctx = s.context();
  if (!(s * 2L > 13L)) throw InvalidArgument("s must exceed 13/2");
  const IntegerSeries tau = eta_product_tau(std::max<std::size_t>(N, 1));
  Real lhs(ctx);
  for (std::size_t n = 1; n <= N; ++n) lhs += Real(tau[n], ctx) / real_pow(n, s);
  Real rhs(1, ctx);
  const Real weight = Real(11, ctx) - s * 2L;
  for (unsigned long p = 2; p <= N; ++p) {
    if (!is_prime(Integer(p))) continue;
    const Real factor = Real(1, ctx) - Real(tau[p], ctx) / real_pow(p, s) + real_pow(p, weight);
    rhs /= factor;
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace abeljacobi::modforms
