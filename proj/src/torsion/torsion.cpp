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

#include "abeljacobi/torsion/torsion.hpp"

#include <exception>
#include <string>

#include <omp.h>

#include "abeljacobi/errors.hpp"
#include "abeljacobi/numerics/continued_fraction.hpp"
#include "abeljacobi/numerics/roots.hpp"

namespace abeljacobi::torsion {

namespace {

constexpr int kSecantBudget = 60;

void require_odd_prime(long ell) {
  if (ell < 3 || mpz_probab_prime_p(Integer(ell).get_mpz_t(), 30) == 0) {
    throw InvalidArgument("ell must be an odd prime, got " + std::to_string(ell));
  }
}

}  // namespace

TorsionOrbitSet enumerate_torsion_reps(long ell) {
  require_odd_prime(ell);
  TorsionOrbitSet out{ell, {}};
  for (long i = 0; i < ell; ++i) {
    for (long j = 0; j < ell; ++j) {
      if (i == 0 && j == 0) continue;
      const std::pair<long, long> self{i, j};
      const std::pair<long, long> opposite{(ell - i) % ell, (ell - j) % ell};
      if (self < opposite) out.reps.push_back(self);
    }
  }
  return out;
}

CurvePoint invert_torsion_point(const WeierstrassCurve& E, const PeriodLattice& L, long ell, long i,
                                long j) {
  const PrecisionContext ctx = L.context();
  const Complex alpha = (L.omega1() * i + L.omega2() * j) / ell;
  const Real eps = Real::pow2(-ctx.bits() / 4, ctx);
  const CurvePoint seed = analytic::invert_linear_algebra(E, L, alpha, eps).point;
  if (seed.is_infinity()) throw NonConvergence("linear-algebra seed collapsed to the origin");
  const Complex& x = seed.complex().x;
  const Complex& y = seed.complex().y;
  const Complex x_near = x + eps;
  std::vector<Complex> ys = curve::ordinates_from_x(E, x_near);
  const bool second = abs(ys[1] - y) < abs(ys[0] - y);
  const CurvePoint near(x_near, std::move(ys[second ? 1 : 0]));
  return analytic::invert_secant(E, L, alpha, near, seed, kSecantBudget);
}

std::vector<Complex> torsion_x_values_serial(const WeierstrassCurve& E, const PeriodLattice& L,
                                             const TorsionOrbitSet& orbits) {
  std::vector<Complex> xs;
  xs.reserve(orbits.reps.size());
  for (const auto& [i, j] : orbits.reps) {
    xs.push_back(invert_torsion_point(E, L, orbits.ell, i, j).complex().x);
  }
  return xs;
}

std::vector<Complex> torsion_x_values(const WeierstrassCurve& E, const PeriodLattice& L,
                                      const TorsionOrbitSet& orbits, int threads) {
  const long n = static_cast<long>(orbits.reps.size());
  std::vector<std::optional<Complex>> slots(orbits.reps.size());
  std::vector<std::exception_ptr> errors(orbits.reps.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (long k = 0; k < n; ++k) {
    try {
      const auto& [i, j] = orbits.reps[static_cast<std::size_t>(k)];
      slots[static_cast<std::size_t>(k)] = invert_torsion_point(E, L, orbits.ell, i, j).complex().x;
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }

  std::vector<Complex> xs;
  xs.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    xs.push_back(std::move(*slots[k]));
  }
  return xs;
}

RationalPolynomial recover_exact(const ComplexPolynomial& approx, long ell, const Integer& height_bound) {
  const auto& c = approx.coeffs();
  if (c.empty()) return RationalPolynomial();
  const PrecisionContext ctx = c.front().context();
  Real max_mag(ctx);
  for (const Complex& ck : c) max_mag = max(max_mag, abs(ck));
  const Real assembly_tol = Real::pow2(-ctx.bits() / 2, ctx) * max(max_mag, Real(1, ctx));

  std::vector<numerics::Rational> exact;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (abs(c[k].imag()) > assembly_tol) {
      throw ImaginaryResidue("coefficient of T^" + std::to_string(k) + " has imaginary part " +
                             c[k].imag().to_string(6));
    }
    const Real scaled = c[k].real() * ell;
    const Integer nearest = scaled.round_to_integer();
    if (abs(scaled - Real(nearest, ctx)) <= assembly_tol) {
      exact.emplace_back(nearest, Integer(ell));
      exact.back().canonicalize();
      continue;
    }
    std::optional<numerics::Rational> q = numerics::rational_reconstruct(c[k].real().to_rational(), height_bound);
    if (!q) {
      throw ReconstructFailed("no rational of height <= 2^" +
                              std::to_string(mpz_sizeinbase(height_bound.get_mpz_t(), 2) - 1) +
                              " matches the coefficient of T^" + std::to_string(k));
    }
    exact.push_back(std::move(*q));
  }
  return RationalPolynomial(std::move(exact));
}

AnalyticTorsionResult torsion_poly_analytic(const WeierstrassCurve& E, long ell, PrecisionContext ctx,
                                            const TorsionOptions& options) {
  const TorsionOrbitSet orbits = enumerate_torsion_reps(ell);
  int bits = ctx.bits();
  for (int attempt = 0;; ++attempt, bits *= 2) {
    const PrecisionContext work(bits);
    const PeriodLattice L = analytic::periods(E, work);
    std::vector<Complex> xs = options.parallel ? torsion_x_values(E, L, orbits, options.threads)
                                               : torsion_x_values_serial(E, L, orbits);
    const ComplexPolynomial product = numerics::from_roots(xs, work);
    Integer bound;
    if (options.height_bound) {
      bound = *options.height_bound;
    } else {
      mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(bits / 4));
    }
    try {
      return {recover_exact(product, ell, bound), std::move(xs), bits};
    } catch (const ReconstructFailed&) {
      if (attempt == kMaxPrecisionRetries) throw;
    }
  }
}

bool verify_against_algebraic(const WeierstrassCurve& E, long ell, const RationalPolynomial& analytic) {
  return curve::torsion_annihilator_exact(E, ell) == analytic;
}

}  // namespace abeljacobi::torsion
