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

#include "abeljacobi/numerics/roots.hpp"

#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

ComplexPolynomial from_roots(const std::vector<Complex>& roots, PrecisionContext ctx) {
  std::vector<Complex> c{Complex(1, ctx)};
  for (const Complex& r : roots) {
    c.push_back(Complex(ctx));
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      c[k] -= r * c[k - 1];
    }
  }
  // c holds the coefficients highest degree first.
  return ComplexPolynomial(std::vector<Complex>(c.rbegin(), c.rend()));
}

namespace {

constexpr int kBoundBits = 64;

// p(z), p'(z) and sum |p_k| |z|^k in one Horner pass.
struct Evaluation {
  Complex value;
  Complex slope;
  Real magnitude;
};

Evaluation evaluate(const std::vector<Complex>& c, const std::vector<Real>& abs_c, const Complex& z) {
  const PrecisionContext ctx = z.context();
  Complex value(ctx);
  Complex slope(ctx);
  Real magnitude(ctx);
  const Real az = abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    slope *= z;
    slope += value;
    value *= z;
    value += c[k];
    magnitude *= az;
    magnitude += abs_c[k];
  }
  return {std::move(value), std::move(slope), std::move(magnitude)};
}

Real pow_max1(const Real& r, long n) {
  Real base = max(r, Real(1, r.context()));
  Real out(1, r.context());
  for (long k = 0; k < n; ++k) out *= base;
  return out;
}

}  // namespace

Real cauchy_bound(const ComplexPolynomial& p) {
  if (p.degree() < 1) throw InvalidArgument("cauchy_bound needs degree >= 1");
  const PrecisionContext lo(kBoundBits);
  const auto& c = p.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Real> a;
  for (const Complex& ck : c) {
    Real m(lo);
    mpfr_hypot(m.get(), ck.real().get(), ck.imag().get(), MPFR_RNDU);
    a.push_back(std::move(m));
  }
  // Fujiwara's bound 2 max (a_k / a_n)^(1/(n-k)) lies above the root.
  Real upper(lo);
  bool all_zero = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].is_zero()) continue;
    all_zero = false;
    Real ratio = a[k] / a[n];
    Real root(lo);
    mpfr_rootn_ui(root.get(), ratio.get(), static_cast<unsigned long>(n - k), MPFR_RNDU);
    upper = max(upper, root);
  }
  if (all_zero) return Real(p.leading().context());
  upper = ldexp(upper, 1);
  // Newton from above decreases monotonically to the positive root of the
  // convex-beyond-the-root Cauchy polynomial.
  Real x = upper;
  for (int it = 0; it < 200; ++it) {
    Real f = a[n];
    Real df(lo);
    for (std::size_t k = n; k-- > 0;) {
      df = df * x + f;
      f = f * x - a[k];
    }
    if (f.sign() <= 0 || df.sign() <= 0) break;
    Real step = f / df;
    x -= step;
    if (step <= ldexp(x, -40)) break;
  }
  Real widened = x * Real::from_double(1.0001, lo) + Real::pow2(-60, lo);
  Real out(p.leading().context());
  mpfr_set(out.get(), widened.get(), MPFR_RNDU);
  return out;
}

std::vector<Complex> poly_roots(const ComplexPolynomial& p) {
  const long deg = p.degree();
  if (deg < 1) throw InvalidArgument("poly_roots needs a polynomial of degree >= 1");
  const PrecisionContext ctx = p.leading().context();
  const auto& c = p.coeffs();
  if (deg == 1) return {-c[0] / c[1]};

  std::vector<Real> abs_c;
  Real max_coeff(ctx);
  for (const Complex& ck : c) {
    abs_c.push_back(abs(ck));
    max_coeff = max(max_coeff, abs_c.back());
  }
  const Real radius = cauchy_bound(p);
  const std::size_t n = static_cast<std::size_t>(deg);
  std::vector<Complex> z;
  if (radius.is_zero()) return std::vector<Complex>(n, Complex(ctx));
  const Real two_pi = ldexp(Real::pi(ctx), 1);
  for (std::size_t k = 0; k < n; ++k) {
    Real theta = two_pi * static_cast<long>(k) / static_cast<long>(n) + Real::from_double(0.4, ctx);
    Real r = radius * (Real(1, ctx) + Real::from_double(0.01, ctx) * static_cast<long>(k % 3));
    z.push_back(Complex::polar(r, theta));
  }

  const Real step_tol = Real::pow2(-ctx.bits() + 4, ctx);
  const Real round_tol = Real::pow2(-ctx.bits() + 6, ctx);
  const Real one(1, ctx);
  std::vector<bool> done(n, false);

  auto sweep = [&](bool polish) {
    std::size_t remaining = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] && !polish) continue;
      Evaluation e = evaluate(c, abs_c, z[k]);
      if (e.value.is_zero()) {
        done[k] = true;
        continue;
      }
      if (abs(e.value) <= round_tol * e.magnitude && !polish) {
        done[k] = true;
        continue;
      }
      if (e.slope.is_zero()) {
        z[k] += Complex(step_tol * max(one, abs(z[k])), step_tol);
        ++remaining;
        continue;
      }
      Complex ratio = e.value / e.slope;
      Complex s(ctx);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex d = z[k] - z[j];
        if (!d.is_zero()) s += Complex(1, ctx) / d;
      }
      Complex denom = Complex(1, ctx) - ratio * s;
      Complex w = denom.is_zero() ? ratio : ratio / denom;
      z[k] -= w;
      if (abs(w) <= step_tol * max(one, abs(z[k]))) {
        done[k] = true;
      } else if (!polish) {
        ++remaining;
      }
    }
    return remaining;
  };

  int sweeps = 0;
  while (sweep(false) > 0) {
    if (++sweeps >= kAberthMaxSweeps) {
      throw NonConvergence("polynomial root finder exhausted " + std::to_string(kAberthMaxSweeps) +
                           " sweeps");
    }
  }
  sweep(true);

  const Real tol = Real::tolerance(ctx);
  for (const Complex& r : z) {
    const Real residual = abs(p(r));
    if (residual > tol * max_coeff * pow_max1(abs(r), deg)) {
      throw NonConvergence("root residual above tolerance");
    }
  }
  return z;
}

std::vector<Complex> truncated_series_roots(const std::function<Complex(std::size_t)>& coeff,
                                            std::size_t K, PrecisionContext ctx) {
  if (K < 1) throw InvalidArgument("truncation order must be >= 1");
  std::vector<Complex> c;
  for (std::size_t k = 0; k <= K; ++k) {
    Complex ck = coeff(k);
    if (ck.bits() != ctx.bits()) throw PrecisionMismatch("series coefficient precision differs");
    c.push_back(std::move(ck));
  }
  ComplexPolynomial p(std::move(c));
  if (p.degree() < 1) return {};
  const Real limit = ldexp(Real(1, ctx), -1) + Real::tolerance(ctx);
  std::vector<Complex> out;
  for (Complex& r : poly_roots(p)) {
    if (abs(r) <= limit) out.push_back(std::move(r));
  }
  return out;
}

std::size_t default_truncation_order(PrecisionContext ctx) {
  return static_cast<std::size_t>(ctx.bits() - PrecisionContext::kGuardBits);
}

}  // namespace abeljacobi::numerics
