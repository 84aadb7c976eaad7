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

#include "abeljacobi/analytic/inversion.hpp"

#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::analytic {

using curve::ordinates_from_x;

namespace {

const Complex& x_of(const CurvePoint& P) { return P.complex().x; }
const Complex& y_of(const CurvePoint& P) { return P.complex().y; }

CurvePoint as_affine(const CurvePoint& P, PrecisionContext ctx, const char* name) {
  if (P.is_infinity()) {
    throw InvalidArgument(std::string("secant start ") + name + " must be an affine point");
  }
  return P.to_complex(ctx);
}

CurvePoint with_closest_ordinate(const WeierstrassCurve& E, const Complex& x, const Complex& y_ref) {
  std::vector<Complex> ys = ordinates_from_x(E, x);
  const bool second = abs(ys[1] - y_ref) < abs(ys[0] - y_ref);
  return CurvePoint(x, std::move(ys[second ? 1 : 0]));
}

// f(P) = canonical log(P) - target. Close to the solution the smallest
// representative is used instead, so f stays continuous when the solution
// sits on an edge of the fundamental cell.
class Residual {
 public:
  Residual(const WeierstrassCurve& E, const PeriodLattice& L, Complex target)
      : E_(E), L_(L), target_(std::move(target)), near_(L.shortest_vector() / 32L) {}

  Complex operator()(const CurvePoint& P) const {
    Complex raw = L_.reduce(elliptic_log_value(E_, L_, P)).value - target_;
    Complex small = L_.smallest_representative(raw);
    return abs(small) < near_ ? small : raw;
  }

 private:
  const WeierstrassCurve& E_;
  const PeriodLattice& L_;
  Complex target_;
  Real near_;
};

struct SecantRun {
  CurvePoint point;
  Real residual;
};

SecantRun secant_run(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& target,
                     CurvePoint P0, CurvePoint P1, int K, const Real& tolerance) {
  const Residual f(E, L, target);
  Complex f0 = f(P0);
  Complex f1 = f(P1);
  for (int k = 0;; ++k) {
    if (L.distance(f1) <= tolerance || k == K) break;
    const Complex df = f1 - f0;
    if (df.is_zero()) break;
    const Complex x2 = x_of(P1) - f1 * (x_of(P1) - x_of(P0)) / df;
    if (!x2.is_finite()) break;
    CurvePoint P2 = with_closest_ordinate(E, x2, y_of(P0));
    P0 = std::move(P1);
    f0 = std::move(f1);
    P1 = std::move(P2);
    f1 = f(P1);
  }
  Real residual = L.distance(f1);
  return {std::move(P1), std::move(residual)};
}

Complex checked_target(const PeriodLattice& L, const Complex& alpha) {
  if (alpha.bits() != L.context().bits()) throw PrecisionMismatch("target and lattice precision differ");
  if (L.distance(alpha) <= L.tolerance()) {
    throw TargetIsOrigin("target is a lattice point; the solution is the point at infinity");
  }
  return L.reduce(alpha).value;
}

}  // namespace

Real direct_accuracy(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P,
                     const Complex& alpha) {
  return L.distance(elliptic_log_value(E, L, P) - alpha);
}

CurvePoint base_point(const WeierstrassCurve& E, PrecisionContext ctx) {
  const Real clearance = Real::pow2(-4, ctx);
  const std::vector<Rational> candidates{0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
  for (const Rational& xq : candidates) {
    const Complex x(xq, ctx);
    std::vector<Complex> ys = ordinates_from_x(E, x);
    if (abs(ys[0] - ys[1]) < clearance) continue;
    const bool second = abs(ys[1]) < abs(ys[0]);
    return CurvePoint(x, std::move(ys[second ? 1 : 0]));
  }
  throw NoSolution("no admissible base point among the candidate abscissae");
}

CurvePoint invert_secant(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& alpha,
                         const CurvePoint& P0, const CurvePoint& P1, int K,
                         const std::optional<Real>& tolerance) {
  if (K < 0) throw InvalidArgument("iteration count must be non-negative");
  const PrecisionContext ctx = L.context();
  const Complex target = checked_target(L, alpha);
  CurvePoint A = as_affine(P0, ctx, "P0");
  CurvePoint B = as_affine(P1, ctx, "P1");
  if (x_of(A) == x_of(B)) throw InvalidArgument("secant starts need distinct x-coordinates");
  const Real tol = tolerance ? tolerance->rounded(ctx) : L.tolerance();
  SecantRun run = secant_run(E, L, target, std::move(A), std::move(B), K, tol);
  if (run.residual > tol) {
    throw NonConvergence("secant residual " + run.residual.to_string(6) + " after " + std::to_string(K) +
                         " iterations");
  }
  return std::move(run.point);
}

CurvePoint invert_continuation(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& alpha,
                               int steps) {
  if (steps < 1) throw InvalidArgument("continuation needs at least one stage");
  const PrecisionContext ctx = L.context();
  const Complex target = checked_target(L, alpha);
  const CurvePoint start = base_point(E, ctx);
  const CurvePoint before = with_closest_ordinate(E, x_of(start) + Real::parse("0.1", ctx), y_of(start));
  const Complex alpha0 = elliptic_log(E, L, start).value;
  const Complex span = target - alpha0;
  const Real tol = L.tolerance();
  if (L.distance(span) <= tol) return start;

  int stages = steps;
  for (int attempt = 0; attempt <= kMaxStageDoublings; ++attempt, stages *= 2) {
    const Real stage_tol = abs(span) / static_cast<long>(stages) / 64L;
    CurvePoint prev = before;
    CurvePoint cur = start;
    bool ok = true;
    for (int j = 1; j <= stages && ok; ++j) {
      const Complex aj = alpha0 + span * static_cast<long>(j) / static_cast<long>(stages);
      const bool last = j == stages;
      const int budget = last ? kFinalStageIterations + kFinalRefinementIterations : kStageIterations;
      SecantRun run = secant_run(E, L, aj, prev, cur, budget, tol);
      ok = run.residual <= (last ? tol : stage_tol);
      prev = std::move(cur);
      cur = std::move(run.point);
    }
    if (ok) return cur;
  }
  throw NonConvergence("continuation failed with up to " + std::to_string(stages / 2) + " stages");
}

LinearAlgebraInversion invert_linear_algebra(const WeierstrassCurve& E, const PeriodLattice& L,
                                             const Complex& alpha, const std::optional<Real>& eps) {
  const PrecisionContext ctx = L.context();
  const Real e = eps ? eps->rounded(ctx) : Real::pow2(-ctx.bits() / 2, ctx);
  if (e.sign() <= 0) throw InvalidArgument("perturbation size must be positive");
  const Complex target = L.reduce(alpha).value;

  const CurvePoint P0 = base_point(E, ctx);
  const CurvePoint P1 = with_closest_ordinate(E, x_of(P0) + e, y_of(P0));
  const CurvePoint P2 = with_closest_ordinate(E, x_of(P0) + Complex(Real(ctx), e), y_of(P0));
  const Complex log0 = elliptic_log_value(E, L, P0);
  const Complex alpha1 = L.smallest_representative(elliptic_log_value(E, L, P1) - log0);
  const Complex alpha2 = L.smallest_representative(elliptic_log_value(E, L, P2) - log0);
  const Real det = alpha1.real() * alpha2.imag() - alpha1.imag() * alpha2.real();
  if (abs(det) * 100L < e * e) {
    throw DegeneratePerturbation("perturbed logarithms are nearly R-dependent");
  }
  LatticeCoordinates c = real_coordinates(target, alpha1, alpha2);
  Integer n1 = c.u.trunc_to_integer();
  Integer n2 = c.v.trunc_to_integer();
  const CurvePoint Q1 = curve::sub(E, P1, P0);
  const CurvePoint Q2 = curve::sub(E, P2, P0);
  CurvePoint point = curve::add(E, curve::mul_scalar(E, Q1, n1), curve::mul_scalar(E, Q2, n2));
  return {std::move(point), std::move(c.u), std::move(c.v), std::move(n1), std::move(n2)};
}

}  // namespace abeljacobi::analytic
