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

#include <optional>

#include "abeljacobi/analytic/elliptic_log.hpp"

namespace abeljacobi::analytic {

inline constexpr int kContinuationStages = 10;
inline constexpr int kStageIterations = 5;
inline constexpr int kFinalStageIterations = 10;
inline constexpr int kFinalRefinementIterations = 20;
inline constexpr int kMaxStageDoublings = 6;

// |log(P) - alpha| measured in C / L.
Real direct_accuracy(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P,
                     const Complex& alpha);

// Rational starting point of the continuation and linear-algebra methods:
// x = 0 with the ordinate of least modulus, moved to the first of
// 1, -1, 2, -2, 1/2, -1/2, 3, -3 when 2y + a1 x + a3 is near zero there.
CurvePoint base_point(const WeierstrassCurve& E, PrecisionContext ctx);

// Secant iteration on x -> log((x, y(x))) - alpha. Each new ordinate is the
// root of the curve quadratic closer to the y of the older of the two
// previous iterates. Runs at most K updates and returns as soon as the
// direct accuracy is within `tolerance` (default L.tolerance()).
// Throws TargetIsOrigin when alpha is in L, NonConvergence otherwise.
CurvePoint invert_secant(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& alpha,
                         const CurvePoint& P0, const CurvePoint& P1, int K,
                         const std::optional<Real>& tolerance = std::nullopt);

// Walks alpha_j = alpha_0 + (j/steps)(alpha - alpha_0) from alpha_0 =
// log(base point), solving each stage by a short secant run seeded with
// the two previous stage solutions. Stages that miss their tolerance
// restart the walk with twice as many stages.
CurvePoint invert_continuation(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& alpha,
                               int steps = kContinuationStages);

struct LinearAlgebraInversion {
  CurvePoint point;
  // Real coordinates of alpha in the basis (alpha1, alpha2) of log
  // perturbations, and their truncations.
  Real c1;
  Real c2;
  Integer n1;
  Integer n2;
};

// P0 = base point, P1 = (x0 + eps, .), P2 = (x0 + i eps, .);
// returns n1 (P1 - P0) + n2 (P2 - P0) with n_k the truncated coordinates of
// alpha. Default eps = 2^(-bits/2). Throws DegeneratePerturbation when
// |det(alpha1, alpha2)| < eps^2/100.
LinearAlgebraInversion invert_linear_algebra(const WeierstrassCurve& E, const PeriodLattice& L,
                                             const Complex& alpha,
                                             const std::optional<Real>& eps = std::nullopt);

}  // namespace abeljacobi::analytic
