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

#include "abeljacobi/analytic/lattice.hpp"

namespace abeljacobi::analytic {

// Carlson's symmetric integral R_F(x, y, z) by duplication. Arguments off
// the closed negative real axis, at most one of them zero.
Complex carlson_rf(Complex x, Complex y, Complex z);

// Abel-Jacobi image of P - O: the integral of dx/(2y + a1 x + a3) from the
// point at infinity to P, as a canonical residue mod L.
LatticeResidue elliptic_log(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P);

// The same integral before reduction (one fixed representative).
Complex elliptic_log_value(const WeierstrassCurve& E, const PeriodLattice& L, const CurvePoint& P);

}  // namespace abeljacobi::analytic
