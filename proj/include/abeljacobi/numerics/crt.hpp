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

#include <utility>
#include <vector>

#include "abeljacobi/numerics/exact.hpp"

namespace abeljacobi::numerics {

struct Residue {
  Integer r;
  Integer m;
};

// The unique x with |x| <= bound and x = r_i mod m_i for every i.
// Throws BadModuli unless the moduli are positive, pairwise coprime and
// their product exceeds 2*bound; NoSolution when the symmetric lift falls
// outside [-bound, bound].
Integer crt_reconstruct_signed(const std::vector<Residue>& residues, const Integer& bound);

}  // namespace abeljacobi::numerics
