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

#include "abeljacobi/numerics/crt.hpp"

#include "abeljacobi/errors.hpp"

namespace abeljacobi::numerics {

Integer crt_reconstruct_signed(const std::vector<Residue>& residues, const Integer& bound) {
  if (bound < 0) throw InvalidArgument("bound must be non-negative");
  Integer modulus = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i].m < 1) throw BadModuli("moduli must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(residues[i].m, residues[j].m) != 1) {
        throw BadModuli("moduli " + residues[j].m.get_str() + " and " + residues[i].m.get_str() +
                        " are not coprime");
      }
    }
    modulus *= residues[i].m;
  }
  if (modulus <= 2 * bound) throw BadModuli("product of moduli must exceed twice the bound");

  Integer x = 0;
  Integer partial = 1;
  for (const Residue& res : residues) {
    Integer inverse;
    mpz_invert(inverse.get_mpz_t(), Integer(partial % res.m).get_mpz_t(), res.m.get_mpz_t());
    Integer t = ((res.r - x) * inverse) % res.m;
    if (t < 0) t += res.m;
    x += partial * t;
    partial *= res.m;
  }
  if (2 * x > modulus) x -= modulus;
  if (abs(x) > bound) throw NoSolution("CRT lift " + x.get_str() + " exceeds the bound");
  return x;
}

}  // namespace abeljacobi::numerics
