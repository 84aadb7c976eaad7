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

#include "abeljacobi/modforms/meta.hpp"

#include <string>

#include "abeljacobi/errors.hpp"

namespace abeljacobi::modforms {

ModularCurveMeta modular_curve_meta(long ell) {
  if (ell < 5) throw InvalidArgument("ell must be at least 5");
  if (ell > 3037000499L) throw InvalidArgument("ell too large");
  const long numerator = (ell - 5) * (ell - 7);
  if (numerator < 0 || numerator % 24 != 0) {
    throw NonIntegralGenus("(ell-5)(ell-7)/24 is not an integer for ell = " + std::to_string(ell));
  }
  return {ell * ell - 1, ell - 1, numerator / 24};
}

}  // namespace abeljacobi::modforms
