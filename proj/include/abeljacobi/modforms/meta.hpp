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

namespace abeljacobi::modforms {

struct ModularCurveMeta {
  long index;
  long cusps;
  long genus;
};

// (l^2 - 1, l - 1, (l - 5)(l - 7)/24). Throws InvalidArgument for l < 5 and
// NonIntegralGenus when the genus formula is not a non-negative integer.
ModularCurveMeta modular_curve_meta(long ell);

}  // namespace abeljacobi::modforms
