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

#include <stdexcept>
#include <string>

namespace abeljacobi {

// Base of every error the library throws. `kind()` is a stable identifier
// used by the CLI when it reports failures as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Failures of a numerical procedure (iteration budgets, precision too low).
// Retrying with more precision or different parameters may succeed.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

#define ABELJACOBI_DEFINE_ERROR(Name, Base)                          \
  class Name : public Base {                                         \
   public:                                                           \
    explicit Name(const std::string& what) : Base(#Name, what) {}    \
  }

ABELJACOBI_DEFINE_ERROR(InvalidArgument, Error);
ABELJACOBI_DEFINE_ERROR(ParseError, Error);
ABELJACOBI_DEFINE_ERROR(PrecisionMismatch, Error);
ABELJACOBI_DEFINE_ERROR(MixedScalarKinds, Error);
ABELJACOBI_DEFINE_ERROR(SingularCurve, Error);
ABELJACOBI_DEFINE_ERROR(BadModuli, Error);
ABELJACOBI_DEFINE_ERROR(BadFactorization, Error);
ABELJACOBI_DEFINE_ERROR(InsufficientModuli, Error);
ABELJACOBI_DEFINE_ERROR(UnsupportedD, Error);
ABELJACOBI_DEFINE_ERROR(NonIntegralGenus, Error);

ABELJACOBI_DEFINE_ERROR(NonConvergence, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(NoSolution, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(DegenerateLattice, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(DegeneratePerturbation, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(TargetIsOrigin, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(ReconstructFailed, NumericalFailure);
ABELJACOBI_DEFINE_ERROR(ImaginaryResidue, NumericalFailure);

#undef ABELJACOBI_DEFINE_ERROR

}  // namespace abeljacobi
