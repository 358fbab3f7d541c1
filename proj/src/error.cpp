// Copyright 2026 The linbicat Authors.
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

#include "linbicat/error.hpp"

namespace linbicat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateName: return "duplicate-name";
    case ErrorKind::kUnknownName: return "unknown-name";
    case ErrorKind::kCyclicOrder: return "cyclic-order";
    case ErrorKind::kNotALattice: return "not-a-lattice";
    case ErrorKind::kUnknownElement: return "unknown-element";
    case ErrorKind::kSetMismatch: return "set-mismatch";
    case ErrorKind::kQuantaleMismatch: return "quantale-mismatch";
    case ErrorKind::kNoParStructure: return "no-par-structure";
    case ErrorKind::kNotGirard: return "not-girard";
    case ErrorKind::kNotCommutative: return "not-commutative";
    case ErrorKind::kNotCancellative: return "not-cancellative";
    case ErrorKind::kShiftNotInvertible: return "shift-not-invertible";
    case ErrorKind::kInvalidMonoid: return "invalid-monoid";
    case ErrorKind::kHomMismatch: return "hom-mismatch";
    case ErrorKind::kFamilyShapeMismatch: return "family-shape-mismatch";
    case ErrorKind::kSearchSpaceTooLarge: return "search-space-too-large";
    case ErrorKind::kShapeMismatch: return "shape-mismatch";
    case ErrorKind::kUnknownTheorem: return "unknown-theorem";
    case ErrorKind::kUnknownCatalogEntry: return "unknown-catalog-entry";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kArithmeticOverflow: return "arithmetic-overflow";
  }
  return "error";
}

}  // namespace linbicat
