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

#ifndef LINBICAT_ERROR_HPP
#define LINBICAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace linbicat {

/// Failure categories raised by constructors and operations. Law failures are
/// never errors; they are reported through LawReport.
enum class ErrorKind {
  kDuplicateName,
  kUnknownName,
  kCyclicOrder,
  kNotALattice,
  kUnknownElement,
  kSetMismatch,
  kQuantaleMismatch,
  kNoParStructure,
  kNotGirard,
  kNotCommutative,
  kNotCancellative,
  kShiftNotInvertible,
  kInvalidMonoid,
  kHomMismatch,
  kFamilyShapeMismatch,
  kSearchSpaceTooLarge,
  kShapeMismatch,
  kUnknownTheorem,
  kUnknownCatalogEntry,
  kParse,
  kArithmeticOverflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace linbicat

#endif  // LINBICAT_ERROR_HPP
