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

#ifndef LINBICAT_CATALOG_HPP
#define LINBICAT_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linbicat/quantale.hpp"

namespace linbicat {

/// Properties of a structure, computed by the checkers rather than declared.
struct Classification {
  bool quantale = false;
  bool ld = false;
  /// All cyclic dualizing elements (window-restricted for Z∞).
  std::vector<Element> dualizers;
  /// A dualizer whose derived par coincides with the stored par on the
  /// default domain, when the structure is LD.
  std::optional<Element> ld_dualizer;

  bool girard() const { return !dualizers.empty(); }
  bool girard_ld() const { return ld && ld_dualizer.has_value(); }
};

Classification classify(const Quantale& q, int window = 10);

struct CatalogEntry {
  std::string name;
  std::string summary;
  Quantale quantale;
  /// Entries built by perturbing a sound entry.
  bool broken = false;
};

/// Built-in structures in a fixed order: sound entries first, then their
/// broken variants.
const std::vector<CatalogEntry>& catalog();
/// Throws unknown-catalog-entry.
const CatalogEntry& catalog_entry(std::string_view name);

// Individual constructors, also used by the tests.
Quantale one_point_quantale();
Quantale boolean_quantale();
/// {0, m, 1} with tensor meet (unit 1) and par join (unit 0).
Quantale three_chain_frame();
/// {0, x, y, 1} with tensor meet and par join.
Quantale diamond_frame();
Quantale shift_z2();
Quantale shift_z3();
/// Sets the par of (top, top) to the bottom; needs at least two elements.
Quantale break_par(const Quantale& q);

}  // namespace linbicat

#endif  // LINBICAT_CATALOG_HPP
