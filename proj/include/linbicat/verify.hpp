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

#ifndef LINBICAT_VERIFY_HPP
#define LINBICAT_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "linbicat/quantale.hpp"
#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

struct TheoremConfig {
  Sampler sampler;
  /// Sets of size 1..max_set for the Q-Rel drivers.
  std::size_t max_set = 2;
  /// Two-point categories sampled in addition to the singletons.
  std::size_t extra_categories = 3;
  /// Candidate dualizer for the Girard and closedness drivers. Defaults to
  /// the quantale's dualizer, then its par unit, then its bottom.
  std::optional<Element> dualizer;
};

/// Registered driver ids, in a fixed order.
std::span<const std::string_view> theorem_names();

/// The candidate dualizer the drivers use for `q`.
Element theorem_dualizer(const Quantale& q, const TheoremConfig& cfg);

/// Runs one driver. Two-way drivers report theorem.forward and
/// theorem.backward; the closedness drivers report theorem.forward only.
/// Throws unknown-theorem, no-par-structure for linear drivers on a
/// quantale without par, and search-space-too-large for quantaloid drivers
/// on an infinite carrier.
LawReport run_theorem(std::string_view id, const Quantale& q, const TheoremConfig& cfg = {});
/// Throws unknown-catalog-entry.
LawReport run_theorem(std::string_view id, std::string_view catalog_name,
                      const TheoremConfig& cfg = {});

}  // namespace linbicat

#endif  // LINBICAT_VERIFY_HPP
