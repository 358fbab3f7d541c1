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

#ifndef LINBICAT_LATTICE_HPP
#define LINBICAT_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linbicat {

/// A finite complete lattice over named elements.
///
/// The order is stored closed (reflexive-transitive), and pairwise joins and
/// meets are tabulated at construction. Element indices follow declaration
/// order and are what every other module stores; names are only used at the
/// file-format boundary.
class FiniteLattice {
 public:
  using Cover = std::pair<std::string, std::string>;

  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers`. Throws Error on duplicate or unknown names, cycles, or a pair
  /// without a join or meet.
  static FiniteLattice build(std::vector<std::string> elements,
                             std::span<const Cover> covers);

  /// Builds from an already closed order given as a row-major n*n boolean
  /// matrix (`leq[i*n+j]` means element i <= element j).
  static FiniteLattice from_order(std::vector<std::string> elements,
                                  std::vector<std::uint8_t> leq);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool leq(std::string_view a, std::string_view b) const {
    return leq(index_of(a), index_of(b));
  }

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::span<const std::size_t> subset) const;
  std::size_t meet(std::span<const std::size_t> subset) const;
  std::string join_names(std::span<const std::string> subset) const;
  std::string meet_names(std::span<const std::string> subset) const;

  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  /// Hasse diagram in declaration order; `build(names(), covers())`
  /// reproduces this lattice.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Same elements, reversed order.
  FiniteLattice opposite() const;

  bool operator==(const FiniteLattice& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  FiniteLattice() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

}  // namespace linbicat

#endif  // LINBICAT_LATTICE_HPP
