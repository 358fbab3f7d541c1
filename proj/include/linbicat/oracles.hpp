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

#ifndef LINBICAT_ORACLES_HPP
#define LINBICAT_ORACLES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace linbicat::oracle {

// Reference implementations that share no code with the quantale backends.

using BoolMatrix = std::vector<std::vector<bool>>;

enum class Quantifier { kExists, kForall };

/// kExists: (x,z) iff some y has R(x,y) and S(y,z).
/// kForall: (x,z) iff every y has R(x,y) or S(y,z).
/// `inner` and `cols` are the shared and output dimensions, given
/// explicitly because rows cannot carry them when a dimension is zero.
/// Throws shape-mismatch.
BoolMatrix bool_compose(const BoolMatrix& r, const BoolMatrix& s, std::size_t inner,
                        std::size_t cols, Quantifier q);

/// An extended integer as a tagged value.
struct ExtInt {
  enum class Tag { kMinusInf, kFinite, kPlusInf };
  Tag tag = Tag::kFinite;
  std::int64_t value = 0;

  static ExtInt minus_inf() { return {Tag::kMinusInf, 0}; }
  static ExtInt plus_inf() { return {Tag::kPlusInf, 0}; }
  static ExtInt of(std::int64_t v) { return {Tag::kFinite, v}; }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
};

std::string to_string(const ExtInt& v);

using ExtMatrix = std::vector<std::vector<ExtInt>>;

/// max over y of A(x,y) + B(y,z), where -∞ + anything = -∞.
ExtMatrix maxplus(const ExtMatrix& a, const ExtMatrix& b, std::size_t inner, std::size_t cols);
/// min over y of A(x,y) + B(y,z), where +∞ + anything = +∞.
ExtMatrix minplus(const ExtMatrix& a, const ExtMatrix& b, std::size_t inner, std::size_t cols);

}  // namespace linbicat::oracle

#endif  // LINBICAT_ORACLES_HPP
