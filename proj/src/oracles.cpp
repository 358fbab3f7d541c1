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

#include "linbicat/oracles.hpp"

#include "linbicat/error.hpp"

namespace linbicat::oracle {

namespace {

template <class M>
void check_shapes(const M& a, const M& b, std::size_t inner, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != inner) throw Error(ErrorKind::kShapeMismatch, "left factor rows differ from inner size");
  if (b.size() != inner) throw Error(ErrorKind::kShapeMismatch, "inner dimensions differ");
  for (const auto& row : b)
    if (row.size() != cols) throw Error(ErrorKind::kShapeMismatch, "right factor rows differ from column count");
}

bool less(const ExtInt& a, const ExtInt& b) {
  using T = ExtInt::Tag;
  if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
  return a.tag == T::kFinite && a.value < b.value;
}

}  // namespace

BoolMatrix bool_compose(const BoolMatrix& r, const BoolMatrix& s, std::size_t inner,
                        std::size_t cols, Quantifier q) {
  check_shapes(r, s, inner, cols);
  BoolMatrix out(r.size(), std::vector<bool>(cols));
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t z = 0; z < cols; ++z) {
      bool v = q == Quantifier::kForall;
      for (std::size_t y = 0; y < inner; ++y) {
        if (q == Quantifier::kExists) {
          v = v || (r[x][y] && s[y][z]);
        } else {
          v = v && (r[x][y] || s[y][z]);
        }
      }
      out[x][z] = v;
    }
  return out;
}

std::string to_string(const ExtInt& v) {
  switch (v.tag) {
    case ExtInt::Tag::kMinusInf:
      return "-inf";
    case ExtInt::Tag::kPlusInf:
      return "+inf";
    default:
      return std::to_string(v.value);
  }
}

ExtMatrix maxplus(const ExtMatrix& a, const ExtMatrix& b, std::size_t inner, std::size_t cols) {
  check_shapes(a, b, inner, cols);
  ExtMatrix out(a.size(), std::vector<ExtInt>(cols, ExtInt::minus_inf()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t z = 0; z < cols; ++z)
      for (std::size_t y = 0; y < inner; ++y) {
        const ExtInt& l = a[x][y];
        const ExtInt& r = b[y][z];
        ExtInt sum;
        if (l.tag == ExtInt::Tag::kMinusInf || r.tag == ExtInt::Tag::kMinusInf) {
          sum = ExtInt::minus_inf();
        } else if (l.tag == ExtInt::Tag::kPlusInf || r.tag == ExtInt::Tag::kPlusInf) {
          sum = ExtInt::plus_inf();
        } else {
          sum = ExtInt::of(l.value + r.value);
        }
        if (less(out[x][z], sum)) out[x][z] = sum;
      }
  return out;
}

ExtMatrix minplus(const ExtMatrix& a, const ExtMatrix& b, std::size_t inner, std::size_t cols) {
  check_shapes(a, b, inner, cols);
  ExtMatrix out(a.size(), std::vector<ExtInt>(cols, ExtInt::plus_inf()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t z = 0; z < cols; ++z)
      for (std::size_t y = 0; y < inner; ++y) {
        const ExtInt& l = a[x][y];
        const ExtInt& r = b[y][z];
        ExtInt sum;
        if (l.tag == ExtInt::Tag::kPlusInf || r.tag == ExtInt::Tag::kPlusInf) {
          sum = ExtInt::plus_inf();
        } else if (l.tag == ExtInt::Tag::kMinusInf || r.tag == ExtInt::Tag::kMinusInf) {
          sum = ExtInt::minus_inf();
        } else {
          sum = ExtInt::of(l.value + r.value);
        }
        if (less(sum, out[x][z])) out[x][z] = sum;
      }
  return out;
}

}  // namespace linbicat::oracle
