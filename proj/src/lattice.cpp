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

#include "linbicat/lattice.hpp"

#include <algorithm>

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

// Least element of `candidates` under `leq`, or n if there is none.
template <class Leq>
std::size_t least_of(const std::vector<std::size_t>& candidates, std::size_t n, Leq leq) {
  for (std::size_t c : candidates) {
    bool below_all = true;
    for (std::size_t d : candidates) {
      if (!leq(c, d)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return n;
}

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> elements,
                                   std::span<const Cover> covers) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::kDuplicateName, "element '" + elements[i] + "' declared twice");
    }
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::kUnknownName, "cover references '" + lo + "'");
    if (b == index.end()) throw Error(ErrorKind::kUnknownName, "cover references '" + hi + "'");
    leq[a->second * n + b->second] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return from_order(std::move(elements), std::move(leq));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> elements,
                                        std::vector<std::uint8_t> leq) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorKind::kNotALattice, "a lattice needs at least one element");
  if (leq.size() != n * n) throw Error(ErrorKind::kShapeMismatch, "order matrix is not n*n");

  FiniteLattice lat;
  lat.names_ = std::move(elements);
  for (std::size_t i = 0; i < n; ++i) {
    if (!lat.index_.emplace(lat.names_[i], i).second) {
      throw Error(ErrorKind::kDuplicateName, "element '" + lat.names_[i] + "' declared twice");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw Error(ErrorKind::kShapeMismatch, "order is not reflexive");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorKind::kCyclicOrder,
                    "'" + lat.names_[i] + "' and '" + lat.names_[j] + "' are mutually below");
      }
    }
  }
  lat.leq_ = std::move(leq);

  auto le = [&](std::size_t a, std::size_t b) { return lat.leq_[a * n + b] != 0; };
  auto ge = [&](std::size_t a, std::size_t b) { return lat.leq_[b * n + a] != 0; };
  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  std::vector<std::size_t> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      const std::size_t j = least_of(bounds, n, le);
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      const std::size_t m = least_of(bounds, n, ge);
      if (j == n || m == n) {
        throw Error(ErrorKind::kNotALattice, "pair ('" + lat.names_[a] + "', '" + lat.names_[b] +
                                                 "') has no " + (j == n ? "join" : "meet"));
      }
      lat.join_[a * n + b] = lat.join_[b * n + a] = j;
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = m;
    }
  }
  std::size_t top = 0;
  std::size_t bottom = 0;
  for (std::size_t i = 1; i < n; ++i) {
    top = lat.join(top, i);
    bottom = lat.meet(bottom, i);
  }
  lat.top_ = top;
  lat.bottom_ = bottom;
  return lat;
}

std::size_t FiniteLattice::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw Error(ErrorKind::kUnknownElement, "'" + std::string(name) + "' is not a lattice element");
  }
  return it->second;
}

bool FiniteLattice::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

std::size_t FiniteLattice::join(std::span<const std::size_t> subset) const {
  std::size_t acc = bottom_;
  for (std::size_t e : subset) acc = join(acc, e);
  return acc;
}

std::size_t FiniteLattice::meet(std::span<const std::size_t> subset) const {
  std::size_t acc = top_;
  for (std::size_t e : subset) acc = meet(acc, e);
  return acc;
}

std::string FiniteLattice::join_names(std::span<const std::string> subset) const {
  std::vector<std::size_t> idx;
  for (const auto& s : subset) idx.push_back(index_of(s));
  return name(join(idx));
}

std::string FiniteLattice::meet_names(std::span<const std::string> subset) const {
  std::vector<std::size_t> idx;
  for (const auto& s : subset) idx.push_back(index_of(s));
  return name(meet(idx));
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
  const std::size_t n = size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice FiniteLattice::opposite() const {
  const std::size_t n = size();
  std::vector<std::uint8_t> rev(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rev[a * n + b] = leq_[b * n + a];
  return from_order(names_, std::move(rev));
}

}  // namespace linbicat
