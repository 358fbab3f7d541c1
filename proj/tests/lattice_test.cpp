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

#include "doctest.h"
#include "linbicat/error.hpp"
#include "linbicat/lattice.hpp"

using linbicat::Error;
using linbicat::ErrorKind;
using linbicat::FiniteLattice;

namespace {

FiniteLattice diamond() {
  const std::vector<FiniteLattice::Cover> covers{{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}};
  return FiniteLattice::build({"0", "x", "y", "1"}, covers);
}

// Least upper bound by scanning every upper bound, independent of the tables.
std::size_t scan_join(const FiniteLattice& l, std::size_t a, std::size_t b) {
  std::vector<std::size_t> ub;
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(a, c) && l.leq(b, c)) ub.push_back(c);
  for (std::size_t c : ub) {
    bool least = true;
    for (std::size_t d : ub) least = least && l.leq(c, d);
    if (least) return c;
  }
  return l.size();
}

std::size_t scan_meet(const FiniteLattice& l, std::size_t a, std::size_t b) {
  std::vector<std::size_t> lb;
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(c, a) && l.leq(c, b)) lb.push_back(c);
  for (std::size_t c : lb) {
    bool greatest = true;
    for (std::size_t d : lb) greatest = greatest && l.leq(d, c);
    if (greatest) return c;
  }
  return l.size();
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kParse;
}

std::vector<FiniteLattice> small_lattices() {
  std::vector<FiniteLattice> out;
  out.push_back(FiniteLattice::build({"a"}, {}));
  out.push_back(FiniteLattice::build({"0", "1"}, std::vector<FiniteLattice::Cover>{{"0", "1"}}));
  out.push_back(diamond());
  // Pentagon N5 and diamond M3 (non-distributive).
  out.push_back(FiniteLattice::build(
      {"0", "a", "b", "c", "1"},
      std::vector<FiniteLattice::Cover>{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
  out.push_back(FiniteLattice::build(
      {"0", "a", "b", "c", "1"},
      std::vector<FiniteLattice::Cover>{
          {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
  // Boolean cube.
  out.push_back(FiniteLattice::build(
      {"000", "001", "010", "100", "011", "101", "110", "111"},
      std::vector<FiniteLattice::Cover>{{"000", "001"}, {"000", "010"}, {"000", "100"},
                                        {"001", "011"}, {"001", "101"}, {"010", "011"},
                                        {"010", "110"}, {"100", "101"}, {"100", "110"},
                                        {"011", "111"}, {"101", "111"}, {"110", "111"}}));
  return out;
}

}  // namespace

TEST_CASE("one-point lattice has top equal to bottom") {
  const auto l = FiniteLattice::build({"a"}, {});
  CHECK(l.top() == l.bottom());
  CHECK(l.name(l.top()) == "a");
}

TEST_CASE("two-chain") {
  const auto l = FiniteLattice::build({"0", "1"}, std::vector<FiniteLattice::Cover>{{"0", "1"}});
  CHECK(l.name(l.top()) == "1");
  CHECK(l.name(l.bottom()) == "0");
  CHECK(l.leq("0", "1"));
  CHECK_FALSE(l.leq("1", "0"));
  const std::vector<std::string> both{"0", "1"};
  CHECK(l.meet_names(both) == "0");
}

TEST_CASE("diamond joins and meets match a bound scan") {
  const auto l = diamond();
  CHECK(l.name(l.join(l.index_of("x"), l.index_of("y"))) == "1");
  CHECK(l.name(l.meet(l.index_of("x"), l.index_of("y"))) == "0");
  CHECK_FALSE(l.leq("x", "y"));
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      CHECK(l.join(a, b) == scan_join(l, a, b));
      CHECK(l.meet(a, b) == scan_meet(l, a, b));
    }
}

TEST_CASE("empty join is bottom and empty meet is top") {
  const auto l = diamond();
  CHECK(l.join(std::span<const std::size_t>{}) == l.bottom());
  CHECK(l.meet(std::span<const std::size_t>{}) == l.top());
  CHECK(l.join_names({}) == "0");
  CHECK(l.meet_names({}) == "1");
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { FiniteLattice::build({"a", "a"}, {}); }) == ErrorKind::kDuplicateName);
  CHECK(kind_of([] {
          FiniteLattice::build({"a"}, std::vector<FiniteLattice::Cover>{{"a", "b"}});
        }) == ErrorKind::kUnknownName);
  CHECK(kind_of([] {
          FiniteLattice::build({"a", "b"}, std::vector<FiniteLattice::Cover>{{"a", "b"}, {"b", "a"}});
        }) == ErrorKind::kCyclicOrder);
  // Two incomparable elements: no bottom, no top.
  CHECK(kind_of([] { FiniteLattice::build({"a", "b"}, {}); }) == ErrorKind::kNotALattice);
  CHECK(kind_of([] { diamond().index_of("z"); }) == ErrorKind::kUnknownElement);
}

TEST_CASE("not-a-lattice names the pair") {
  // Bowtie: a,b both below c and d, no join for a,b.
  try {
    FiniteLattice::build({"0", "a", "b", "c", "d", "1"},
                         std::vector<FiniteLattice::Cover>{{"0", "a"}, {"0", "b"}, {"a", "c"},
                                                           {"a", "d"}, {"b", "c"}, {"b", "d"},
                                                           {"c", "1"}, {"d", "1"}});
    FAIL("expected not-a-lattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotALattice);
    const std::string what = e.what();
    CHECK(what.find("'a'") != std::string::npos);
    CHECK(what.find("'b'") != std::string::npos);
  }
}

TEST_CASE("lattice laws hold exhaustively on small lattices") {
  for (const auto& l : small_lattices()) {
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(l.join(a, a) == a);
      CHECK(l.meet(a, a) == a);
      const std::size_t single[] = {a};
      CHECK(l.join(single) == a);
      CHECK(l.meet(single) == a);
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(l.leq(a, l.join(a, b)));
        CHECK(l.leq(l.meet(a, b), a));
        CHECK(l.join(a, b) == l.join(b, a));
        CHECK(l.meet(a, b) == l.meet(b, a));
        CHECK(l.join(a, b) == scan_join(l, a, b));
        CHECK(l.meet(a, b) == scan_meet(l, a, b));
        for (std::size_t c = 0; c < n; ++c) {
          CHECK(l.join(l.join(a, b), c) == l.join(a, l.join(b, c)));
          CHECK(l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)));
        }
      }
    }
  }
}

TEST_CASE("covers rebuild the lattice and opposite is an involution") {
  for (const auto& l : small_lattices()) {
    std::vector<FiniteLattice::Cover> covers;
    for (auto [a, b] : l.covers()) covers.emplace_back(l.name(a), l.name(b));
    CHECK(FiniteLattice::build(l.names(), covers) == l);
    const auto op = l.opposite();
    CHECK(op.top() == l.bottom());
    CHECK(op.opposite() == l);
  }
}
