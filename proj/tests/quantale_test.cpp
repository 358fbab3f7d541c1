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
#include "linbicat/catalog.hpp"
#include "linbicat/error.hpp"
#include "linbicat/quantale.hpp"

using namespace linbicat;

namespace {

constexpr Element kInf{kPosInf};
constexpr Element kMinusInf{kNegInf};

Element z(std::int64_t v) { return Element{v}; }

Element el(const Quantale& q, std::string_view name) { return q.parse(name); }

// Largest c over an explicit finite scan set with a*c <= b, taken as the
// join of all solutions.
Element scan_residual(const Quantale& q, Element a, Element b, const std::vector<Element>& scan) {
  Element acc = q.bottom();
  for (Element c : scan)
    if (q.leq(q.tensor(a, c), b)) acc = q.join(acc, c);
  return acc;
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

}  // namespace

TEST_CASE("extended-integer tensor") {
  const Quantale t = Quantale::tropical();
  CHECK(t.tensor(z(2), z(3)) == z(5));
  CHECK(t.tensor(kMinusInf, kInf) == kMinusInf);
  CHECK(t.tensor(kInf, kMinusInf) == kMinusInf);
  for (Element a : t.domain()) CHECK(t.tensor(t.unit(), a) == a);
}

TEST_CASE("boolean residuals") {
  const Quantale b = boolean_quantale();
  CHECK(b.residual_right(el(b, "1"), el(b, "0")) == el(b, "0"));
  CHECK(b.residual_right(el(b, "0"), el(b, "0")) == el(b, "1"));
  CHECK(b.residual_left(el(b, "0"), el(b, "1")) == el(b, "0"));
  for (Element a : b.elements())
    for (Element c : b.elements()) CHECK(b.residual_left(c, a) == b.residual_right(a, c));
}

TEST_CASE("extended-integer residuals") {
  const Quantale t = Quantale::tropical();
  CHECK(t.residual_right(z(3), z(5)) == z(2));
  CHECK(t.residual_left(z(5), z(3)) == z(2));
  for (Element a : t.domain()) CHECK(t.residual_right(a, t.top()) == t.top());
}

TEST_CASE("residual is the top of the solution set") {
  for (const auto& entry : catalog()) {
    const Quantale& q = entry.quantale;
    if (!q.is_finite()) continue;
    for (Element a : q.elements()) CHECK(q.residual_right(a, q.top()) == q.top());
  }
}

TEST_CASE("quantale laws") {
  CHECK(check_quantale_laws(boolean_quantale()).passed());
  CHECK(check_quantale_laws(diamond_frame()).passed());

  // Boolean table with 1*1 = 0 and unit 1.
  const Quantale b = boolean_quantale();
  auto tensor = b.table().tensor;
  tensor[1 * 2 + 1] = 0;
  const Quantale bad = Quantale::from_table(b.lattice(), tensor, 1);
  const LawReport r = check_quantale_laws(bad);
  CHECK_FALSE(r.passed());
  const LawEntry* unit = r.find("tensor.unit.left");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->passed);
  REQUIRE(unit->witness.has_value());
  CHECK((*unit->witness)["f"] == "1");
  CHECK(unit->mode == "exhaustive");
}

TEST_CASE("dualizers") {
  const auto bool_d = find_dualizers(boolean_quantale());
  REQUIRE(bool_d.size() == 1);
  CHECK(boolean_quantale().format(bool_d[0]) == "0");
  CHECK(find_dualizers(three_chain_frame()).empty());
  CHECK(is_cyclic_dualizing(Quantale::tropical(), z(0)));
  // The chain's middle element fails at 0: 0^⊥⊥ = m.
  const Quantale c = three_chain_frame();
  const LawReport r = check_girard_laws(c, el(c, "m"));
  const LawEntry* dual = r.find("girard.dualizing");
  REQUIRE(dual != nullptr);
  CHECK_FALSE(dual->passed);
  CHECK((*dual->witness)["a"] == "0");
}

TEST_CASE("every finite integer dualizes the tropical quantale") {
  for (std::int64_t d = -5; d <= 5; ++d) {
    const Quantale t = Quantale::tropical();
    CHECK(is_cyclic_dualizing(t, z(d)));
    const Quantale g = make_girard(t, z(d));
    for (std::int64_t a = -5; a <= 5; ++a) CHECK(girard_neg(g, z(a)) == z(d - a));
  }
  CHECK_FALSE(is_cyclic_dualizing(Quantale::tropical(), kInf));
  CHECK_FALSE(is_cyclic_dualizing(Quantale::tropical(), kMinusInf));
}

TEST_CASE("girard par") {
  const Quantale b = boolean_quantale();
  const Element zero = el(b, "0");
  const Element one = el(b, "1");
  CHECK(girard_par(b, zero, zero) == zero);
  CHECK(girard_par(b, zero, one) == one);
  CHECK(girard_par(b, one, zero) == one);
  CHECK(girard_par(b, one, one) == one);
  for (Element a : b.elements()) CHECK(girard_par(b, *b.dualizer(), a) == a);

  const Quantale t = Quantale::tropical();
  CHECK(girard_par(t, kMinusInf, kInf) == kInf);
  CHECK(girard_par(t, kInf, kMinusInf) == kInf);
  CHECK(girard_par(t, z(2), z(3)) == z(5));
  for (Element a : t.domain()) {
    CHECK(girard_par(t, z(0), a) == a);
    for (Element c : t.domain()) CHECK(girard_par(t, a, c) == t.par(a, c));
  }
}

TEST_CASE("girard_to_ld") {
  const Quantale b = girard_to_ld(boolean_quantale());
  CHECK(b.table().par->table == std::vector<std::size_t>{0, 1, 1, 1});
  CHECK(b.par_unit() == el(b, "0"));
  CHECK(check_ld_laws(b).passed());

  const Quantale t = girard_to_ld(Quantale::tropical());
  CHECK(t.par(z(1), z(2)) == z(3));
  CHECK(t.par(kMinusInf, kInf) == kInf);
  CHECK(t.par_unit() == z(0));

  const Quantale p = girard_to_ld(one_point_quantale());
  CHECK(p.table().par->table == p.table().tensor);
}

TEST_CASE("ld laws") {
  CHECK(check_ld_laws(boolean_quantale()).passed());
  CHECK(check_ld_laws(three_chain_frame()).passed());
  CHECK(check_ld_laws(diamond_frame()).passed());

  // Chain with the meet as both multiplications: the par's top is not
  // absorbing, since m ∧ 1 = m.
  const Quantale c = three_chain_frame();
  const auto& t = c.table();
  const Quantale meet_meet = c.with_par(ParTable{t.tensor, t.unit});
  const LawReport r = check_ld_laws(meet_meet);
  CHECK_FALSE(r.passed());
  const LawEntry* top = r.find("par.top.left");
  REQUIRE(top != nullptr);
  CHECK_FALSE(top->passed);
  CHECK(r.find("tensor.assoc")->passed);
  CHECK(r.find("dist.left")->passed);
}

TEST_CASE("check_ld_laws without a par") {
  const Quantale c = three_chain_frame().with_par(std::nullopt);
  CHECK(kind_of([&] { check_ld_laws(c); }) == ErrorKind::kNoParStructure);
}

TEST_CASE("shift completions") {
  const Quantale trivial = shift_completion(cyclic_monoid({"e"}), "e");
  CHECK(trivial.size() == 3);
  CHECK(trivial.tensor(el(trivial, "e"), el(trivial, "e")) == el(trivial, "e"));
  CHECK(trivial.par(el(trivial, "e"), el(trivial, "e")) == el(trivial, "e"));
  // Off M the multiplications differ: bottom absorbs the tensor, top the par.
  CHECK(trivial.tensor(el(trivial, "bottom"), el(trivial, "top")) == el(trivial, "bottom"));
  CHECK(trivial.par(el(trivial, "bottom"), el(trivial, "top")) == el(trivial, "top"));

  const Quantale z2 = shift_z2();
  CHECK(z2.size() == 4);
  CHECK(z2.par(el(z2, "e"), el(z2, "e")) == el(z2, "a"));
  CHECK(z2.par(el(z2, "a"), el(z2, "a")) == el(z2, "a"));
  CHECK(z2.par(el(z2, "e"), el(z2, "a")) == el(z2, "e"));
  CHECK(check_ld_laws(z2).passed());
  CHECK(check_ld_laws(trivial).passed());
  CHECK(check_ld_laws(shift_z3()).passed());
  CHECK(shift_z3().size() == 5);
}

TEST_CASE("shift completion errors") {
  MonoidTable not_comm{{"e", "a", "b"}, {0, 1, 2, 1, 1, 1, 2, 2, 2}};  // x*y = x for x != e
  CHECK(kind_of([&] { shift_completion(not_comm, "a"); }) == ErrorKind::kNotCommutative);
  MonoidTable not_cancel{{"e", "z"}, {0, 1, 1, 1}};
  CHECK(kind_of([&] { shift_completion(not_cancel, "e"); }) == ErrorKind::kNotCancellative);
  MonoidTable no_unit{{"a", "b"}, {1, 0, 0, 0}};
  CHECK(kind_of([&] { shift_completion(no_unit, "a"); }) == ErrorKind::kInvalidMonoid);
  CHECK(kind_of([&] { shift_completion(cyclic_monoid({"e", "a"}), "q"); }) ==
        ErrorKind::kUnknownElement);
}

TEST_CASE("opposite") {
  for (const auto& entry : catalog()) {
    const Quantale& q = entry.quantale;
    CHECK(q.opposite().opposite() == q);
    // The LD laws transfer along the involution.
    if (!entry.broken) CHECK(check_ld_laws(q.opposite()).passed() == check_ld_laws(q).passed());
  }
  const Quantale arctic = Quantale::tropical().opposite();
  CHECK(arctic == Quantale::arctic(0));
  CHECK(arctic.join(z(3), z(5)) == z(3));
  CHECK(arctic.bottom() == kInf);
  CHECK(arctic.tensor(kMinusInf, kInf) == kInf);

  const Quantale b = boolean_quantale().opposite();
  CHECK(b.lattice().leq("1", "0"));
  CHECK(b.unit() == el(b, "0"));
  CHECK(b.par_unit() == el(b, "1"));
  CHECK(b.tensor(el(b, "0"), el(b, "1")) == el(b, "1"));  // or
  CHECK(b.par(el(b, "0"), el(b, "1")) == el(b, "0"));     // and
  CHECK(*b.dualizer() == el(b, "1"));
}

TEST_CASE("residual adjunction on finite catalog quantales") {
  for (const auto& entry : catalog()) {
    const Quantale& q = entry.quantale;
    if (!q.is_finite() || q.size() > 6) continue;
    for (Element a : q.elements())
      for (Element b : q.elements())
        for (Element c : q.elements()) {
          CHECK(q.leq(q.tensor(a, c), b) == q.leq(c, q.residual_right(a, b)));
          CHECK(q.leq(q.tensor(c, a), b) == q.leq(c, q.residual_left(b, a)));
        }
  }
}

TEST_CASE("closed-form residuals match a windowed scan") {
  std::vector<Element> scan{kMinusInf};
  for (std::int64_t c = -20; c <= 20; ++c) scan.push_back(z(c));
  scan.push_back(kInf);
  for (const Quantale& q : {Quantale::tropical(), Quantale::arctic(0), Quantale::arctic(3)}) {
    for (Element a : q.domain(10))
      for (Element b : q.domain(10)) CHECK(q.residual_right(a, b) == scan_residual(q, a, b, scan));
  }
}

TEST_CASE("girard negation") {
  for (const auto& entry : catalog()) {
    const Classification c = classify(entry.quantale);
    if (!c.girard_ld()) continue;
    const Quantale g = entry.quantale.with_dualizer(*c.ld_dualizer);
    const auto dom = g.domain();
    CHECK(girard_neg(g, g.unit()) == *g.dualizer());
    for (Element a : dom) {
      CHECK(girard_neg(g, girard_neg(g, a)) == a);
      for (Element b : dom) {
        CHECK(g.leq(a, b) == g.leq(girard_neg(g, b), girard_neg(g, a)));
        CHECK(girard_par(g, a, b) == girard_neg(g, g.tensor(girard_neg(g, b), girard_neg(g, a))));
        if (g.is_finite()) {
          for (Element x : dom) {
            CHECK(girard_par(g, g.meet(a, b), x) == g.meet(girard_par(g, a, x), girard_par(g, b, x)));
            CHECK(girard_par(g, x, g.meet(a, b)) == g.meet(girard_par(g, x, a), girard_par(g, x, b)));
          }
        }
      }
    }
    CHECK(check_ld_laws(girard_to_ld(g)).passed());
  }
}

TEST_CASE("catalog classifications") {
  CHECK(classify(catalog_entry("boolean").quantale).girard_ld());
  CHECK(classify(catalog_entry("three-chain").quantale).ld);
  CHECK_FALSE(classify(catalog_entry("three-chain").quantale).girard());
  CHECK(classify(catalog_entry("zinf-tropical").quantale).girard_ld());
  CHECK(classify(catalog_entry("zinf-arctic").quantale).girard_ld());
  for (const auto& entry : catalog()) {
    const Classification c = classify(entry.quantale);
    CHECK(c.ld == !entry.broken);
    // breaking the par leaves the quantale intact
    CHECK_MESSAGE(c.quantale, entry.name);
  }
  CHECK(kind_of([] { catalog_entry("nope"); }) == ErrorKind::kUnknownCatalogEntry);
}

TEST_CASE("element parsing and overflow") {
  const Quantale t = Quantale::tropical();
  CHECK(t.parse("+inf") == kInf);
  CHECK(t.parse("-inf") == kMinusInf);
  CHECK(t.parse("-7") == z(-7));
  CHECK(t.to_json(kInf) == "+inf");
  CHECK(t.to_json(z(4)) == 4);
  CHECK(kind_of([&] { t.parse("x"); }) == ErrorKind::kUnknownElement);
  const Element big{kZinfLimit};
  CHECK(kind_of([&] { t.tensor(big, big); }) == ErrorKind::kArithmeticOverflow);
  CHECK(kind_of([&] { t.parse("4611686018427387904"); }) == ErrorKind::kArithmeticOverflow);
  const Quantale b = boolean_quantale();
  CHECK(kind_of([&] { b.parse("2"); }) == ErrorKind::kUnknownElement);
}
