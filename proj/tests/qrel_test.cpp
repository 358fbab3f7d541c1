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
#include "linbicat/oracles.hpp"
#include "linbicat/qrel.hpp"

using namespace linbicat;

namespace {

constexpr Element kInf{kPosInf};
constexpr Element kMinusInf{kNegInf};

QRelation rel(const Quantale& q, const FiniteSet& x, const FiniteSet& y,
              std::initializer_list<std::int64_t> raw) {
  std::vector<Element> v;
  for (auto r : raw) v.push_back(Element{r});
  return QRelation(q, x, y, v);
}

oracle::BoolMatrix to_bool(const QRelation& r) {
  oracle::BoolMatrix m(r.rows(), std::vector<bool>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m[i][j] = r(i, j).raw == 1;
  return m;
}

std::vector<FiniteSet> sets_upto(std::size_t k) { return standard_sets(k, 0); }

}  // namespace

TEST_CASE("boolean compositions match the logical oracle") {
  const Quantale b = boolean_quantale();
  for (const auto& x : sets_upto(2))
    for (const auto& y : sets_upto(2))
      for (const auto& z : sets_upto(2))
        for (const auto& f : enumerate_relations(b, x, y))
          for (const auto& g : enumerate_relations(b, y, z)) {
            CHECK(to_bool(compose_tensor(f, g)) ==
                  oracle::bool_compose(to_bool(f), to_bool(g), y.size(), z.size(), oracle::Quantifier::kExists));
            CHECK(to_bool(compose_par(f, g)) ==
                  oracle::bool_compose(to_bool(f), to_bool(g), y.size(), z.size(), oracle::Quantifier::kForall));
          }
}

TEST_CASE("extended-integer compositions") {
  const Quantale t = Quantale::tropical();
  const auto one = numbered_set("A", 1);
  const auto two = numbered_set("B", 2);
  const QRelation f = rel(t, one, two, {1, 2});
  const QRelation g = rel(t, two, one, {3, 4});
  CHECK(compose_tensor(f, g).values() == std::vector<Element>{Element{6}});
  CHECK(compose_par(f, g).values() == std::vector<Element>{Element{4}});
}

TEST_CASE("empty index sets compose to constants") {
  const Quantale t = Quantale::tropical();
  const auto one = numbered_set("A", 1);
  const auto none = numbered_set("E", 0);
  const QRelation f(t, one, none, {});
  const QRelation g(t, none, one, {});
  CHECK(compose_tensor(f, g).values() == std::vector<Element>{kMinusInf});
  CHECK(compose_par(f, g).values() == std::vector<Element>{kInf});
}

TEST_CASE("identities") {
  const Quantale b = boolean_quantale();
  const auto one = numbered_set("A", 1);
  CHECK(id_top(b, one).values() == std::vector<Element>{Element{1}});
  const Quantale t = Quantale::tropical();
  const auto two = numbered_set("B", 2);
  CHECK(id_top(t, two).values() == std::vector<Element>{Element{0}, kMinusInf, kMinusInf, Element{0}});
  CHECK(id_bot(t, two).values() == std::vector<Element>{Element{0}, kInf, kInf, Element{0}});
  const QRelation f = rel(t, one, two, {5, kPosInf});
  CHECK(compose_tensor(f, id_top(t, two)) == f);
  CHECK(compose_par(f, id_bot(t, two)) == f);
  CHECK(compose_tensor(id_top(t, one), f) == f);
}

TEST_CASE("pointwise order") {
  const Quantale t = Quantale::tropical();
  const auto one = numbered_set("A", 1);
  CHECK(rel_leq(rel(t, one, one, {1}), rel(t, one, one, {2})));
  CHECK_FALSE(rel_leq(rel(t, one, one, {2}), rel(t, one, one, {1})));
  const Quantale b = boolean_quantale();
  const auto two = numbered_set("B", 2);
  for (const auto& f : enumerate_relations(b, two, two)) {
    CHECK(rel_leq(f, f));
    CHECK(rel_leq(QRelation::constant(b, two, two, b.bottom()), f));
  }
}

TEST_CASE("boundary errors") {
  const Quantale b = boolean_quantale();
  const auto one = numbered_set("A", 1);
  const auto two = numbered_set("B", 2);
  const QRelation f = QRelation::constant(b, one, two, b.top());
  try {
    compose_tensor(f, f);
    FAIL("expected set-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSetMismatch);
  }
  const Quantale other = three_chain_frame();
  const QRelation g = QRelation::constant(other, two, one, other.top());
  try {
    compose_tensor(f, g);
    FAIL("expected quantale-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kQuantaleMismatch);
  }
  const Quantale no_par = b.with_par(std::nullopt);
  const QRelation h = QRelation::constant(no_par, one, one, no_par.top());
  try {
    compose_par(h, h);
    FAIL("expected no-par-structure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoParStructure);
  }
  try {
    QRelation(b, one, two, {Element{0}});
    FAIL("expected shape-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kShapeMismatch);
  }
  try {
    make_set("S", {"a", "a"});
    FAIL("expected duplicate-name");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDuplicateName);
  }
}

TEST_CASE("extensions and liftings are the adjoints of composition") {
  const Quantale b = boolean_quantale();
  const auto one = numbered_set("A", 1);
  CHECK(right_extension(rel(b, one, one, {1}), rel(b, one, one, {0})).values() ==
        std::vector<Element>{Element{0}});
  for (const Quantale& q : {boolean_quantale(), three_chain_frame()}) {
    for (const auto& x : standard_sets(2))
      for (const auto& y : standard_sets(2)) {
        const auto z = one;
        const auto fs = enumerate_relations(q, x, y);
        const auto hs = enumerate_relations(q, x, z);
        const auto ss = enumerate_relations(q, y, z);
        for (const auto& f : fs)
          for (const auto& h : hs) {
            const QRelation ext = right_extension(f, h);
            for (const auto& s : ss) CHECK(rel_leq(compose_tensor(f, s), h) == rel_leq(s, ext));
          }
        for (const auto& h : hs) CHECK(right_extension(id_top(q, x), h) == h);
        // Lifting: for f: Z→Y and h: X→Y, s: X→Z with s⊗f <= h.
        const auto lf = enumerate_relations(q, z, y);
        const auto lh = enumerate_relations(q, x, y);
        const auto ls = enumerate_relations(q, x, z);
        for (const auto& f : lf)
          for (const auto& h : lh) {
            const QRelation lift = right_lifting(h, f);
            for (const auto& s : ls) CHECK(rel_leq(compose_tensor(s, f), h) == rel_leq(s, lift));
          }
      }
  }
}

TEST_CASE("dual family and relation duals") {
  const Quantale b = boolean_quantale();
  const auto two = numbered_set("B", 2);
  CHECK(dual_family(b, two, Element{0}).values() ==
        std::vector<Element>{Element{0}, Element{1}, Element{1}, Element{0}});
  CHECK(dual_family(b, two, b.par_unit()) == id_bot(b, two));
  const Quantale t = Quantale::tropical();
  const auto one = numbered_set("A", 1);
  CHECK(dual_family(t, one, Element{0}).values() == std::vector<Element>{Element{0}});
  CHECK(rel_dual(rel(t, one, two, {3, kNegInf})).values() == std::vector<Element>{Element{-3}, kInf});

  for (const auto& x : standard_sets(2))
    for (const auto& y : standard_sets(2))
      for (const auto& r : enumerate_relations(b, x, y)) {
        const QRelation d = rel_dual(r);
        for (std::size_t i = 0; i < r.rows(); ++i)
          for (std::size_t j = 0; j < r.cols(); ++j) CHECK(d(j, i).raw == 1 - r(i, j).raw);
        CHECK(rel_dual(d) == r);
      }
}

TEST_CASE("duals exchange the compositions") {
  for (const char* name : {"boolean", "diamond", "shift-z2"}) {
    const Quantale& base = catalog_entry(name).quantale;
    const Classification c = classify(base);
    REQUIRE(c.girard_ld());
    const Quantale g = base.with_dualizer(*c.ld_dualizer);
    const auto one = numbered_set("A", 1);
    const auto two = numbered_set("B", 2);
    for (const auto& f : enumerate_relations(g, one, two))
      for (const auto& h : enumerate_relations(g, two, one)) {
        CHECK(rel_dual(compose_tensor(f, h)) == compose_par(rel_dual(h), rel_dual(f)));
        CHECK(rel_dual(compose_par(f, h)) == compose_tensor(rel_dual(h), rel_dual(f)));
      }
  }
}

TEST_CASE("linear adjoints") {
  const Quantale b = boolean_quantale();
  for (const auto& x : standard_sets(2))
    for (const auto& y : standard_sets(2))
      for (const auto& r : enumerate_relations(b, x, y)) CHECK(check_linear_adjoint(r, rel_dual(r)));
  const Quantale c = three_chain_frame();
  const auto one = numbered_set("A", 1);
  const QRelation m(c, one, one, {c.parse("m")});
  CHECK(find_linear_adjoints(m).empty());
  for (const auto& x : standard_sets(2)) CHECK(check_linear_adjoint(id_top(c, x), id_bot(c, x)));
}

TEST_CASE("linear adjoints characterize the composition adjunction") {
  for (const Quantale& q : {boolean_quantale(), three_chain_frame()}) {
    const auto sets = standard_sets(q.size() == 2 ? 2 : 1);
    for (const auto& x : sets)
      for (const auto& y : sets)
        for (const auto& a : enumerate_relations(q, x, y))
          for (const auto& bb : enumerate_relations(q, y, x)) {
            bool galois = true;
            for (const auto& w : sets)
              for (const auto& cc : enumerate_relations(q, w, x))
                for (const auto& dd : enumerate_relations(q, w, y))
                  galois = galois && (rel_leq(compose_tensor(cc, a), dd) ==
                                      rel_leq(cc, compose_par(dd, bb)));
            CHECK(check_linear_adjoint(a, bb) == galois);
          }
  }
}

TEST_CASE("Q-Rel law suite") {
  Sampler random = Sampler::random(7, 200);
  const LawReport tropical = verify_qrel_laws(Quantale::tropical(), standard_sets(2), random);
  CHECK(tropical.passed());
  CHECK(tropical.entries().size() == 20);
  CHECK(tropical.entries()[0].mode == "random(seed=7,count=200,gen=mt19937_64/v1)");

  const LawReport point =
      verify_qrel_laws(one_point_quantale(), standard_sets(1), Sampler::exhaustive());
  CHECK(point.passed());

  const LawReport broken =
      verify_qrel_laws(catalog_entry("broken-boolean").quantale, standard_sets(2), Sampler::exhaustive());
  CHECK_FALSE(broken.passed());
  const LawEntry* top = broken.find("par.top.left");
  REQUIRE(top != nullptr);
  CHECK_FALSE(top->passed);
  // Shrunk to singletons.
  for (const auto& o : (*top->witness)["objects"]) CHECK(o["members"].size() <= 1);
}

TEST_CASE("Girard Q-Rel") {
  CHECK(check_girard_qrel(boolean_quantale(), standard_sets(3), Sampler::exhaustive()).passed());
  Sampler s = Sampler::random(3, 200);
  s.window = 5;
  CHECK(check_girard_qrel(Quantale::tropical(), standard_sets(2), s).passed());

  const Quantale c = three_chain_frame().with_dualizer(three_chain_frame().parse("m"));
  const LawReport r = check_girard_qrel(c, standard_sets(2), Sampler::exhaustive());
  const LawEntry* dual = r.find("girard.dualizing");
  REQUIRE(dual != nullptr);
  CHECK_FALSE(dual->passed);
  for (const auto& row : (*dual->witness)["r"]["values"])
    for (const auto& v : row) CHECK(v == "0");
}
