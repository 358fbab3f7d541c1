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

#include <chrono>

#include "doctest.h"
#include "linbicat/catalog.hpp"
#include "linbicat/error.hpp"
#include "linbicat/quantaloid.hpp"

using namespace linbicat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kParse;
}

std::size_t elem(const FiniteQuantaloid& q, std::string_view name) {
  return q.hom(0, 0).index_of(name);
}

}  // namespace

TEST_CASE("one-object quantaloid agrees with its quantale") {
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite()) continue;
    const Quantale& q = entry.quantale;
    const auto Q = FiniteQuantaloid::from_quantale(q);
    CHECK(Q.to_quantale() == Quantale::from_table(q.lattice(), q.table().tensor, q.table().unit,
                                                  q.table().par));
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        CHECK(Q.tensor({0, 0, a}, {0, 0, b}).elem == index(q.tensor(at(a), at(b))));
        CHECK(Q.residual_right({0, 0, a}, {0, 0, b}).elem ==
              index(q.residual_right(at(a), at(b))));
        CHECK(Q.residual_left({0, 0, b}, {0, 0, a}).elem == index(q.residual_left(at(b), at(a))));
      }
    }
  }
}

TEST_CASE("quantaloid laws follow the catalog") {
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite()) continue;
    CAPTURE(entry.name);
    const auto one = FiniteQuantaloid::from_quantale(entry.quantale);
    const auto two = FiniteQuantaloid::uniform({"a", "b"}, entry.quantale);
    CHECK(check_quantaloid_laws(one).passed() == !entry.broken);
    CHECK(check_quantaloid_laws(two).passed() == !entry.broken);
  }
}

TEST_CASE("one-object Girard families are the dualizers") {
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite()) continue;
    CAPTURE(entry.name);
    const Quantale& q = entry.quantale;
    std::vector<Family> expected;
    for (Element d : find_dualizers(q)) expected.push_back({index(d)});
    CHECK(find_girard_families(FiniteQuantaloid::from_quantale(q)) == expected);
  }
}

TEST_CASE("Girard family witness") {
  const auto Q = FiniteQuantaloid::from_quantale(three_chain_frame());
  const auto report = check_girard_family(Q, {elem(Q, "m")});
  CHECK_FALSE(report.passed());
  CHECK(report.find("girard.dualizing") != nullptr);
  CHECK(kind_of([&] { (void)check_girard_family(Q, {0, 0}); }) ==
        ErrorKind::kFamilyShapeMismatch);
  CHECK(kind_of([&] { (void)check_girard_family(Q, {9}); }) == ErrorKind::kFamilyShapeMismatch);
}

TEST_CASE("composition errors") {
  const auto Q = FiniteQuantaloid::uniform({"a", "b"}, boolean_quantale());
  CHECK(kind_of([&] { (void)Q.tensor({0, 1, 0}, {0, 1, 0}); }) == ErrorKind::kHomMismatch);
  const auto plain = FiniteQuantaloid::from_quantale(Quantale::from_table(
      boolean_quantale().lattice(), boolean_quantale().table().tensor, 1));
  CHECK(kind_of([&] { (void)plain.par({0, 0, 0}, {0, 0, 0}); }) == ErrorKind::kNoParStructure);
  CHECK(kind_of([&] {
          (void)FiniteQuantaloid({"a", "a"}, {}, {}, {});
        }) == ErrorKind::kDuplicateName);
  CHECK(kind_of([&] {
          (void)FiniteQuantaloid({"a"}, {boolean_quantale().lattice()}, {{0, 0, 0, 2}}, {1});
        }) == ErrorKind::kUnknownElement);
  CHECK(kind_of([&] {
          (void)FiniteQuantaloid({"a"}, {boolean_quantale().lattice()}, {{0, 0}}, {1});
        }) == ErrorKind::kShapeMismatch);
}

TEST_CASE("monads and their bimodules") {
  const Quantale q = shift_z2();
  const auto Q = FiniteQuantaloid::from_quantale(q);
  const auto monads = enumerate_monads(Q);
  REQUIRE(monads.size() == 2);
  CHECK(monads[0] == Monad{0, elem(Q, "e")});
  CHECK(monads[1] == Monad{0, elem(Q, "top")});
  const auto mq = materialize_monq(Q);
  // Trivial monad: every element is a bimodule.
  CHECK(mq.quantaloid.hom(0, 0).size() == 4);
  // Into or out of the top monad only bottom and top survive.
  CHECK(mq.quantaloid.hom(0, 1).size() == 2);
  CHECK(mq.quantaloid.hom(1, 1).size() == 2);
  CHECK(check_quantaloid_laws(mq.quantaloid).passed());
  const MonadBimodule f{monads[0], monads[1], elem(Q, "top")};
  CHECK(check_monad_bimodule(Q, f));
  CHECK(monq_compose(Q, monq_identity(monads[0]), f) == f);
  CHECK(kind_of([&] { (void)monq_compose(Q, f, f); }) == ErrorKind::kHomMismatch);
}

TEST_CASE("Mon Q inherits Girard families") {
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite() || entry.broken) continue;
    CAPTURE(entry.name);
    const auto Q = FiniteQuantaloid::from_quantale(entry.quantale);
    const auto mq = materialize_monq(Q);
    for (const Family& d : find_girard_families(Q)) {
      const Family base = monq_girard_family(Q, mq.monads, d);
      Family local;
      for (std::size_t i = 0; i < base.size(); ++i) local.push_back(mq.local(i, i, base[i]));
      CHECK(check_girard_family(mq.quantaloid, local).passed());
    }
  }
}

TEST_CASE("linear monads") {
  const Quantale q = shift_z2();
  const auto Q = FiniteQuantaloid::from_quantale(q);
  const LinearMonad trivial = trivial_linear_monad(Q, 0);
  CHECK(trivial == LinearMonad{0, elem(Q, "e"), elem(Q, "a")});
  CHECK(check_linear_monad(Q, trivial));
  const auto monads = enumerate_linear_monads(Q);
  CHECK(std::find(monads.begin(), monads.end(), trivial) != monads.end());
  const auto bad = validate_linear_monad(Q, {0, elem(Q, "bottom"), elem(Q, "top")});
  CHECK(bad.find("lmonad.tensor.unit")->passed == false);
  CHECK(bad.find("lmonad.par.counit")->passed == false);
  for (std::size_t f = 0; f < q.size(); ++f) {
    CHECK(check_linear_monad_bimodule(Q, trivial_linear_bimodule(Q, {0, 0, f})));
  }
  const auto t = linear_monq_top_identity(trivial);
  const auto b = linear_monq_bot_identity(trivial);
  const auto f = trivial_linear_bimodule(Q, {0, 0, elem(Q, "top")});
  CHECK(linear_monq_compose_tensor(Q, t, f) == f);
  CHECK(linear_monq_compose_par(Q, f, b) == f);
}

TEST_CASE("linear Mon Q laws follow the base") {
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite() || !entry.quantale.has_par()) continue;
    CAPTURE(entry.name);
    const auto Q = FiniteQuantaloid::from_quantale(entry.quantale);
    const auto start = std::chrono::steady_clock::now();
    const LinearMonQModel model(Q, enumerate_linear_monads(Q));
    const auto laws = linear_quantaloid_laws<LinearMonQModel>(true);
    const auto report = run_suite<LinearMonQModel>("linear-monq", model, laws, Sampler{});
    MESSAGE(entry.name << " monads=" << model.objects().size() << " "
                       << std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                              .count()
                       << "s");
    CHECK(report.passed() == check_quantaloid_laws(Q).passed());
  }
}
