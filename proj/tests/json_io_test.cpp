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

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "linbicat/catalog.hpp"
#include "linbicat/error.hpp"
#include "linbicat/json_io.hpp"

using namespace linbicat;

namespace {

/// The error raised by `fn`; fails the test when nothing is thrown.
Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::kParse, "");
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("linbicat_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("quantale files round-trip") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const Quantale& q = entry.quantale;
    if (entry.broken && !q.is_finite()) {
      CHECK(error_of([&] { quantale_to_json(q); }).kind() == ErrorKind::kShapeMismatch);
      continue;
    }
    const Json j = quantale_to_json(q);
    CHECK(quantale_from_json(j) == q);
    CHECK(quantale_from_json(Json::parse(j.dump())) == q);
  }
  CHECK(quantale_to_json(Quantale::tropical(3)) ==
        Json::parse(R"({"kind":"zinf","flavor":"tropical","dualizer":3})"));
  CHECK(quantale_from_json(Json::parse(R"({"kind":"zinf","flavor":"arctic"})")) ==
        Quantale::arctic(0));
}

TEST_CASE("the Boolean quantale file") {
  const Json j = Json::parse(R"({
    "kind": "table", "elements": ["0", "1"], "covers": [["0", "1"]],
    "tensor": [["0", "0"], ["0", "1"]], "unit": "1",
    "par": {"table": [["0", "1"], ["1", "1"]], "unit": "0"}, "dualizer": "0"})");
  CHECK(quantale_from_json(j) == boolean_quantale());
}

TEST_CASE("quantale diagnostics name the field") {
  Json j = quantale_to_json(boolean_quantale());
  j["tensor"][1][0] = "q";
  Error e = error_of([&] { quantale_from_json(j); });
  CHECK(e.kind() == ErrorKind::kUnknownElement);
  CHECK(std::string(e.what()).find("tensor[1][0]") != std::string::npos);

  j = quantale_to_json(boolean_quantale());
  j["tensor"][1] = Json::array({"0"});
  e = error_of([&] { quantale_from_json(j); });
  CHECK(e.kind() == ErrorKind::kParse);
  CHECK(std::string(e.what()).find("tensor[1]") != std::string::npos);

  j = quantale_to_json(boolean_quantale());
  j.erase("unit");
  CHECK(std::string(error_of([&] { quantale_from_json(j); }).what()).find("'unit'") !=
        std::string::npos);

  j = Json::parse(R"({"kind":"zinf","flavor":"sideways"})");
  CHECK(error_of([&] { quantale_from_json(j); }).kind() == ErrorKind::kParse);
  j = Json::parse(R"({"kind":"heap"})");
  CHECK(error_of([&] { quantale_from_json(j); }).kind() == ErrorKind::kParse);
}

TEST_CASE("syntax errors report line and column") {
  const auto dir = scratch_dir("syntax");
  write(dir / "bad.json", "{\n  \"kind\": \"table\",\n  \"elements\": [\"0\" \"1\"]\n}\n");
  const Error e = error_of([&] { read_json_file(dir / "bad.json"); });
  CHECK(e.kind() == ErrorKind::kParse);
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  CHECK(error_of([&] { read_json_file(dir / "missing.json"); }).kind() == ErrorKind::kParse);
}

TEST_CASE("relations round-trip") {
  for (const char* name : {"boolean", "diamond", "zinf-tropical", "zinf-arctic"}) {
    CAPTURE(std::string(name));
    const Quantale& q = catalog_entry(name).quantale;
    Rng rng(derive_seed(11, name));
    for (std::size_t rows = 0; rows <= 3; ++rows) {
      for (std::size_t cols = 0; cols <= 3; ++cols) {
        const QRelation r = sample_relation(q, numbered_set("X", rows), numbered_set("Y", cols, "y"),
                                            rng, 10);
        CHECK(relation_from_json(q, Json::parse(relation_to_json(r).dump())) == r);
      }
    }
  }
}

TEST_CASE("relation values use element names or integers") {
  const Json j = Json::parse(
      R"({"source":{"name":"X","members":["a"]},"target":{"name":"Y","members":["b","c"]},
          "values":[[3,"-inf"]]})");
  const Quantale z = Quantale::tropical(0);
  const QRelation r = relation_from_json(z, j);
  CHECK(r(0, 0) == Element{3});
  CHECK(r(0, 1) == Element{kNegInf});
  const Error e = error_of([&] { relation_from_json(boolean_quantale(), j); });
  CHECK(std::string(e.what()).find("values[0][0]") != std::string::npos);
  Json dup = j;
  dup["target"]["members"] = Json::array({"b", "b"});
  CHECK(error_of([&] { relation_from_json(z, dup); }).kind() == ErrorKind::kDuplicateName);
}

TEST_CASE("quantaloid files round-trip") {
  const Quantale z2 = shift_z2();
  const auto one = FiniteQuantaloid::from_quantale(z2);
  const Family d{index(z2.par_unit())};
  const auto two = with_girard_par(FiniteQuantaloid::uniform({"a", "b"}, boolean_quantale()),
                                   {0, 0});
  for (const auto* q : {&one, &two}) {
    const Family fam(q->size(), q == &one ? d[0] : 0);
    const QuantaloidFile back = quantaloid_from_json(Json::parse(quantaloid_to_json(*q, fam).dump()));
    CHECK(quantaloid_to_json(back.quantaloid, back.family) == quantaloid_to_json(*q, fam));
    CHECK(back.family == fam);
    CHECK(check_quantaloid_laws(back.quantaloid).passed() == check_quantaloid_laws(*q).passed());
  }
  CHECK(quantaloid_from_json(quantaloid_to_json(one)).quantaloid.to_quantale() == z2);
  Json j = quantaloid_to_json(two);
  j["tensor"].erase(0);
  CHECK(error_of([&] { quantaloid_from_json(j); }).kind() == ErrorKind::kParse);
}

TEST_CASE("categories and bimodules round-trip") {
  const auto Q = FiniteQuantaloid::from_quantale(shift_z2());
  const auto cats = sample_categories(Q, true, 3, 5);
  for (const auto& m : cats) {
    CHECK(category_from_json(Q, category_to_json(Q, *m)) == *m);
  }
  const auto bims = enumerate_qbimodules(Q, cats.back(), cats.front());
  REQUIRE(bims.has_value());
  REQUIRE(!bims->empty());
  for (const auto& b : *bims) {
    CHECK(bimodule_from_json(Q, bimodule_to_json(Q, b)) == b);
  }
}

TEST_CASE("category files resolve their quantaloid") {
  const auto dir = scratch_dir("category");
  const auto Q = FiniteQuantaloid::from_quantale(boolean_quantale());
  write(dir / "q.json", quantaloid_to_json(Q).dump());
  Json cat = category_to_json(Q, discrete_category(Q, "D", numbered_set("D", 2), {0, 0}, false));
  cat["quantaloid"] = "q.json";
  write(dir / "d.json", cat.dump());
  const CategoryFile file = load_category(dir / "d.json");
  CHECK(file.category->size() == 2);
  CHECK(validate_qcategory(file.quantaloid->quantaloid, *file.category).passed());

  Json bim = Json::parse(R"({"source":"d.json","target":"d.json",
                             "tensor":[["1","0"],["0","1"]]})");
  const QBimodule b = bimodule_from_json(Q, bim, dir);
  CHECK(validate_qbimodule(Q, b).passed());
  cat["rho"] = Json::array({"*", "nowhere"});
  CHECK(error_of([&] { category_from_json(Q, cat); }).kind() == ErrorKind::kUnknownName);
}
