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

#include "linbicat/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, path + ": " + what);
}

/// Runs `fn`, prefixing any library error with the field path.
template <class F>
auto at_field(const std::string& path, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_member(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string string_of(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& array_of(const Json& j, const std::string& path, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) bad(path, "expected an array");
  if (size && j.size() != *size) {
    bad(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

std::vector<std::string> strings_of(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = array_of(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(string_of(a[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<FiniteLattice::Cover> covers_of(const Json& j, const std::string& path) {
  std::vector<FiniteLattice::Cover> out;
  const Json& a = array_of(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& pair = array_of(a[i], p, 2);
    out.emplace_back(string_of(pair[0], p + "[0]"), string_of(pair[1], p + "[1]"));
  }
  return out;
}

FiniteLattice lattice_of(const Json& j, const std::string& path) {
  auto names = strings_of(member(j, path, "elements"), path + ".elements");
  auto covers = covers_of(member(j, path, "covers"), path + ".covers");
  return at_field(path, [&] { return FiniteLattice::build(std::move(names), covers); });
}

Json lattice_json(const FiniteLattice& lat) {
  Json covers = Json::array();
  for (auto [a, b] : lat.covers()) covers.push_back(Json::array({lat.name(a), lat.name(b)}));
  return Json{{"elements", lat.names()}, {"covers", std::move(covers)}};
}

std::size_t element_of(const FiniteLattice& lat, const Json& j, const std::string& path) {
  const std::string name = string_of(j, path);
  if (!lat.contains(name)) throw Error(ErrorKind::kUnknownElement, path + ": '" + name + "'");
  return lat.index_of(name);
}

/// A rows × cols matrix of element names in `lat`, row-major.
std::vector<std::size_t> matrix_of(const FiniteLattice& lat, const Json& j, const std::string& path,
                                   std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> out;
  const Json& a = array_of(j, path, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string p = path + "[" + std::to_string(r) + "]";
    const Json& row = array_of(a[r], p, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      out.push_back(element_of(lat, row[c], p + "[" + std::to_string(c) + "]"));
    }
  }
  return out;
}

Json matrix_json(const FiniteLattice& lat, const std::vector<std::size_t>& values, std::size_t rows,
                 std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(lat.name(values[r * cols + c]));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string() + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
}

Quantale quantale_from_json(const Json& j) {
  const std::string kind = string_of(member(j, "quantale", "kind"), "kind");
  if (kind == "zinf") {
    const std::string flavor = string_of(member(j, "quantale", "flavor"), "flavor");
    std::int64_t d = 0;
    if (const Json* dj = optional_member(j, "dualizer")) {
      if (!dj->is_number_integer()) bad("dualizer", "expected an integer");
      d = dj->get<std::int64_t>();
      if (d <= -kZinfLimit || d >= kZinfLimit) bad("dualizer", "out of range");
    }
    if (flavor == "tropical") return Quantale::tropical(d);
    if (flavor == "arctic") return Quantale::arctic(d);
    bad("flavor", "expected \"tropical\" or \"arctic\", found \"" + flavor + "\"");
  }
  if (kind != "table") bad("kind", "expected \"table\" or \"zinf\", found \"" + kind + "\"");
  FiniteLattice lat = lattice_of(j, "quantale");
  const std::size_t n = lat.size();
  auto tensor = matrix_of(lat, member(j, "quantale", "tensor"), "tensor", n, n);
  const std::size_t unit = element_of(lat, member(j, "quantale", "unit"), "unit");
  std::optional<ParTable> par;
  if (const Json* pj = optional_member(j, "par")) {
    par = ParTable{matrix_of(lat, member(*pj, "par", "table"), "par.table", n, n),
                   element_of(lat, member(*pj, "par", "unit"), "par.unit")};
  }
  std::optional<std::size_t> dualizer;
  if (const Json* dj = optional_member(j, "dualizer")) dualizer = element_of(lat, *dj, "dualizer");
  return Quantale::from_table(std::move(lat), std::move(tensor), unit, std::move(par), dualizer);
}

Json quantale_to_json(const Quantale& q) {
  if (!q.is_finite()) {
    const std::int64_t d = q.dualizer() ? q.dualizer()->raw : 0;
    const bool arctic = q.is_opposite_view();
    if (q != (arctic ? Quantale::arctic(d) : Quantale::tropical(d))) {
      throw Error(ErrorKind::kShapeMismatch, "extended-integer variant has no file form");
    }
    return Json{{"kind", "zinf"}, {"flavor", arctic ? "arctic" : "tropical"}, {"dualizer", d}};
  }
  const auto& t = q.table();
  const std::size_t n = q.size();
  Json out = lattice_json(t.lattice);
  out = Json{{"kind", "table"},
             {"elements", out["elements"]},
             {"covers", out["covers"]},
             {"tensor", matrix_json(t.lattice, t.tensor, n, n)},
             {"unit", t.lattice.name(t.unit)}};
  if (t.par) {
    out["par"] = Json{{"table", matrix_json(t.lattice, t.par->table, n, n)},
                      {"unit", t.lattice.name(t.par->unit)}};
  }
  if (t.dualizer) out["dualizer"] = t.lattice.name(*t.dualizer);
  return out;
}

Json set_to_json(const FiniteSet& s) { return Json{{"name", s.name}, {"members", s.members}}; }

FiniteSet set_from_json(const Json& j, const std::string& path) {
  auto name = string_of(member(j, path, "name"), path + ".name");
  auto members = strings_of(member(j, path, "members"), path + ".members");
  return at_field(path, [&] { return make_set(std::move(name), std::move(members)); });
}

QRelation relation_from_json(const Quantale& q, const Json& j) {
  FiniteSet source = set_from_json(member(j, "relation", "source"), "source");
  FiniteSet target = set_from_json(member(j, "relation", "target"), "target");
  const Json& rows = array_of(member(j, "relation", "values"), "values", source.size());
  std::vector<Element> values;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    const std::string p = "values[" + std::to_string(x) + "]";
    const Json& row = array_of(rows[x], p, target.size());
    for (std::size_t y = 0; y < row.size(); ++y) {
      values.push_back(at_field(p + "[" + std::to_string(y) + "]",
                                [&] { return q.from_json(row[y]); }));
    }
  }
  return QRelation(q, std::move(source), std::move(target), std::move(values));
}

Json relation_to_json(const QRelation& r) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < r.rows(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < r.cols(); ++y) row.push_back(r.quantale().to_json(r(x, y)));
    rows.push_back(std::move(row));
  }
  return Json{{"source", set_to_json(r.source())},
              {"target", set_to_json(r.target())},
              {"values", std::move(rows)}};
}

QuantaloidFile quantaloid_from_json(const Json& j) {
  const auto objects = strings_of(member(j, "quantaloid", "objects"), "objects");
  const std::size_t k = objects.size();
  const Json& hom_rows = array_of(member(j, "quantaloid", "homs"), "homs", k);
  std::vector<FiniteLattice> homs;
  for (std::size_t a = 0; a < k; ++a) {
    const std::string p = "homs[" + std::to_string(a) + "]";
    const Json& row = array_of(hom_rows[a], p, k);
    for (std::size_t b = 0; b < k; ++b) {
      homs.push_back(lattice_of(row[b], p + "[" + std::to_string(b) + "]"));
    }
  }
  auto hom = [&](std::size_t a, std::size_t b) -> const FiniteLattice& { return homs[a * k + b]; };
  auto tables = [&](const Json& tj, const std::string& path) {
    const Json& arr = array_of(tj, path, k * k * k);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t t = (a * k + b) * k + c;
          out.push_back(matrix_of(hom(a, c), arr[t], path + "[" + std::to_string(t) + "]",
                                  hom(a, b).size(), hom(b, c).size()));
        }
      }
    }
    return out;
  };
  auto diagonal = [&](const Json& dj, const std::string& path) {
    const Json& arr = array_of(dj, path, k);
    Family out;
    for (std::size_t a = 0; a < k; ++a) {
      out.push_back(element_of(hom(a, a), arr[a], path + "[" + std::to_string(a) + "]"));
    }
    return out;
  };
  auto tensor = tables(member(j, "quantaloid", "tensor"), "tensor");
  auto tops = diagonal(member(j, "quantaloid", "identities"), "identities");
  std::optional<FiniteQuantaloid::ParLayer> par;
  if (const Json* pj = optional_member(j, "par")) {
    par = FiniteQuantaloid::ParLayer{tables(member(*pj, "par", "tables"), "par.tables"),
                                     diagonal(member(*pj, "par", "units"), "par.units")};
  }
  std::optional<Family> family;
  if (const Json* fj = optional_member(j, "dualizing_family")) {
    family = diagonal(*fj, "dualizing_family");
  }
  return QuantaloidFile{FiniteQuantaloid(objects, std::move(homs), std::move(tensor),
                                         std::move(tops), std::move(par)),
                        std::move(family)};
}

Json quantaloid_to_json(const FiniteQuantaloid& q, const std::optional<Family>& family) {
  const std::size_t k = q.size();
  Json homs = Json::array();
  for (std::size_t a = 0; a < k; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < k; ++b) row.push_back(lattice_json(q.hom(a, b)));
    homs.push_back(std::move(row));
  }
  auto tables = [&](const std::vector<std::vector<std::size_t>>& ts) {
    Json out = Json::array();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          out.push_back(matrix_json(q.hom(a, c), ts[(a * k + b) * k + c], q.hom(a, b).size(),
                                    q.hom(b, c).size()));
        }
      }
    }
    return out;
  };
  auto diagonal = [&](const Family& d) {
    Json out = Json::array();
    for (std::size_t a = 0; a < k; ++a) out.push_back(q.hom(a, a).name(d[a]));
    return out;
  };
  Family tops;
  for (std::size_t a = 0; a < k; ++a) tops.push_back(q.top_id(a).elem);
  Json out{{"objects", q.objects()},
           {"homs", std::move(homs)},
           {"tensor", tables(q.tensor_tables())},
           {"identities", diagonal(tops)}};
  if (q.has_par()) {
    out["par"] = Json{{"tables", tables(q.par_layer()->tables)},
                      {"units", diagonal(q.par_layer()->bot_ids)}};
  }
  if (family) {
    if (family->size() != k) throw Error(ErrorKind::kFamilyShapeMismatch, "one element per object");
    out["dualizing_family"] = diagonal(*family);
  }
  return out;
}

QCategory category_from_json(const FiniteQuantaloid& q, const Json& j) {
  QCategory m;
  m.name = string_of(member(j, "category", "name"), "name");
  m.carrier = set_from_json(member(j, "category", "carrier"), "carrier");
  const auto rho = strings_of(member(j, "category", "rho"), "rho");
  if (rho.size() != m.size()) bad("rho", "expected one object per member");
  for (std::size_t x = 0; x < rho.size(); ++x) {
    m.rho.push_back(at_field("rho[" + std::to_string(x) + "]", [&] { return q.index_of(rho[x]); }));
  }
  // Entry (x, x') lives in hom(rho x, rho x').
  auto enrichment = [&](const Json& mj, const std::string& path) {
    const Json& rows = array_of(mj, path, m.size());
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < m.size(); ++x) {
      const std::string p = path + "[" + std::to_string(x) + "]";
      const Json& row = array_of(rows[x], p, m.size());
      for (std::size_t x2 = 0; x2 < m.size(); ++x2) {
        out.push_back(
            element_of(q.hom(m.rho[x], m.rho[x2]), row[x2], p + "[" + std::to_string(x2) + "]"));
      }
    }
    return out;
  };
  m.enrich_tensor = enrichment(member(j, "category", "tensor"), "tensor");
  if (const Json* pj = optional_member(j, "par")) m.enrich_par = enrichment(*pj, "par");
  return m;
}

Json category_to_json(const FiniteQuantaloid& q, const QCategory& m) {
  auto enrichment = [&](const std::vector<std::size_t>& values) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < m.size(); ++x) {
      Json row = Json::array();
      for (std::size_t x2 = 0; x2 < m.size(); ++x2) {
        row.push_back(q.hom(m.rho[x], m.rho[x2]).name(values[x * m.size() + x2]));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json rho = Json::array();
  for (std::size_t a : m.rho) rho.push_back(q.objects()[a]);
  Json out{{"name", m.name},
           {"carrier", set_to_json(m.carrier)},
           {"rho", std::move(rho)},
           {"tensor", enrichment(m.enrich_tensor)}};
  if (m.enrich_par) out["par"] = enrichment(*m.enrich_par);
  return out;
}

QBimodule bimodule_from_json(const FiniteQuantaloid& q, const Json& j,
                             const std::filesystem::path& base_dir) {
  auto side = [&](const char* key) -> CategoryRef {
    const Json& cj = member(j, "bimodule", key);
    if (cj.is_string()) {
      const Json file = read_json_file(base_dir / cj.get<std::string>());
      return std::make_shared<QCategory>(category_from_json(q, file));
    }
    return std::make_shared<QCategory>(
        at_field(key, [&] { return category_from_json(q, cj); }));
  };
  QBimodule b{side("source"), side("target"), {}, std::nullopt};
  const QCategory& m = *b.source;
  const QCategory& n = *b.target;
  {
    const Json& rows = array_of(member(j, "bimodule", "tensor"), "tensor", m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      const std::string p = "tensor[" + std::to_string(x) + "]";
      const Json& row = array_of(rows[x], p, n.size());
      for (std::size_t y = 0; y < n.size(); ++y) {
        b.theta_tensor.push_back(
            element_of(q.hom(m.rho[x], n.rho[y]), row[y], p + "[" + std::to_string(y) + "]"));
      }
    }
  }
  if (const Json* pj = optional_member(j, "par")) {
    const Json& rows = array_of(*pj, "par", n.size());
    std::vector<std::size_t> par;
    for (std::size_t y = 0; y < n.size(); ++y) {
      const std::string p = "par[" + std::to_string(y) + "]";
      const Json& row = array_of(rows[y], p, m.size());
      for (std::size_t x = 0; x < m.size(); ++x) {
        par.push_back(
            element_of(q.hom(n.rho[y], m.rho[x]), row[x], p + "[" + std::to_string(x) + "]"));
      }
    }
    b.theta_par = std::move(par);
  }
  return b;
}

Json bimodule_to_json(const FiniteQuantaloid& q, const QBimodule& b) {
  const QCategory& m = *b.source;
  const QCategory& n = *b.target;
  Json tensor = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < n.size(); ++y) {
      row.push_back(q.hom(m.rho[x], n.rho[y]).name(b.tensor_at(x, y).elem));
    }
    tensor.push_back(std::move(row));
  }
  Json out{{"source", category_to_json(q, m)},
           {"target", category_to_json(q, n)},
           {"tensor", std::move(tensor)}};
  if (b.theta_par) {
    Json par = Json::array();
    for (std::size_t y = 0; y < n.size(); ++y) {
      Json row = Json::array();
      for (std::size_t x = 0; x < m.size(); ++x) {
        row.push_back(q.hom(n.rho[y], m.rho[x]).name(b.par_at(y, x).elem));
      }
      par.push_back(std::move(row));
    }
    out["par"] = std::move(par);
  }
  return out;
}

CategoryFile load_category(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  const std::string ref = string_of(member(j, "category", "quantaloid"), "quantaloid");
  auto file = std::make_shared<QuantaloidFile>(
      quantaloid_from_json(read_json_file(path.parent_path() / ref)));
  auto category = std::make_shared<QCategory>(category_from_json(file->quantaloid, j));
  return CategoryFile{std::move(file), std::move(category)};
}

}  // namespace linbicat
