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

#include "linbicat/catalog.hpp"

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

Quantale meet_join_frame(std::vector<std::string> names,
                         std::vector<FiniteLattice::Cover> covers) {
  FiniteLattice lat = FiniteLattice::build(std::move(names), covers);
  const std::size_t n = lat.size();
  std::vector<std::size_t> meet(n * n);
  ParTable join{std::vector<std::size_t>(n * n), lat.bottom()};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = lat.meet(a, b);
      join.table[a * n + b] = lat.join(a, b);
    }
  }
  const std::size_t unit = lat.top();
  return Quantale::from_table(std::move(lat), std::move(meet), unit, std::move(join));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"one-point", "single element; every operation is constant", one_point_quantale()});
  out.push_back({"boolean", "{0,1}, tensor and, par or, dualizer 0", boolean_quantale()});
  out.push_back({"three-chain", "0 < m < 1, tensor meet, par join", three_chain_frame()});
  out.push_back({"diamond", "0 < x,y < 1, tensor meet, par join", diamond_frame()});
  out.push_back({"shift-z2", "completion of Z/2 = {e,a} shifted by a", shift_z2()});
  out.push_back({"shift-z3", "completion of Z/3 = {e,g,g2} shifted by g", shift_z3()});
  out.push_back({"zinf-tropical", "Z with infinities under max; tensor + with -inf absorbing, par + with +inf absorbing, dualizer 0",
                 Quantale::tropical(0)});
  out.push_back({"zinf-arctic", "opposite order of zinf-tropical", Quantale::arctic(0)});
  const std::size_t sound = out.size();
  for (std::size_t i = 1; i < sound; ++i) {
    const CatalogEntry& base = out[i];
    Quantale broken = [&] {
      if (base.quantale.is_finite()) return break_par(base.quantale);
      ZinfParams p = base.quantale.zinf();
      if (base.quantale.is_opposite_view()) {
        p.absorbing_top_tensor = true;
        return Quantale::extended_integers(p).opposite();
      }
      p.absorbing_bottom_par = true;
      return Quantale::extended_integers(p);
    }();
    out.push_back({"broken-" + base.name, base.name + " with one par entry perturbed",
                   std::move(broken), true});
  }
  return out;
}

}  // namespace

Classification classify(const Quantale& q, int window) {
  Classification c;
  Sampler sampler;
  sampler.window = window;
  c.quantale = check_quantale_laws(q, std::nullopt, sampler).passed();
  c.ld = q.has_par() && check_ld_laws(q, std::nullopt, sampler).passed();
  c.dualizers = find_dualizers(q, window);
  if (!q.has_par()) return c;
  const auto dom = q.domain(window);
  auto coherent = [&](Element d) {
    const Quantale g = q.with_dualizer(d);
    for (Element a : dom)
      for (Element b : dom)
        if (girard_par(g, a, b) != q.par(a, b)) return false;
    return true;
  };
  // The derived par has unit d, so only the par unit can be coherent.
  for (Element d : c.dualizers) {
    if (d == q.par_unit() && coherent(d)) c.ld_dualizer = d;
  }
  return c;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorKind::kUnknownCatalogEntry, std::string(name));
}

Quantale one_point_quantale() {
  FiniteLattice lat = FiniteLattice::build({"a"}, {});
  return Quantale::from_table(std::move(lat), {0}, 0, ParTable{{0}, 0}, 0);
}

Quantale boolean_quantale() {
  const std::vector<FiniteLattice::Cover> covers{{"0", "1"}};
  return meet_join_frame({"0", "1"}, covers).with_dualizer(at(0));
}

Quantale three_chain_frame() {
  return meet_join_frame({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
}

Quantale diamond_frame() {
  return meet_join_frame({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

Quantale shift_z2() { return shift_completion(cyclic_monoid({"e", "a"}), "a"); }

Quantale shift_z3() { return shift_completion(cyclic_monoid({"e", "g", "g2"}), "g"); }

Quantale break_par(const Quantale& q) {
  const auto& t = q.table();
  if (!t.par || t.lattice.size() < 2) {
    throw Error(ErrorKind::kShapeMismatch, "perturbing the par needs a par and two elements");
  }
  ParTable par = *t.par;
  const std::size_t n = t.lattice.size();
  par.table[t.lattice.top() * n + t.lattice.top()] = t.lattice.bottom();
  return Quantale::from_table(t.lattice, t.tensor, t.unit, std::move(par));
}

}  // namespace linbicat
