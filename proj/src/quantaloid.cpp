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

#include "linbicat/quantaloid.hpp"

#include <algorithm>
#include <set>

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

std::string arrow_text(const FiniteQuantaloid& q, const Arrow& f) {
  return q.objects()[f.from] + "->" + q.objects()[f.to];
}

}  // namespace

FiniteQuantaloid::FiniteQuantaloid(std::vector<std::string> objects,
                                   std::vector<FiniteLattice> homs,
                                   std::vector<std::vector<std::size_t>> tensor,
                                   std::vector<std::size_t> top_ids,
                                   std::optional<ParLayer> par)
    : objects_(std::move(objects)),
      homs_(std::move(homs)),
      tensor_(std::move(tensor)),
      top_ids_(std::move(top_ids)),
      par_(std::move(par)) {
  const std::size_t k = objects_.size();
  std::set<std::string> seen;
  for (const auto& o : objects_) {
    if (!seen.insert(o).second) throw Error(ErrorKind::kDuplicateName, "object '" + o + "'");
  }
  if (homs_.size() != k * k) throw Error(ErrorKind::kShapeMismatch, "need k*k hom lattices");
  if (top_ids_.size() != k) throw Error(ErrorKind::kShapeMismatch, "need one identity per object");
  auto check_tables = [&](const std::vector<std::vector<std::size_t>>& tables,
                          const std::vector<std::size_t>& ids, const char* what) {
    if (tables.size() != k * k * k) {
      throw Error(ErrorKind::kShapeMismatch, std::string(what) + ": need k^3 tables");
    }
    if (ids.size() != k) throw Error(ErrorKind::kShapeMismatch, std::string(what) + ": identities");
    for (std::size_t a = 0; a < k; ++a) {
      if (ids[a] >= hom(a, a).size()) {
        throw Error(ErrorKind::kUnknownElement, std::string(what) + ": identity out of range");
      }
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          const auto& t = tables[triple(a, b, c)];
          if (t.size() != hom(a, b).size() * hom(b, c).size()) {
            throw Error(ErrorKind::kShapeMismatch, std::string(what) + ": table size");
          }
          for (std::size_t v : t) {
            if (v >= hom(a, c).size()) {
              throw Error(ErrorKind::kUnknownElement, std::string(what) + ": entry out of range");
            }
          }
        }
      }
    }
  };
  check_tables(tensor_, top_ids_, "tensor");
  if (par_) check_tables(par_->tables, par_->bot_ids, "par");
}

FiniteQuantaloid FiniteQuantaloid::from_quantale(const Quantale& q) {
  return uniform({"*"}, q);
}

FiniteQuantaloid FiniteQuantaloid::uniform(std::vector<std::string> objects, const Quantale& q) {
  const auto& t = q.table();
  const std::size_t k = objects.size();
  std::vector<FiniteLattice> homs(k * k, t.lattice);
  std::vector<std::vector<std::size_t>> tensor(k * k * k, t.tensor);
  std::vector<std::size_t> tops(k, t.unit);
  std::optional<ParLayer> par;
  if (t.par) par = ParLayer{std::vector(k * k * k, t.par->table), std::vector(k, t.par->unit)};
  return FiniteQuantaloid(std::move(objects), std::move(homs), std::move(tensor), std::move(tops),
                          std::move(par));
}

Quantale FiniteQuantaloid::to_quantale() const {
  if (size() != 1) throw Error(ErrorKind::kShapeMismatch, "quantale needs exactly one object");
  std::optional<ParTable> par;
  if (par_) par = ParTable{par_->tables[0], par_->bot_ids[0]};
  return Quantale::from_table(homs_[0], tensor_[0], top_ids_[0], std::move(par));
}

std::size_t FiniteQuantaloid::index_of(std::string_view object) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == object) return i;
  }
  throw Error(ErrorKind::kUnknownName, "object '" + std::string(object) + "'");
}

void FiniteQuantaloid::require(const Arrow& f) const {
  if (f.from >= size() || f.to >= size() || f.elem >= hom(f.from, f.to).size()) {
    throw Error(ErrorKind::kUnknownElement, "arrow out of range");
  }
}

Arrow FiniteQuantaloid::tensor(const Arrow& f, const Arrow& g) const {
  if (f.to != g.from) {
    throw Error(ErrorKind::kHomMismatch, arrow_text(*this, f) + " then " + arrow_text(*this, g));
  }
  const auto& t = tensor_[triple(f.from, f.to, g.to)];
  return {f.from, g.to, t[f.elem * hom(g.from, g.to).size() + g.elem]};
}

Arrow FiniteQuantaloid::par(const Arrow& f, const Arrow& g) const {
  if (!par_) throw Error(ErrorKind::kNoParStructure, "quantaloid has no par");
  if (f.to != g.from) {
    throw Error(ErrorKind::kHomMismatch, arrow_text(*this, f) + " then " + arrow_text(*this, g));
  }
  const auto& t = par_->tables[triple(f.from, f.to, g.to)];
  return {f.from, g.to, t[f.elem * hom(g.from, g.to).size() + g.elem]};
}

Arrow FiniteQuantaloid::bot_id(std::size_t a) const {
  if (!par_) throw Error(ErrorKind::kNoParStructure, "quantaloid has no par");
  return {a, a, par_->bot_ids[a]};
}

Arrow FiniteQuantaloid::join(const Arrow& f, const Arrow& g) const {
  if (f.from != g.from || f.to != g.to) throw Error(ErrorKind::kHomMismatch, "join across homs");
  return {f.from, f.to, hom(f.from, f.to).join(f.elem, g.elem)};
}

Arrow FiniteQuantaloid::meet(const Arrow& f, const Arrow& g) const {
  if (f.from != g.from || f.to != g.to) throw Error(ErrorKind::kHomMismatch, "meet across homs");
  return {f.from, f.to, hom(f.from, f.to).meet(f.elem, g.elem)};
}

bool FiniteQuantaloid::leq(const Arrow& f, const Arrow& g) const {
  if (f.from != g.from || f.to != g.to) throw Error(ErrorKind::kHomMismatch, "order across homs");
  return hom(f.from, f.to).leq(f.elem, g.elem);
}

Arrow FiniteQuantaloid::residual_right(const Arrow& f, const Arrow& h) const {
  if (f.from != h.from) throw Error(ErrorKind::kHomMismatch, "residual needs a common source");
  const FiniteLattice& out = hom(f.to, h.to);
  std::size_t best = out.bottom();
  for (std::size_t g = 0; g < out.size(); ++g) {
    if (leq(tensor(f, {f.to, h.to, g}), h)) best = out.join(best, g);
  }
  return {f.to, h.to, best};
}

Arrow FiniteQuantaloid::residual_left(const Arrow& h, const Arrow& g) const {
  if (h.to != g.to) throw Error(ErrorKind::kHomMismatch, "residual needs a common target");
  const FiniteLattice& out = hom(h.from, g.from);
  std::size_t best = out.bottom();
  for (std::size_t f = 0; f < out.size(); ++f) {
    if (leq(tensor({h.from, g.from, f}, g), h)) best = out.join(best, f);
  }
  return {h.from, g.from, best};
}

std::vector<Arrow> FiniteQuantaloid::arrows(std::size_t a, std::size_t b) const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < hom(a, b).size(); ++i) out.push_back({a, b, i});
  return out;
}

Json FiniteQuantaloid::describe(const Arrow& f) const {
  return Json{{"from", objects_[f.from]},
              {"to", objects_[f.to]},
              {"element", hom(f.from, f.to).name(f.elem)}};
}

std::vector<std::size_t> QuantaloidModel::objects() const {
  std::vector<std::size_t> out(q_->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::optional<std::vector<Arrow>> QuantaloidModel::enumerate(std::size_t a, std::size_t b,
                                                             std::size_t cap) const {
  if (q_->hom(a, b).size() > cap) return std::nullopt;
  return q_->arrows(a, b);
}

LawReport check_quantaloid_laws(const FiniteQuantaloid& q, const Sampler& sampler) {
  const QuantaloidModel model(q);
  const auto laws = linear_quantaloid_laws<QuantaloidModel>(q.has_par());
  return run_suite<QuantaloidModel>("quantaloid", model, laws, sampler);
}

std::vector<Law<QuantaloidModel>> girard_family_laws(const Family& d) {
  using O = std::span<const std::size_t>;
  using C = std::span<const Arrow>;
  return {
      {"girard.cyclic", 2, {{0, 1, "f"}},
       [d](const QuantaloidModel& m, O o, C c) {
         const auto& Q = m.quantaloid();
         return Q.residual_right(c[0], {o[0], o[0], d[o[0]]}) ==
                Q.residual_left({o[1], o[1], d[o[1]]}, c[0]);
       }},
      {"girard.dualizing", 2, {{0, 1, "f"}},
       [d](const QuantaloidModel& m, O o, C c) {
         const auto& Q = m.quantaloid();
         const Arrow perp = Q.residual_right(c[0], {o[0], o[0], d[o[0]]});
         return Q.residual_right(perp, {o[1], o[1], d[o[1]]}) == c[0];
       }},
  };
}

LawReport check_girard_family(const FiniteQuantaloid& q, const Family& d) {
  if (d.size() != q.size()) throw Error(ErrorKind::kFamilyShapeMismatch, "one element per object");
  for (std::size_t a = 0; a < q.size(); ++a) {
    if (d[a] >= q.hom(a, a).size()) {
      throw Error(ErrorKind::kFamilyShapeMismatch, "element out of range at " + q.objects()[a]);
    }
  }
  const auto laws = girard_family_laws(d);
  const QuantaloidModel model(q);
  return run_suite<QuantaloidModel>("girard-family", model, laws, Sampler::exhaustive());
}

FiniteQuantaloid with_girard_par(const FiniteQuantaloid& q, const Family& d) {
  const std::size_t k = q.size();
  if (d.size() != k) throw Error(ErrorKind::kFamilyShapeMismatch, "one element per object");
  auto perp = [&](const Arrow& f) { return q.residual_right(f, {f.from, f.from, d[f.from]}); };
  std::vector<FiniteLattice> homs;
  std::vector<std::size_t> tops;
  for (std::size_t a = 0; a < k; ++a) {
    tops.push_back(q.top_id(a).elem);
    for (std::size_t b = 0; b < k; ++b) homs.push_back(q.hom(a, b));
  }
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::size_t> table;
        for (const Arrow& f : q.arrows(a, b)) {
          for (const Arrow& g : q.arrows(b, c)) table.push_back(perp(q.tensor(perp(g), perp(f))).elem);
        }
        tables.push_back(std::move(table));
      }
    }
  }
  return FiniteQuantaloid(q.objects(), std::move(homs), q.tensor_tables(), std::move(tops),
                          FiniteQuantaloid::ParLayer{std::move(tables), d});
}

std::vector<Family> find_girard_families(const FiniteQuantaloid& q, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t a = 0; a < q.size(); ++a) {
    total *= q.hom(a, a).size();
    if (total > cap) throw Error(ErrorKind::kSearchSpaceTooLarge, "too many candidate families");
  }
  std::vector<Family> out;
  for (std::size_t code = 0; code < total; ++code) {
    Family d(q.size());
    std::size_t rest = code;
    for (std::size_t a = q.size(); a-- > 0;) {
      d[a] = rest % q.hom(a, a).size();
      rest /= q.hom(a, a).size();
    }
    if (check_girard_family(q, d).passed()) out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool check_monad(const FiniteQuantaloid& q, const Monad& m) {
  const Arrow a{m.object, m.object, m.m};
  return q.leq(q.top_id(m.object), a) && q.leq(q.tensor(a, a), a);
}

bool check_monad_bimodule(const FiniteQuantaloid& q, const MonadBimodule& f) {
  const Arrow arrow{f.source.object, f.target.object, f.f};
  const Arrow m{f.source.object, f.source.object, f.source.m};
  const Arrow n{f.target.object, f.target.object, f.target.m};
  return q.leq(q.tensor(m, arrow), arrow) && q.leq(q.tensor(arrow, n), arrow);
}

MonadBimodule monq_compose(const FiniteQuantaloid& q, const MonadBimodule& f,
                           const MonadBimodule& g) {
  if (!(f.target == g.source)) throw Error(ErrorKind::kHomMismatch, "monads do not match");
  const Arrow fg = q.tensor({f.source.object, f.target.object, f.f},
                            {g.source.object, g.target.object, g.f});
  return {f.source, g.target, fg.elem};
}

MonadBimodule monq_identity(const Monad& m) { return {m, m, m.m}; }

std::vector<Monad> enumerate_monads(const FiniteQuantaloid& q) {
  std::vector<Monad> out;
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t e = 0; e < q.hom(a, a).size(); ++e) {
      if (check_monad(q, {a, e})) out.push_back({a, e});
    }
  }
  return out;
}

std::size_t MonQ::local(std::size_t a, std::size_t b, std::size_t elem) const {
  const auto& table = base_element[a * monads.size() + b];
  const auto it = std::find(table.begin(), table.end(), elem);
  if (it == table.end()) {
    throw Error(ErrorKind::kFamilyShapeMismatch,
                "element is not a bimodule between monads " + std::to_string(a) + " and " +
                    std::to_string(b));
  }
  return static_cast<std::size_t>(it - table.begin());
}

MonQ materialize_monq(const FiniteQuantaloid& q, std::vector<Monad> monads) {
  const std::size_t k = monads.size();
  std::vector<std::string> names;
  for (const auto& m : monads) {
    if (!check_monad(q, m)) throw Error(ErrorKind::kFamilyShapeMismatch, "not a monad");
    names.push_back(q.objects()[m.object] + "/" + q.hom(m.object, m.object).name(m.m));
  }
  std::vector<std::vector<std::size_t>> base(k * k);
  std::vector<FiniteLattice> homs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const FiniteLattice& h = q.hom(monads[i].object, monads[j].object);
      auto& elems = base[i * k + j];
      std::vector<std::string> labels;
      for (std::size_t e = 0; e < h.size(); ++e) {
        if (check_monad_bimodule(q, {monads[i], monads[j], e})) {
          elems.push_back(e);
          labels.push_back(h.name(e));
        }
      }
      std::vector<std::uint8_t> order(elems.size() * elems.size());
      for (std::size_t x = 0; x < elems.size(); ++x) {
        for (std::size_t y = 0; y < elems.size(); ++y) {
          order[x * elems.size() + y] = h.leq(elems[x], elems[y]) ? 1 : 0;
        }
      }
      homs.push_back(FiniteLattice::from_order(std::move(labels), std::move(order)));
    }
  }
  MonQ out{FiniteQuantaloid({"*"}, {FiniteLattice::from_order({"0"}, {1})}, {{0}}, {0}),
           monads, base};
  std::vector<std::vector<std::size_t>> tensor(k * k * k);
  std::vector<std::size_t> tops(k);
  for (std::size_t i = 0; i < k; ++i) {
    tops[i] = out.local(i, i, monads[i].m);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        auto& t = tensor[(i * k + j) * k + l];
        for (std::size_t f : base[i * k + j]) {
          for (std::size_t g : base[j * k + l]) {
            const Arrow fg = q.tensor({monads[i].object, monads[j].object, f},
                                      {monads[j].object, monads[l].object, g});
            t.push_back(out.local(i, l, fg.elem));
          }
        }
      }
    }
  }
  out.quantaloid = FiniteQuantaloid(std::move(names), std::move(homs), std::move(tensor),
                                    std::move(tops));
  return out;
}

MonQ materialize_monq(const FiniteQuantaloid& q, std::size_t max_monads) {
  auto monads = enumerate_monads(q);
  if (monads.size() > max_monads) {
    throw Error(ErrorKind::kSearchSpaceTooLarge,
                std::to_string(monads.size()) + " monads exceed the limit");
  }
  return materialize_monq(q, std::move(monads));
}

Family monq_girard_family(const FiniteQuantaloid& q, std::span<const Monad> monads,
                          const Family& d) {
  if (d.size() != q.size()) throw Error(ErrorKind::kFamilyShapeMismatch, "one element per object");
  Family out;
  for (const auto& m : monads) {
    const std::size_t a = m.object;
    out.push_back(q.residual_right({a, a, m.m}, {a, a, d[a]}).elem);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LinearParts {
  Arrow mt, mp, top, bot;
};

LinearParts parts(const FiniteQuantaloid& q, const LinearMonad& m) {
  const std::size_t a = m.object;
  return {{a, a, m.tensor_part}, {a, a, m.par_part}, q.top_id(a), q.bot_id(a)};
}

}  // namespace

Json describe_monad(const FiniteQuantaloid& q, const LinearMonad& m) {
  const FiniteLattice& h = q.hom(m.object, m.object);
  return Json{{"object", q.objects()[m.object]},
              {"tensor", h.name(m.tensor_part)},
              {"par", h.name(m.par_part)}};
}

LawReport validate_linear_monad(const FiniteQuantaloid& q, const LinearMonad& m) {
  const auto [mt, mp, top, bot] = parts(q, m);
  const Json witness{{"monad", describe_monad(q, m)}};
  const std::pair<const char*, bool> laws[] = {
      {"lmonad.tensor.unit", q.leq(top, mt)},
      {"lmonad.tensor.multiplication", q.leq(q.tensor(mt, mt), mt)},
      {"lmonad.par.counit", q.leq(mp, bot)},
      {"lmonad.par.comultiplication", q.leq(mp, q.par(mp, mp))},
      {"lmonad.mixed.par_tensor", q.leq(mt, q.par(mp, mt))},
      {"lmonad.mixed.tensor_par", q.leq(mt, q.par(mt, mp))},
      {"lmonad.mixed.act_right", q.leq(q.tensor(mt, mp), mp)},
      {"lmonad.mixed.act_left", q.leq(q.tensor(mp, mt), mp)},
  };
  LawReport report("linear-monad");
  for (const auto& [id, ok] : laws) {
    if (ok) {
      report.pass(id, "exhaustive");
    } else {
      report.fail(id, witness, "exhaustive");
    }
  }
  return report;
}

LawReport validate_linear_monad_bimodule(const FiniteQuantaloid& q,
                                         const LinearMonadBimodule& f) {
  const auto m = parts(q, f.source);
  const auto n = parts(q, f.target);
  const std::size_t a = f.source.object;
  const std::size_t b = f.target.object;
  const Arrow ft{a, b, f.tensor_part};
  const Arrow fp{b, a, f.par_part};
  const Json witness{{"source", describe_monad(q, f.source)},
                     {"target", describe_monad(q, f.target)},
                     {"tensor", q.hom(a, b).name(f.tensor_part)},
                     {"par", q.hom(b, a).name(f.par_part)}};
  const std::pair<const char*, bool> laws[] = {
      {"lmonbim.tensor.right_action", q.leq(q.tensor(ft, n.mt), ft)},
      {"lmonbim.tensor.left_action", q.leq(q.tensor(m.mt, ft), ft)},
      {"lmonbim.tensor.left_coaction", q.leq(ft, q.par(m.mp, ft))},
      {"lmonbim.tensor.right_coaction", q.leq(ft, q.par(ft, n.mp))},
      {"lmonbim.par.left_coaction", q.leq(fp, q.par(n.mp, fp))},
      {"lmonbim.par.right_coaction", q.leq(fp, q.par(fp, m.mp))},
      {"lmonbim.par.left_action", q.leq(q.tensor(n.mt, fp), fp)},
      {"lmonbim.par.right_action", q.leq(q.tensor(fp, m.mt), fp)},
  };
  LawReport report("linear-monad-bimodule");
  for (const auto& [id, ok] : laws) {
    if (ok) {
      report.pass(id, "exhaustive");
    } else {
      report.fail(id, witness, "exhaustive");
    }
  }
  return report;
}

bool check_linear_monad(const FiniteQuantaloid& q, const LinearMonad& m) {
  return validate_linear_monad(q, m).passed();
}

bool check_linear_monad_bimodule(const FiniteQuantaloid& q, const LinearMonadBimodule& f) {
  return validate_linear_monad_bimodule(q, f).passed();
}

LinearMonadBimodule linear_monq_compose_tensor(const FiniteQuantaloid& q,
                                               const LinearMonadBimodule& f,
                                               const LinearMonadBimodule& g) {
  if (!(f.target == g.source)) throw Error(ErrorKind::kHomMismatch, "monads do not match");
  const std::size_t a = f.source.object, b = f.target.object, c = g.target.object;
  const Arrow t = q.tensor({a, b, f.tensor_part}, {b, c, g.tensor_part});
  const Arrow p = q.par({c, b, g.par_part}, {b, a, f.par_part});
  return {f.source, g.target, t.elem, p.elem};
}

LinearMonadBimodule linear_monq_compose_par(const FiniteQuantaloid& q,
                                            const LinearMonadBimodule& f,
                                            const LinearMonadBimodule& g) {
  if (!(f.target == g.source)) throw Error(ErrorKind::kHomMismatch, "monads do not match");
  const std::size_t a = f.source.object, b = f.target.object, c = g.target.object;
  const Arrow t = q.par({a, b, f.tensor_part}, {b, c, g.tensor_part});
  const Arrow p = q.tensor({c, b, g.par_part}, {b, a, f.par_part});
  return {f.source, g.target, t.elem, p.elem};
}

LinearMonadBimodule linear_monq_top_identity(const LinearMonad& m) {
  return {m, m, m.tensor_part, m.par_part};
}

LinearMonadBimodule linear_monq_bot_identity(const LinearMonad& m) {
  return {m, m, m.par_part, m.tensor_part};
}

LinearMonad trivial_linear_monad(const FiniteQuantaloid& q, std::size_t a) {
  return {a, q.top_id(a).elem, q.bot_id(a).elem};
}

LinearMonadBimodule trivial_linear_bimodule(const FiniteQuantaloid& q, const Arrow& f) {
  const Arrow back = q.residual_right(f, q.top_id(f.from));
  return {trivial_linear_monad(q, f.from), trivial_linear_monad(q, f.to), f.elem, back.elem};
}

std::vector<LinearMonad> enumerate_linear_monads(const FiniteQuantaloid& q) {
  std::vector<LinearMonad> out;
  for (std::size_t a = 0; a < q.size(); ++a) {
    const std::size_t n = q.hom(a, a).size();
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t p = 0; p < n; ++p) {
        if (check_linear_monad(q, {a, t, p})) out.push_back({a, t, p});
      }
    }
  }
  return out;
}

std::vector<LinearMonadBimodule> enumerate_linear_bimodules(const FiniteQuantaloid& q,
                                                            const LinearMonad& m,
                                                            const LinearMonad& n) {
  std::vector<LinearMonadBimodule> out;
  const std::size_t forward = q.hom(m.object, n.object).size();
  const std::size_t backward = q.hom(n.object, m.object).size();
  for (std::size_t t = 0; t < forward; ++t) {
    for (std::size_t p = 0; p < backward; ++p) {
      if (check_linear_monad_bimodule(q, {m, n, t, p})) out.push_back({m, n, t, p});
    }
  }
  return out;
}

std::optional<std::vector<LinearMonadBimodule>> LinearMonQModel::enumerate(
    const LinearMonad& m, const LinearMonad& n, std::size_t cap) const {
  if (q_->hom(m.object, n.object).size() * q_->hom(n.object, m.object).size() > cap) {
    return std::nullopt;
  }
  return enumerate_linear_bimodules(*q_, m, n);
}

LinearMonadBimodule LinearMonQModel::sample(const LinearMonad& m, const LinearMonad& n,
                                            Rng& rng) const {
  const auto all = enumerate_linear_bimodules(*q_, m, n);
  if (all.empty()) return bottom(m, n);
  return all[rng.below(all.size())];
}

Json LinearMonQModel::describe(const LinearMonadBimodule& c) const {
  const std::size_t a = c.source.object, b = c.target.object;
  return Json{{"tensor", q_->hom(a, b).name(c.tensor_part)},
              {"par", q_->hom(b, a).name(c.par_part)}};
}

Json LinearMonQModel::describe_object(const LinearMonad& o) const {
  return describe_monad(*q_, o);
}

LinearMonadBimodule LinearMonQModel::bottom(const LinearMonad& m, const LinearMonad& n) const {
  return {m, n, q_->hom(m.object, n.object).bottom(), q_->hom(n.object, m.object).top()};
}

LinearMonadBimodule LinearMonQModel::top(const LinearMonad& m, const LinearMonad& n) const {
  return {m, n, q_->hom(m.object, n.object).top(), q_->hom(n.object, m.object).bottom()};
}

LinearMonadBimodule LinearMonQModel::join(const LinearMonadBimodule& f,
                                          const LinearMonadBimodule& g) const {
  const std::size_t a = f.source.object, b = f.target.object;
  return {f.source, f.target, q_->hom(a, b).join(f.tensor_part, g.tensor_part),
          q_->hom(b, a).meet(f.par_part, g.par_part)};
}

LinearMonadBimodule LinearMonQModel::meet(const LinearMonadBimodule& f,
                                          const LinearMonadBimodule& g) const {
  const std::size_t a = f.source.object, b = f.target.object;
  return {f.source, f.target, q_->hom(a, b).meet(f.tensor_part, g.tensor_part),
          q_->hom(b, a).join(f.par_part, g.par_part)};
}

bool LinearMonQModel::leq(const LinearMonadBimodule& f, const LinearMonadBimodule& g) const {
  const std::size_t a = f.source.object, b = f.target.object;
  return q_->hom(a, b).leq(f.tensor_part, g.tensor_part) &&
         q_->hom(b, a).leq(g.par_part, f.par_part);
}

}  // namespace linbicat
