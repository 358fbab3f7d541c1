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

#include "linbicat/verify.hpp"

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "linbicat/catalog.hpp"
#include "linbicat/error.hpp"
#include "linbicat/law_suite.hpp"
#include "linbicat/qmod.hpp"
#include "linbicat/qrel.hpp"
#include "linbicat/quantaloid.hpp"
#include "linbicat/theorem.hpp"

namespace linbicat {

namespace {

constexpr std::array<std::string_view, 8> kTheorems = {
    "LDQ",        "GirardQRel", "GirardQMod", "GirardMonQ",
    "LinearQMod", "LinearMonQ", "ClosedQRel", "ClosedQMod",
};

void require_par(const Quantale& q) {
  if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "linear drivers need a par");
}

FiniteQuantaloid one_object(const Quantale& q) {
  if (!q.is_finite()) {
    throw Error(ErrorKind::kSearchSpaceTooLarge, "quantaloid drivers need a finite carrier");
  }
  return FiniteQuantaloid::from_quantale(q);
}

/// Q-Mod suites are slow at the default caps; an exhaustive request uses
/// the Q-Mod caps with the same seed.
Sampler qmod_side(const Sampler& s) {
  if (s.mode == Sampler::Mode::kRandom) return s;
  return qmod_sampler(s.seed);
}

/// Q-Rel with the one-point set as the image of the single object.
struct QRelSide {
  std::vector<FiniteSet> sets;
  FiniteSet point;
};

QRelSide qrel_side(const TheoremConfig& cfg) {
  QRelSide side{standard_sets(cfg.max_set), {}};
  if (side.sets.empty()) throw Error(ErrorKind::kShapeMismatch, "max_set must be at least 1");
  side.point = side.sets.front();
  return side;
}

LawReport ldq(const Quantale& q, const TheoremConfig& cfg) {
  require_par(q);
  const QuantaleModel base(q, q.domain(cfg.sampler.window));
  const auto side = qrel_side(cfg);
  const QRelModel lifted(q, side.sets, cfg.sampler.window);
  const auto base_laws = linear_quantaloid_laws<QuantaleModel>(true);
  const auto lifted_laws = linear_quantaloid_laws<QRelModel>(true);
  return run_biconditional<QuantaleModel, QRelModel>(
      "LDQ", base, base_laws, cfg.sampler, lifted, lifted_laws, cfg.sampler,
      [&](int) { return side.point; },
      [&](Element e) { return QRelation(q, side.point, side.point, {e}); });
}

LawReport girard_qrel(const Quantale& q, const TheoremConfig& cfg) {
  const Element d = theorem_dualizer(q, cfg);
  const QuantaleModel base(q, q.domain(cfg.sampler.window));
  const auto side = qrel_side(cfg);
  const QRelModel lifted(q, side.sets, cfg.sampler.window);
  const auto base_laws = girard_quantale_laws(d);
  const auto lifted_laws = girard_qrel_laws(d);
  return run_biconditional<QuantaleModel, QRelModel>(
      "GirardQRel", base, base_laws, cfg.sampler, lifted, lifted_laws, cfg.sampler,
      [&](int) { return side.point; },
      [&](Element e) { return QRelation(q, side.point, side.point, {e}); });
}

LawReport girard_qmod(const Quantale& q, const TheoremConfig& cfg) {
  const FiniteQuantaloid Q = one_object(q);
  const Family d{index(theorem_dualizer(q, cfg))};
  const auto categories = sample_categories(Q, false, cfg.extra_categories, cfg.sampler.seed);
  const QuantaloidModel base(Q);
  const QModModel lifted(Q, categories);
  const auto base_laws = girard_family_laws(d);
  const auto lifted_laws = girard_qmod_laws(d);
  const CategoryRef point = categories.front();
  return run_biconditional<QuantaloidModel, QModModel>(
      "GirardQMod", base, base_laws, cfg.sampler, lifted, lifted_laws, qmod_side(cfg.sampler),
      [&](std::size_t) { return point; },
      [&](const Arrow& f) { return singleton_bimodule(Q, f, point, point); });
}

/// girard.cyclic and girard.dualizing in Mon Q for δ given by base
/// elements. Residuals are taken in Mon Q: the join of the bimodules whose
/// base composite lies below δ, so a δ that is not itself a bimodule shows
/// up as a failure.
std::vector<Law<QuantaloidModel>> monq_girard_laws(const FiniteQuantaloid& base, const MonQ& mq,
                                                   const Family& delta) {
  using O = std::span<const std::size_t>;
  using C = std::span<const Arrow>;
  const std::size_t k = mq.monads.size();
  auto lower = [&mq, k](const Arrow& f) {
    return Arrow{mq.monads[f.from].object, mq.monads[f.to].object,
                 mq.base_element[f.from * k + f.to][f.elem]};
  };
  auto below = [&base, &mq, &delta](const Arrow& composite, std::size_t i) {
    return base.leq(composite, {mq.monads[i].object, mq.monads[i].object, delta[i]});
  };
  // For f: i→j, the largest g: j→i with f⊗g <= δ_i.
  auto right = [&mq, lower, below, &base](const Arrow& f) {
    const auto& M = mq.quantaloid;
    Arrow out = M.bottom(f.to, f.from);
    for (const Arrow& g : M.arrows(f.to, f.from)) {
      if (below(base.tensor(lower(f), lower(g)), f.from)) out = M.join(out, g);
    }
    return out;
  };
  // For f: i→j, the largest h: j→i with h⊗f <= δ_j.
  auto left = [&mq, lower, below, &base](const Arrow& f) {
    const auto& M = mq.quantaloid;
    Arrow out = M.bottom(f.to, f.from);
    for (const Arrow& h : M.arrows(f.to, f.from)) {
      if (below(base.tensor(lower(h), lower(f)), f.to)) out = M.join(out, h);
    }
    return out;
  };
  return {
      {"girard.cyclic", 2, {{0, 1, "f"}},
       [right, left](const QuantaloidModel&, O, C c) { return right(c[0]) == left(c[0]); }},
      {"girard.dualizing", 2, {{0, 1, "f"}},
       [right](const QuantaloidModel&, O, C c) { return right(right(c[0])) == c[0]; }},
  };
}

LawReport girard_monq(const Quantale& q, const TheoremConfig& cfg) {
  const FiniteQuantaloid Q = one_object(q);
  const Family d{index(theorem_dualizer(q, cfg))};
  const MonQ mq = materialize_monq(Q);
  std::vector<std::size_t> trivial(Q.size());
  for (std::size_t a = 0; a < Q.size(); ++a) {
    const Monad t{a, Q.top_id(a).elem};
    for (std::size_t i = 0; i < mq.monads.size(); ++i) {
      if (mq.monads[i] == t) trivial[a] = i;
    }
  }
  const Family delta = monq_girard_family(Q, mq.monads, d);
  const QuantaloidModel base(Q);
  const QuantaloidModel lifted(mq.quantaloid);
  const auto base_laws = girard_family_laws(d);
  const auto lifted_laws = monq_girard_laws(Q, mq, delta);
  return run_biconditional<QuantaloidModel, QuantaloidModel>(
      "GirardMonQ", base, base_laws, cfg.sampler, lifted, lifted_laws, cfg.sampler,
      [&](std::size_t a) { return trivial[a]; },
      [&](const Arrow& f) {
        const std::size_t i = trivial[f.from];
        const std::size_t j = trivial[f.to];
        return Arrow{i, j, mq.local(i, j, f.elem)};
      });
}

LawReport linear_qmod(const Quantale& q, const TheoremConfig& cfg) {
  require_par(q);
  const FiniteQuantaloid Q = one_object(q);
  const auto categories = sample_categories(Q, true, cfg.extra_categories, cfg.sampler.seed);
  LawReport report = verify_linear_qmod_theorem(Q, categories, qmod_side(cfg.sampler));
  LawReport named("LinearQMod");
  for (const auto& e : report.entries()) named.add(e);
  return named;
}

LawReport linear_monq(const Quantale& q, const TheoremConfig& cfg) {
  require_par(q);
  const FiniteQuantaloid Q = one_object(q);
  std::vector<LinearMonad> monads = enumerate_linear_monads(Q);
  for (std::size_t a = 0; a < Q.size(); ++a) {
    const LinearMonad t = trivial_linear_monad(Q, a);
    bool present = false;
    for (const auto& m : monads) present = present || m == t;
    if (!present) monads.push_back(t);
  }
  const QuantaloidModel base(Q);
  const LinearMonQModel lifted(Q, monads);
  const auto base_laws = linear_quantaloid_laws<QuantaloidModel>(true);
  const auto lifted_laws = linear_quantaloid_laws<LinearMonQModel>(true);
  return run_biconditional<QuantaloidModel, LinearMonQModel>(
      "LinearMonQ", base, base_laws, cfg.sampler, lifted, lifted_laws, cfg.sampler,
      [&](std::size_t a) { return trivial_linear_monad(Q, a); },
      [&](const Arrow& f) { return trivial_linear_bimodule(Q, f); });
}

/// Whether some B: Y→X (or, on the left, some A: Y→X) completes `r` to a
/// linear adjunction, searching all partners on finite carriers.
bool has_adjoints(const QRelation& r, const QRelation& dual) {
  const bool right = check_linear_adjoint(r, dual);
  const bool left = check_linear_adjoint(dual, r);
  if (right && left) return true;
  const Quantale& q = r.quantale();
  if (!q.is_finite()) return false;
  const bool right_found = right || !find_linear_adjoints(r).empty();
  bool left_found = left;
  if (!left_found) {
    for (const auto& a : enumerate_relations(q, r.target(), r.source())) {
      if (check_linear_adjoint(a, r)) {
        left_found = true;
        break;
      }
    }
  }
  return right_found && left_found;
}

LawReport closed_qrel(const Quantale& q, const TheoremConfig& cfg) {
  require_par(q);
  const Element d = theorem_dualizer(q, cfg);
  const QuantaleModel base(q, q.domain(cfg.sampler.window));
  const auto base_laws = girard_quantale_laws(d);
  // Over a dualizing d the lift carries the derived par; otherwise the
  // stored one.
  const bool dualizing = is_cyclic_dualizing(q, d, q.domain(cfg.sampler.window));
  const Quantale lin = dualizing ? girard_to_ld(make_girard(q, d)) : q;
  const auto side = qrel_side(cfg);
  const QRelModel lifted(lin, side.sets, cfg.sampler.window);
  using O = std::span<const FiniteSet>;
  using C = std::span<const QRelation>;
  const std::vector<Law<QRelModel>> lifted_laws{
      {"linadj.unit", 2, {{0, 1, "r"}},
       [d](const QRelModel& m, O o, C c) {
         const QRelation dual = rel_dual(c[0], d);
         return rel_leq(id_top(m.quantale(), o[0]), compose_par(c[0], dual));
       }},
      {"linadj.counit", 2, {{0, 1, "r"}},
       [d](const QRelModel& m, O o, C c) {
         const QRelation dual = rel_dual(c[0], d);
         return rel_leq(compose_tensor(dual, c[0]), id_bot(m.quantale(), o[1]));
       }},
      {"closed.adjoint_exists", 2, {{0, 1, "r"}},
       [d](const QRelModel&, O, C c) { return has_adjoints(c[0], rel_dual(c[0], d)); }},
  };
  return run_implication<QuantaleModel, QRelModel>("ClosedQRel", base, base_laws, cfg.sampler,
                                                   lifted, lifted_laws, cfg.sampler);
}

LawReport closed_qmod(const Quantale& q, const TheoremConfig& cfg) {
  const FiniteQuantaloid Q = one_object(q);
  const Family d{index(theorem_dualizer(q, cfg))};
  const FiniteQuantaloid G = with_girard_par(Q, d);
  const bool dualizing = check_girard_family(Q, d).passed();
  const auto categories = sample_categories(G, false, cfg.extra_categories, cfg.sampler.seed);
  // Linearized categories, keyed by the plain ones.
  auto linear = std::make_shared<std::map<const QCategory*, CategoryRef>>();
  if (dualizing) {
    for (const auto& c : categories) {
      (*linear)[c.get()] = std::make_shared<QCategory>(girard_linear_category(G, *c, d));
    }
  }
  // The constructed adjoint Θ^⊥ of the linearized Θ, or nullopt when d is
  // not dualizing and nothing is constructed.
  auto adjoint_check = [&G, d, linear](const QBimodule& theta) -> std::optional<LawReport> {
    if (linear->empty()) return std::nullopt;
    const QBimodule a = girard_linear_bimodule(G, theta, linear->at(theta.source.get()),
                                               linear->at(theta.target.get()), d);
    return check_qmod_linear_adjoint(G, a, qmod_linear_adjoint(G, a, d));
  };
  using O = std::span<const CategoryRef>;
  using C = std::span<const QBimodule>;
  auto law = [adjoint_check](const char* id) {
    return [adjoint_check, id](const QModModel&, O, C c) {
      const auto r = adjoint_check(c[0]);
      return r && (std::string_view(id) == "closed.adjoint_exists" ? r->passed()
                                                                    : r->find(id)->passed);
    };
  };
  const std::vector<Law<QModModel>> lifted_laws{
      {"linadj.unit", 2, {{0, 1, "theta"}}, law("linadj.unit")},
      {"linadj.counit", 2, {{0, 1, "theta"}}, law("linadj.counit")},
      {"closed.adjoint_exists", 2, {{0, 1, "theta"}}, law("closed.adjoint_exists")},
  };
  const QuantaloidModel base(Q);
  const QModModel lifted(G, categories);
  const auto base_laws = girard_family_laws(d);
  return run_implication<QuantaloidModel, QModModel>("ClosedQMod", base, base_laws, cfg.sampler,
                                                     lifted, lifted_laws,
                                                     qmod_side(cfg.sampler));
}

}  // namespace

std::span<const std::string_view> theorem_names() { return kTheorems; }

Element theorem_dualizer(const Quantale& q, const TheoremConfig& cfg) {
  if (cfg.dualizer) {
    q.require(*cfg.dualizer);
    return *cfg.dualizer;
  }
  if (auto d = q.dualizer()) return *d;
  return q.has_par() ? q.par_unit() : q.bottom();
}

LawReport run_theorem(std::string_view id, const Quantale& q, const TheoremConfig& cfg) {
  if (id == "LDQ") return ldq(q, cfg);
  if (id == "GirardQRel") return girard_qrel(q, cfg);
  if (id == "GirardQMod") return girard_qmod(q, cfg);
  if (id == "GirardMonQ") return girard_monq(q, cfg);
  if (id == "LinearQMod") return linear_qmod(q, cfg);
  if (id == "LinearMonQ") return linear_monq(q, cfg);
  if (id == "ClosedQRel") return closed_qrel(q, cfg);
  if (id == "ClosedQMod") return closed_qmod(q, cfg);
  throw Error(ErrorKind::kUnknownTheorem, std::string(id));
}

LawReport run_theorem(std::string_view id, std::string_view catalog_name,
                      const TheoremConfig& cfg) {
  bool known = false;
  for (auto name : kTheorems) known = known || name == id;
  if (!known) throw Error(ErrorKind::kUnknownTheorem, std::string(id));
  const CatalogEntry& entry = catalog_entry(catalog_name);
  return run_theorem(id, entry.quantale, cfg);
}

}  // namespace linbicat
