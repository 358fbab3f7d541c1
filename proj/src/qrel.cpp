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

#include "linbicat/qrel.hpp"

#include <algorithm>
#include <unordered_set>

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

void require_composable(const QRelation& f, const QRelation& g) {
  require_same_quantale(f, g);
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::kSetMismatch,
                "target " + f.target().name + " does not match source " + g.source().name);
  }
}

void require_parallel(const QRelation& f, const QRelation& g) {
  require_same_quantale(f, g);
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::kSetMismatch, "relations have different boundaries");
  }
}

Json set_json(const FiniteSet& s) { return Json{{"name", s.name}, {"members", s.members}}; }

}  // namespace

std::size_t FiniteSet::index_of(std::string_view member) const {
  const auto it = std::find(members.begin(), members.end(), member);
  if (it == members.end()) {
    throw Error(ErrorKind::kUnknownElement, "'" + std::string(member) + "' is not in " + name);
  }
  return static_cast<std::size_t>(it - members.begin());
}

FiniteSet make_set(std::string name, std::vector<std::string> members) {
  std::unordered_set<std::string> seen;
  for (const auto& m : members) {
    if (!seen.insert(m).second) {
      throw Error(ErrorKind::kDuplicateName, "member '" + m + "' repeated in " + name);
    }
  }
  return FiniteSet{std::move(name), std::move(members)};
}

FiniteSet numbered_set(std::string name, std::size_t k, std::string_view prefix) {
  std::vector<std::string> members;
  for (std::size_t i = 1; i <= k; ++i) members.push_back(std::string(prefix) + std::to_string(i));
  return FiniteSet{std::move(name), std::move(members)};
}

QRelation::QRelation(const Quantale& q, FiniteSet source, FiniteSet target,
                     std::vector<Element> values)
    : q_(&q), source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != rows() * cols()) {
    throw Error(ErrorKind::kShapeMismatch,
                "relation " + source_.name + " -> " + target_.name + " needs " +
                    std::to_string(rows()) + "x" + std::to_string(cols()) + " entries");
  }
  for (Element v : values_) q.require(v);
}

QRelation QRelation::constant(const Quantale& q, const FiniteSet& source, const FiniteSet& target,
                              Element value) {
  return QRelation(q, source, target, std::vector<Element>(source.size() * target.size(), value));
}

bool operator==(const QRelation& a, const QRelation& b) {
  return (a.q_ == b.q_ || *a.q_ == *b.q_) && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.values_ == b.values_;
}

void require_same_quantale(const QRelation& f, const QRelation& g) {
  if (&f.quantale() != &g.quantale() && !(f.quantale() == g.quantale())) {
    throw Error(ErrorKind::kQuantaleMismatch, "relations live over different quantales");
  }
}

QRelation compose_tensor(const QRelation& f, const QRelation& g) {
  require_composable(f, g);
  const Quantale& q = f.quantale();
  std::vector<Element> out(f.rows() * g.cols(), q.bottom());
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t z = 0; z < g.cols(); ++z) {
      Element acc = q.bottom();
      for (std::size_t y = 0; y < f.cols(); ++y) acc = q.join(acc, q.tensor(f(x, y), g(y, z)));
      out[x * g.cols() + z] = acc;
    }
  return QRelation(q, f.source(), g.target(), std::move(out));
}

QRelation compose_par(const QRelation& f, const QRelation& g) {
  require_composable(f, g);
  const Quantale& q = f.quantale();
  if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "par composition needs a par");
  std::vector<Element> out(f.rows() * g.cols(), q.top());
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t z = 0; z < g.cols(); ++z) {
      Element acc = q.top();
      for (std::size_t y = 0; y < f.cols(); ++y) acc = q.meet(acc, q.par(f(x, y), g(y, z)));
      out[x * g.cols() + z] = acc;
    }
  return QRelation(q, f.source(), g.target(), std::move(out));
}

QRelation id_top(const Quantale& q, const FiniteSet& x) {
  std::vector<Element> v(x.size() * x.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) v[i * x.size() + i] = q.unit();
  return QRelation(q, x, x, std::move(v));
}

QRelation id_bot(const Quantale& q, const FiniteSet& x) {
  return dual_family(q, x, q.par_unit());
}

QRelation rel_join(const QRelation& f, const QRelation& g) {
  require_parallel(f, g);
  std::vector<Element> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.quantale().join(f.values()[i], g.values()[i]);
  return QRelation(f.quantale(), f.source(), f.target(), std::move(v));
}

QRelation rel_meet(const QRelation& f, const QRelation& g) {
  require_parallel(f, g);
  std::vector<Element> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.quantale().meet(f.values()[i], g.values()[i]);
  return QRelation(f.quantale(), f.source(), f.target(), std::move(v));
}

bool rel_leq(const QRelation& f, const QRelation& g) {
  require_parallel(f, g);
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (!f.quantale().leq(f.values()[i], g.values()[i])) return false;
  return true;
}

QRelation right_extension(const QRelation& f, const QRelation& h) {
  require_same_quantale(f, h);
  if (!(f.source() == h.source())) {
    throw Error(ErrorKind::kSetMismatch, "extension needs a common source");
  }
  const Quantale& q = f.quantale();
  std::vector<Element> v(f.cols() * h.cols());
  for (std::size_t y = 0; y < f.cols(); ++y)
    for (std::size_t z = 0; z < h.cols(); ++z) {
      Element acc = q.top();
      for (std::size_t x = 0; x < f.rows(); ++x) acc = q.meet(acc, q.residual_right(f(x, y), h(x, z)));
      v[y * h.cols() + z] = acc;
    }
  return QRelation(q, f.target(), h.target(), std::move(v));
}

QRelation right_lifting(const QRelation& h, const QRelation& f) {
  require_same_quantale(f, h);
  if (!(f.target() == h.target())) {
    throw Error(ErrorKind::kSetMismatch, "lifting needs a common target");
  }
  const Quantale& q = f.quantale();
  std::vector<Element> v(h.rows() * f.rows());
  for (std::size_t z = 0; z < h.rows(); ++z)
    for (std::size_t x = 0; x < f.rows(); ++x) {
      Element acc = q.top();
      for (std::size_t y = 0; y < f.cols(); ++y) acc = q.meet(acc, q.residual_left(h(z, y), f(x, y)));
      v[z * f.rows() + x] = acc;
    }
  return QRelation(q, h.source(), f.source(), std::move(v));
}

QRelation dual_family(const Quantale& q, const FiniteSet& x, Element d) {
  q.require(d);
  std::vector<Element> v(x.size() * x.size(), q.top());
  for (std::size_t i = 0; i < x.size(); ++i) v[i * x.size() + i] = d;
  return QRelation(q, x, x, std::move(v));
}

QRelation rel_dual(const QRelation& r, Element d) {
  const Quantale& q = r.quantale();
  q.require(d);
  std::vector<Element> v(r.rows() * r.cols());
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t y = 0; y < r.cols(); ++y) v[y * r.rows() + x] = q.residual_right(r(x, y), d);
  return QRelation(q, r.target(), r.source(), std::move(v));
}

QRelation rel_dual(const QRelation& r) {
  const auto d = r.quantale().dualizer();
  if (!d) throw Error(ErrorKind::kNotGirard, "quantale has no dualizer");
  return rel_dual(r, *d);
}

bool check_linear_adjoint(const QRelation& a, const QRelation& b) {
  const Quantale& q = a.quantale();
  return rel_leq(id_top(q, a.source()), compose_par(a, b)) &&
         rel_leq(compose_tensor(b, a), id_bot(q, a.target()));
}

std::vector<QRelation> enumerate_relations(const Quantale& q, const FiniteSet& x,
                                           const FiniteSet& y, std::size_t cap) {
  if (!q.is_finite()) {
    throw Error(ErrorKind::kSearchSpaceTooLarge, "extended-integer relations are not enumerable");
  }
  const std::size_t n = q.size();
  const std::size_t k = x.size() * y.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > cap / n) {
      throw Error(ErrorKind::kSearchSpaceTooLarge,
                  "more than " + std::to_string(cap) + " relations " + x.name + " -> " + y.name);
    }
    count *= n;
  }
  std::vector<QRelation> out;
  out.reserve(count);
  std::vector<Element> v(k);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t rest = code;
    for (std::size_t i = k; i-- > 0;) {
      v[i] = at(rest % n);
      rest /= n;
    }
    out.emplace_back(q, x, y, v);
  }
  return out;
}

QRelation sample_relation(const Quantale& q, const FiniteSet& x, const FiniteSet& y, Rng& rng,
                          int window) {
  std::vector<Element> v(x.size() * y.size());
  for (Element& e : v) e = q.sample(rng, window);
  return QRelation(q, x, y, std::move(v));
}

std::vector<QRelation> find_linear_adjoints(const QRelation& a, std::size_t cap) {
  std::vector<QRelation> out;
  for (auto& b : enumerate_relations(a.quantale(), a.target(), a.source(), cap)) {
    if (check_linear_adjoint(a, b)) out.push_back(std::move(b));
  }
  return out;
}

std::optional<std::vector<QRelation>> QRelModel::enumerate(const Object& x, const Object& y,
                                                           std::size_t cap) const {
  if (!q_->is_finite()) return std::nullopt;
  try {
    return enumerate_relations(*q_, x, y, cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSearchSpaceTooLarge) return std::nullopt;
    throw;
  }
}

Json QRelModel::describe(const Cell& c) const {
  Json rows = Json::array();
  for (std::size_t x = 0; x < c.rows(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < c.cols(); ++y) row.push_back(q_->to_json(c(x, y)));
    rows.push_back(std::move(row));
  }
  return Json{{"source", set_json(c.source())}, {"target", set_json(c.target())}, {"values", rows}};
}

Json QRelModel::describe_object(const Object& o) const { return set_json(o); }

std::vector<Counterexample<QRelModel>> QRelModel::shrink(std::span<const Slot> slots,
                                                         const std::vector<Object>& objects,
                                                         const std::vector<Cell>& cells) const {
  std::vector<Counterexample<QRelModel>> out;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t k = 0; k < objects[i].size(); ++k) {
      std::vector<Object> objs = objects;
      objs[i].members.erase(objs[i].members.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<Cell> next;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const Cell& c = cells[s];
        const auto& src = objs[slots[s].from];
        const auto& dst = objs[slots[s].to];
        std::vector<Element> v;
        for (std::size_t x = 0; x < c.rows(); ++x) {
          if (slots[s].from == i && x == k) continue;
          for (std::size_t y = 0; y < c.cols(); ++y) {
            if (slots[s].to == i && y == k) continue;
            v.push_back(c(x, y));
          }
        }
        next.emplace_back(*q_, src, dst, std::move(v));
      }
      out.push_back({std::move(objs), std::move(next)});
    }
  }
  for (std::size_t s = 0; s < cells.size(); ++s) {
    for (std::size_t e = 0; e < cells[s].values().size(); ++e) {
      for (Element lower : q_->shrink_candidates(cells[s].values()[e])) {
        std::vector<Cell> next = cells;
        std::vector<Element> v = cells[s].values();
        v[e] = lower;
        next[s] = QRelation(*q_, cells[s].source(), cells[s].target(), std::move(v));
        out.push_back({objects, std::move(next)});
      }
    }
  }
  return out;
}

std::vector<FiniteSet> standard_sets(std::size_t max_size, std::size_t min_size) {
  std::vector<FiniteSet> out;
  for (std::size_t k = min_size; k <= max_size; ++k) {
    out.push_back(numbered_set("X" + std::to_string(k), k));
  }
  return out;
}

LawReport verify_qrel_laws(const Quantale& q, const std::vector<FiniteSet>& sets,
                           const Sampler& sampler) {
  const QRelModel model(q, sets, sampler.window);
  const auto laws = linear_quantaloid_laws<QRelModel>(q.has_par());
  return run_suite<QRelModel>("qrel", model, laws, sampler);
}

std::vector<Law<QRelModel>> girard_qrel_laws(Element dual) {
  using O = std::span<const FiniteSet>;
  using C = std::span<const QRelation>;
  return {
      {"girard.cyclic", 2, {{0, 1, "r"}},
       [dual](const QRelModel& m, O o, C c) {
         const Quantale& q = m.quantale();
         return right_extension(c[0], dual_family(q, o[0], dual)) ==
                right_lifting(dual_family(q, o[1], dual), c[0]);
       }},
      {"girard.dualizing", 2, {{0, 1, "r"}},
       [dual](const QRelModel& m, O o, C c) {
         const Quantale& q = m.quantale();
         const QRelation perp = right_extension(c[0], dual_family(q, o[0], dual));
         return right_extension(perp, dual_family(q, o[1], dual)) == c[0];
       }},
  };
}

LawReport check_girard_qrel(const Quantale& g, const std::vector<FiniteSet>& sets,
                            const Sampler& sampler) {
  const auto d = g.dualizer();
  if (!d) throw Error(ErrorKind::kNotGirard, "quantale has no dualizer");
  const QRelModel model(g, sets, sampler.window);
  const auto laws = girard_qrel_laws(*d);
  return run_suite<QRelModel>("girard-qrel", model, laws, sampler);
}

}  // namespace linbicat
