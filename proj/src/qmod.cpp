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

#include "linbicat/qmod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "linbicat/error.hpp"
#include "linbicat/theorem.hpp"

namespace linbicat {

namespace {

// Collects the first failure of each law in declaration order; in fast
// mode it stops at the first failure of any law.
class Tally {
 public:
  explicit Tally(bool fast = false) : fast_(fast) {}

  void declare(const char* id) { laws_.push_back({id, std::nullopt}); }
  bool stopped() const { return stopped_; }

  void check(const char* id, bool ok, const std::function<Json()>& witness) {
    if (ok) return;
    if (fast_) {
      stopped_ = true;
      return;
    }
    for (auto& [law, w] : laws_) {
      if (law == id && !w) w = witness();
    }
  }

  LawReport finish(std::string suite) const {
    LawReport report(std::move(suite));
    for (const auto& [law, w] : laws_) {
      if (w) {
        report.fail(law, *w, "exhaustive");
      } else {
        report.pass(law, "exhaustive");
      }
    }
    return report;
  }

 private:
  bool fast_;
  bool stopped_ = false;
  std::vector<std::pair<std::string, std::optional<Json>>> laws_;
};

Arrow join_all(const FiniteQuantaloid& q, std::size_t a, std::size_t b,
               const std::vector<Arrow>& xs) {
  Arrow acc = q.bottom(a, b);
  for (const Arrow& x : xs) acc = q.join(acc, x);
  return acc;
}

Arrow meet_all(const FiniteQuantaloid& q, std::size_t a, std::size_t b,
               const std::vector<Arrow>& xs) {
  Arrow acc = q.top(a, b);
  for (const Arrow& x : xs) acc = q.meet(acc, x);
  return acc;
}

bool same(const CategoryRef& a, const CategoryRef& b) { return a == b || *a == *b; }

const std::string& member(const QCategory& m, std::size_t x) { return m.carrier.members[x]; }

// f^⊥ = f ⊸ d_a for f: a→b.
Arrow perp(const FiniteQuantaloid& q, const Family& d, const Arrow& f) {
  return q.residual_right(f, {f.from, f.from, d[f.from]});
}

// (g^⊥ ⊗ f^⊥)^⊥ for f: a→b, g: b→c.
Arrow girard_par(const FiniteQuantaloid& q, const Family& d, const Arrow& f, const Arrow& g) {
  return perp(q, d, q.tensor(perp(q, d, g), perp(q, d, f)));
}

void require_girard(const FiniteQuantaloid& q, const Family& d) {
  if (!check_girard_family(q, d).passed()) {
    throw Error(ErrorKind::kNotGirard, "family is not cyclic and dualizing");
  }
}

void qcat_conditions(const FiniteQuantaloid& q, const QCategory& m, Tally& t) {
  const std::size_t n = m.size();
  const bool lin = m.linear();
  const char* unit = lin ? "lqcat.tensor.unit" : "qcat.unit";
  const char* comp = lin ? "lqcat.tensor.composition" : "qcat.composition";
  t.declare(unit);
  t.declare(comp);
  if (lin) {
    for (const char* id : {"lqcat.par.counit", "lqcat.par.cocomposition", "lqcat.mixed.par_tensor",
                           "lqcat.mixed.tensor_par", "lqcat.mixed.act_right",
                           "lqcat.mixed.act_left"}) {
      t.declare(id);
    }
  }
  for (std::size_t x = 0; x < n && !t.stopped(); ++x) {
    auto w = [&] { return Json{{"category", m.name}, {"x", member(m, x)}}; };
    t.check(unit, q.leq(q.top_id(m.rho[x]), m.tensor_at(x, x)), w);
    if (lin) t.check("lqcat.par.counit", q.leq(m.par_at(x, x), q.bot_id(m.rho[x])), w);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n && !t.stopped(); ++z) {
        auto w = [&] {
          return Json{{"category", m.name},
                      {"x", member(m, x)},
                      {"x'", member(m, y)},
                      {"x''", member(m, z)}};
        };
        t.check(comp, q.leq(q.tensor(m.tensor_at(x, y), m.tensor_at(y, z)), m.tensor_at(x, z)),
                w);
        if (!lin) continue;
        t.check("lqcat.par.cocomposition",
                q.leq(m.par_at(x, z), q.par(m.par_at(x, y), m.par_at(y, z))), w);
        t.check("lqcat.mixed.par_tensor",
                q.leq(m.tensor_at(x, z), q.par(m.par_at(x, y), m.tensor_at(y, z))), w);
        t.check("lqcat.mixed.tensor_par",
                q.leq(m.tensor_at(x, z), q.par(m.tensor_at(x, y), m.par_at(y, z))), w);
        t.check("lqcat.mixed.act_right",
                q.leq(q.tensor(m.tensor_at(x, y), m.par_at(y, z)), m.par_at(x, z)), w);
        t.check("lqcat.mixed.act_left",
                q.leq(q.tensor(m.par_at(x, y), m.tensor_at(y, z)), m.par_at(x, z)), w);
      }
    }
  }
}

// Conditions on the ⊗-part alone.
void qbim_tensor_conditions(const FiniteQuantaloid& q, const QBimodule& b, bool lin, Tally& t) {
  const QCategory& m = *b.source;
  const QCategory& n = *b.target;
  const char* target_action = lin ? "lqbim.tensor.target_action" : "qbim.target_action";
  const char* source_action = lin ? "lqbim.tensor.source_action" : "qbim.source_action";
  t.declare(target_action);
  t.declare(source_action);
  if (lin) {
    t.declare("lqbim.tensor.source_coaction");
    t.declare("lqbim.tensor.target_coaction");
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < n.size(); ++y) {
      for (std::size_t y2 = 0; y2 < n.size() && !t.stopped(); ++y2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"y", member(n, y)}, {"y'", member(n, y2)}}; };
        t.check(target_action,
                q.leq(q.tensor(b.tensor_at(x, y), n.tensor_at(y, y2)), b.tensor_at(x, y2)), w);
        if (lin) {
          t.check("lqbim.tensor.target_coaction",
                  q.leq(b.tensor_at(x, y), q.par(b.tensor_at(x, y2), n.par_at(y2, y))), w);
        }
      }
      for (std::size_t x2 = 0; x2 < m.size() && !t.stopped(); ++x2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"x'", member(m, x2)}, {"y", member(n, y)}}; };
        t.check(source_action,
                q.leq(q.tensor(m.tensor_at(x, x2), b.tensor_at(x2, y)), b.tensor_at(x, y)), w);
        if (lin) {
          t.check("lqbim.tensor.source_coaction",
                  q.leq(b.tensor_at(x, y), q.par(m.par_at(x, x2), b.tensor_at(x2, y))), w);
        }
      }
    }
  }
}

// Conditions on the ⊕-part alone.
void qbim_par_conditions(const FiniteQuantaloid& q, const QBimodule& b, Tally& t) {
  const QCategory& m = *b.source;
  const QCategory& n = *b.target;
  for (const char* id : {"lqbim.par.target_coaction", "lqbim.par.source_coaction",
                         "lqbim.par.target_action", "lqbim.par.source_action"}) {
    t.declare(id);
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < n.size(); ++y) {
      for (std::size_t y2 = 0; y2 < n.size() && !t.stopped(); ++y2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"y", member(n, y)}, {"y'", member(n, y2)}}; };
        t.check("lqbim.par.target_coaction",
                q.leq(b.par_at(y, x), q.par(n.par_at(y, y2), b.par_at(y2, x))), w);
        t.check("lqbim.par.target_action",
                q.leq(q.tensor(n.tensor_at(y, y2), b.par_at(y2, x)), b.par_at(y, x)), w);
      }
      for (std::size_t x2 = 0; x2 < m.size() && !t.stopped(); ++x2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"x'", member(m, x2)}, {"y", member(n, y)}}; };
        t.check("lqbim.par.source_coaction",
                q.leq(b.par_at(y, x), q.par(b.par_at(y, x2), m.par_at(x2, x))), w);
        t.check("lqbim.par.source_action",
                q.leq(q.tensor(b.par_at(y, x2), m.tensor_at(x2, x)), b.par_at(y, x)), w);
      }
    }
  }
}

bool valid_qcategory(const FiniteQuantaloid& q, const QCategory& m) {
  Tally t(true);
  qcat_conditions(q, m, t);
  return !t.stopped();
}

// Odometer over per-entry ranges; calls visit(digits) for each tuple.
void odometer(const std::vector<std::size_t>& ranges,
              const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for (std::size_t r : ranges) {
    if (r == 0) return;
  }
  std::vector<std::size_t> digits(ranges.size(), 0);
  while (true) {
    visit(digits);
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < ranges[i]) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (digits.empty()) return;
  }
}

std::size_t product(const std::vector<std::size_t>& ranges, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t r : ranges) {
    if (r != 0 && total > cap / r) return cap + 1;
    total *= r;
  }
  return total;
}

Json matrix_json(const FiniteQuantaloid& q, std::size_t rows, std::size_t cols,
                 const std::function<Arrow(std::size_t, std::size_t)>& entry) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cols; ++j) {
      const Arrow a = entry(i, j);
      row.push_back(q.hom(a.from, a.to).name(a.elem));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

void require_shape(const FiniteQuantaloid& q, const QCategory& m) {
  const std::size_t n = m.size();
  if (m.rho.size() != n) throw Error(ErrorKind::kShapeMismatch, m.name + ": rho size");
  for (std::size_t o : m.rho) {
    if (o >= q.size()) throw Error(ErrorKind::kShapeMismatch, m.name + ": unknown object");
  }
  auto check = [&](const std::vector<std::size_t>& v, const char* what) {
    if (v.size() != n * n) throw Error(ErrorKind::kShapeMismatch, m.name + ": " + what + " size");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (v[x * n + y] >= q.hom(m.rho[x], m.rho[y]).size()) {
          throw Error(ErrorKind::kUnknownElement, m.name + ": " + what + " entry out of range");
        }
      }
    }
  };
  check(m.enrich_tensor, "tensor enrichment");
  if (m.enrich_par) {
    if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "base has no par");
    check(*m.enrich_par, "par enrichment");
  }
}

void require_shape(const FiniteQuantaloid& q, const QBimodule& b) {
  if (!b.source || !b.target) throw Error(ErrorKind::kShapeMismatch, "bimodule without boundary");
  require_shape(q, *b.source);
  require_shape(q, *b.target);
  const std::size_t nx = b.source->size();
  const std::size_t ny = b.target->size();
  if (b.theta_tensor.size() != nx * ny) throw Error(ErrorKind::kShapeMismatch, "tensor part size");
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const Arrow a = b.tensor_at(x, y);
      if (a.elem >= q.hom(a.from, a.to).size()) {
        throw Error(ErrorKind::kUnknownElement, "tensor part entry out of range");
      }
    }
  }
  if (b.theta_par) {
    if (!b.source->linear() || !b.target->linear()) {
      throw Error(ErrorKind::kShapeMismatch, "par part between plain categories");
    }
    if (b.theta_par->size() != nx * ny) throw Error(ErrorKind::kShapeMismatch, "par part size");
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t x = 0; x < nx; ++x) {
        const Arrow a = b.par_at(y, x);
        if (a.elem >= q.hom(a.from, a.to).size()) {
          throw Error(ErrorKind::kUnknownElement, "par part entry out of range");
        }
      }
    }
  }
}

LawReport validate_qcategory(const FiniteQuantaloid& q, const QCategory& m) {
  require_shape(q, m);
  Tally t;
  qcat_conditions(q, m, t);
  return t.finish("qcategory");
}

LawReport validate_qbimodule(const FiniteQuantaloid& q, const QBimodule& b) {
  require_shape(q, b);
  Tally t;
  qbim_tensor_conditions(q, b, b.linear(), t);
  if (b.linear()) qbim_par_conditions(q, b, t);
  return t.finish("qbimodule");
}

QCategory discrete_category(const FiniteQuantaloid& q, std::string name, FiniteSet carrier,
                            std::vector<std::size_t> rho, bool linear) {
  const std::size_t n = carrier.size();
  if (rho.size() != n) throw Error(ErrorKind::kShapeMismatch, name + ": rho size");
  QCategory m{std::move(name), std::move(carrier), std::move(rho), {}, std::nullopt};
  std::vector<std::size_t> par;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const FiniteLattice& h = q.hom(m.rho[x], m.rho[y]);
      m.enrich_tensor.push_back(x == y ? q.top_id(m.rho[x]).elem : h.bottom());
      if (linear) par.push_back(x == y ? q.bot_id(m.rho[x]).elem : h.top());
    }
  }
  if (linear) m.enrich_par = std::move(par);
  return m;
}

QCategory singleton_category(const FiniteQuantaloid& q, std::size_t a, bool linear) {
  return discrete_category(q, "M_" + q.objects()[a], make_set("{x_" + q.objects()[a] + "}", {"x"}),
                           {a}, linear);
}

QBimodule singleton_bimodule(const FiniteQuantaloid& q, const Arrow& f, CategoryRef source,
                             CategoryRef target) {
  QBimodule b{std::move(source), std::move(target), {f.elem}, std::nullopt};
  if (b.source->linear() && b.target->linear()) {
    b.theta_par = std::vector<std::size_t>{q.residual_right(f, q.top_id(f.from)).elem};
  }
  return b;
}

QBimodule qmod_compose_tensor(const FiniteQuantaloid& q, const QBimodule& theta,
                              const QBimodule& pi) {
  if (!same(theta.target, pi.source)) throw Error(ErrorKind::kHomMismatch, "bimodules do not meet");
  const QCategory& m = *theta.source;
  const QCategory& n = *theta.target;
  const QCategory& p = *pi.target;
  const bool lin = theta.linear() && pi.linear();
  QBimodule out{theta.source, pi.target, {}, std::nullopt};
  std::vector<Arrow> terms;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t z = 0; z < p.size(); ++z) {
      terms.clear();
      for (std::size_t y = 0; y < n.size(); ++y) {
        terms.push_back(q.tensor(theta.tensor_at(x, y), pi.tensor_at(y, z)));
      }
      out.theta_tensor.push_back(join_all(q, m.rho[x], p.rho[z], terms).elem);
    }
  }
  if (lin) {
    std::vector<std::size_t> par;
    for (std::size_t z = 0; z < p.size(); ++z) {
      for (std::size_t x = 0; x < m.size(); ++x) {
        terms.clear();
        for (std::size_t y = 0; y < n.size(); ++y) {
          terms.push_back(q.par(pi.par_at(z, y), theta.par_at(y, x)));
        }
        par.push_back(meet_all(q, p.rho[z], m.rho[x], terms).elem);
      }
    }
    out.theta_par = std::move(par);
  }
  return out;
}

QBimodule qmod_compose_par(const FiniteQuantaloid& q, const QBimodule& theta, const QBimodule& pi) {
  if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "base has no par");
  if (!same(theta.target, pi.source)) throw Error(ErrorKind::kHomMismatch, "bimodules do not meet");
  const QCategory& m = *theta.source;
  const QCategory& n = *theta.target;
  const QCategory& p = *pi.target;
  const bool lin = theta.linear() && pi.linear();
  QBimodule out{theta.source, pi.target, {}, std::nullopt};
  std::vector<Arrow> terms;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t z = 0; z < p.size(); ++z) {
      terms.clear();
      for (std::size_t y = 0; y < n.size(); ++y) {
        terms.push_back(q.par(theta.tensor_at(x, y), pi.tensor_at(y, z)));
      }
      out.theta_tensor.push_back(meet_all(q, m.rho[x], p.rho[z], terms).elem);
    }
  }
  if (lin) {
    std::vector<std::size_t> par;
    for (std::size_t z = 0; z < p.size(); ++z) {
      for (std::size_t x = 0; x < m.size(); ++x) {
        terms.clear();
        for (std::size_t y = 0; y < n.size(); ++y) {
          terms.push_back(q.tensor(pi.par_at(z, y), theta.par_at(y, x)));
        }
        par.push_back(join_all(q, p.rho[z], m.rho[x], terms).elem);
      }
    }
    out.theta_par = std::move(par);
  }
  return out;
}

QBimodule qmod_iota(const CategoryRef& m) {
  return {m, m, m->enrich_tensor, m->enrich_par};
}

QBimodule qmod_linear_delta(const CategoryRef& m) {
  if (!m->linear()) throw Error(ErrorKind::kNoParStructure, m->name + " has no par enrichment");
  return {m, m, *m->enrich_par, m->enrich_tensor};
}

QBimodule qmod_join(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b) {
  QBimodule out = a;
  for (std::size_t x = 0; x < a.source->size(); ++x) {
    for (std::size_t y = 0; y < a.target->size(); ++y) {
      out.theta_tensor[x * a.target->size() + y] = q.join(a.tensor_at(x, y), b.tensor_at(x, y)).elem;
      if (out.theta_par) {
        (*out.theta_par)[y * a.source->size() + x] = q.meet(a.par_at(y, x), b.par_at(y, x)).elem;
      }
    }
  }
  return out;
}

QBimodule qmod_meet(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b) {
  QBimodule out = a;
  for (std::size_t x = 0; x < a.source->size(); ++x) {
    for (std::size_t y = 0; y < a.target->size(); ++y) {
      out.theta_tensor[x * a.target->size() + y] = q.meet(a.tensor_at(x, y), b.tensor_at(x, y)).elem;
      if (out.theta_par) {
        (*out.theta_par)[y * a.source->size() + x] = q.join(a.par_at(y, x), b.par_at(y, x)).elem;
      }
    }
  }
  return out;
}

bool qmod_leq(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b) {
  for (std::size_t x = 0; x < a.source->size(); ++x) {
    for (std::size_t y = 0; y < a.target->size(); ++y) {
      if (!q.leq(a.tensor_at(x, y), b.tensor_at(x, y))) return false;
      if (a.theta_par && b.theta_par && !q.leq(b.par_at(y, x), a.par_at(y, x))) return false;
    }
  }
  return true;
}

QBimodule qmod_bottom(const FiniteQuantaloid& q, const CategoryRef& m, const CategoryRef& n,
                      bool linear) {
  QBimodule out{m, n, {}, std::nullopt};
  for (std::size_t x = 0; x < m->size(); ++x) {
    for (std::size_t y = 0; y < n->size(); ++y) {
      out.theta_tensor.push_back(q.hom(m->rho[x], n->rho[y]).bottom());
    }
  }
  if (linear) {
    std::vector<std::size_t> par;
    for (std::size_t y = 0; y < n->size(); ++y) {
      for (std::size_t x = 0; x < m->size(); ++x) par.push_back(q.hom(n->rho[y], m->rho[x]).top());
    }
    out.theta_par = std::move(par);
  }
  return out;
}

QBimodule qmod_top(const FiniteQuantaloid& q, const CategoryRef& m, const CategoryRef& n,
                   bool linear) {
  QBimodule out{m, n, {}, std::nullopt};
  for (std::size_t x = 0; x < m->size(); ++x) {
    for (std::size_t y = 0; y < n->size(); ++y) {
      out.theta_tensor.push_back(q.hom(m->rho[x], n->rho[y]).top());
    }
  }
  if (linear) {
    std::vector<std::size_t> par;
    for (std::size_t y = 0; y < n->size(); ++y) {
      for (std::size_t x = 0; x < m->size(); ++x) {
        par.push_back(q.hom(n->rho[y], m->rho[x]).bottom());
      }
    }
    out.theta_par = std::move(par);
  }
  return out;
}

QBimodule qmod_right_extension(const FiniteQuantaloid& q, const QBimodule& theta,
                               const QBimodule& psi) {
  if (!same(theta.source, psi.source)) throw Error(ErrorKind::kHomMismatch, "sources differ");
  const QCategory& m = *theta.source;
  const QCategory& n = *theta.target;
  const QCategory& p = *psi.target;
  QBimodule out{theta.target, psi.target, {}, std::nullopt};
  std::vector<Arrow> terms;
  for (std::size_t y = 0; y < n.size(); ++y) {
    for (std::size_t z = 0; z < p.size(); ++z) {
      terms.clear();
      for (std::size_t x = 0; x < m.size(); ++x) {
        terms.push_back(q.residual_right(theta.tensor_at(x, y), psi.tensor_at(x, z)));
      }
      out.theta_tensor.push_back(meet_all(q, n.rho[y], p.rho[z], terms).elem);
    }
  }
  return out;
}

QBimodule qmod_right_lifting(const FiniteQuantaloid& q, const QBimodule& psi,
                             const QBimodule& theta) {
  if (!same(theta.target, psi.target)) throw Error(ErrorKind::kHomMismatch, "targets differ");
  const QCategory& m = *theta.source;
  const QCategory& n = *theta.target;
  const QCategory& p = *psi.source;
  QBimodule out{psi.source, theta.source, {}, std::nullopt};
  std::vector<Arrow> terms;
  for (std::size_t z = 0; z < p.size(); ++z) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      terms.clear();
      for (std::size_t y = 0; y < n.size(); ++y) {
        terms.push_back(q.residual_left(psi.tensor_at(z, y), theta.tensor_at(x, y)));
      }
      out.theta_tensor.push_back(meet_all(q, p.rho[z], m.rho[x], terms).elem);
    }
  }
  return out;
}

QBimodule qmod_delta(const FiniteQuantaloid& q, const CategoryRef& m, const Family& d) {
  require_girard(q, d);
  QBimodule out{m, m, {}, std::nullopt};
  for (std::size_t x = 0; x < m->size(); ++x) {
    for (std::size_t x2 = 0; x2 < m->size(); ++x2) {
      out.theta_tensor.push_back(perp(q, d, m->tensor_at(x2, x)).elem);
    }
  }
  return out;
}

QCategory girard_linear_category(const FiniteQuantaloid& q, const QCategory& m, const Family& d) {
  require_girard(q, d);
  QCategory out = m;
  std::vector<std::size_t> par;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t x2 = 0; x2 < m.size(); ++x2) {
      par.push_back(perp(q, d, m.tensor_at(x2, x)).elem);
    }
  }
  out.enrich_par = std::move(par);
  return out;
}

QBimodule girard_linear_bimodule(const FiniteQuantaloid& q, const QBimodule& theta,
                                 CategoryRef source, CategoryRef target, const Family& d) {
  require_girard(q, d);
  QBimodule out{std::move(source), std::move(target), theta.theta_tensor, std::nullopt};
  std::vector<std::size_t> par;
  for (std::size_t y = 0; y < theta.target->size(); ++y) {
    for (std::size_t x = 0; x < theta.source->size(); ++x) {
      par.push_back(perp(q, d, theta.tensor_at(x, y)).elem);
    }
  }
  out.theta_par = std::move(par);
  return out;
}

LawReport validate_second_enrichment(const FiniteQuantaloid& q, const QCategory& m,
                                     const Family& d) {
  require_shape(q, m);
  require_girard(q, d);
  auto M = [&](std::size_t x, std::size_t y) { return m.tensor_at(x, y); };
  auto P = [&](std::size_t x, std::size_t y) { return perp(q, d, m.tensor_at(x, y)); };
  auto par = [&](const Arrow& f, const Arrow& g) { return girard_par(q, d, f, g); };
  Tally t;
  for (const char* id : {"gqcat.second.counit", "gqcat.second.cocomposition",
                         "gqcat.second.action_right", "gqcat.second.coaction_right",
                         "gqcat.second.action_left", "gqcat.second.coaction_left"}) {
    t.declare(id);
  }
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = m.rho[x];
    t.check("gqcat.second.counit", q.leq(P(x, x), {a, a, d[a]}),
            [&] { return Json{{"category", m.name}, {"x", member(m, x)}}; });
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t x1 = 0; x1 < n; ++x1) {
      for (std::size_t x2 = 0; x2 < n; ++x2) {
        auto w = [&] {
          return Json{{"category", m.name},
                      {"x", member(m, x)},
                      {"x'", member(m, x1)},
                      {"x''", member(m, x2)}};
        };
        t.check("gqcat.second.cocomposition", q.leq(P(x, x2), par(P(x1, x2), P(x, x1))), w);
        t.check("gqcat.second.action_right", q.leq(q.tensor(P(x1, x), M(x1, x2)), P(x2, x)), w);
        t.check("gqcat.second.coaction_right", q.leq(M(x2, x), par(P(x1, x2), M(x1, x))), w);
        t.check("gqcat.second.action_left", q.leq(q.tensor(M(x2, x), P(x1, x)), P(x1, x2)), w);
        t.check("gqcat.second.coaction_left", q.leq(M(x2, x), par(M(x2, x1), P(x, x1))), w);
      }
    }
  }
  return t.finish("second-enrichment");
}

LawReport validate_second_enrichment(const FiniteQuantaloid& q, const QBimodule& theta,
                                     const Family& d) {
  require_shape(q, theta);
  require_girard(q, d);
  const QCategory& m = *theta.source;
  const QCategory& n = *theta.target;
  auto T = [&](std::size_t x, std::size_t y) { return theta.tensor_at(x, y); };
  auto TP = [&](std::size_t x, std::size_t y) { return perp(q, d, theta.tensor_at(x, y)); };
  auto MP = [&](std::size_t x, std::size_t x2) { return perp(q, d, m.tensor_at(x, x2)); };
  auto NP = [&](std::size_t y, std::size_t y2) { return perp(q, d, n.tensor_at(y, y2)); };
  auto par = [&](const Arrow& f, const Arrow& g) { return girard_par(q, d, f, g); };
  Tally t;
  for (const char* id : {"gqbim.second.target_coaction", "gqbim.second.source_coaction",
                         "gqbim.second.source_action", "gqbim.second.source_action_dual",
                         "gqbim.second.target_action", "gqbim.second.target_action_dual"}) {
    t.declare(id);
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < n.size(); ++y) {
      for (std::size_t y2 = 0; y2 < n.size(); ++y2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"y", member(n, y)}, {"y'", member(n, y2)}}; };
        t.check("gqbim.second.target_coaction", q.leq(TP(x, y2), par(NP(y, y2), TP(x, y))), w);
        t.check("gqbim.second.target_action",
                q.leq(q.tensor(n.tensor_at(y, y2), TP(x, y2)), TP(x, y)), w);
        t.check("gqbim.second.target_action_dual", q.leq(T(x, y), par(T(x, y2), NP(y, y2))), w);
      }
      for (std::size_t x2 = 0; x2 < m.size(); ++x2) {
        auto w = [&] { return Json{{"x", member(m, x)}, {"x'", member(m, x2)}, {"y", member(n, y)}}; };
        t.check("gqbim.second.source_coaction", q.leq(TP(x, y), par(TP(x2, y), MP(x, x2))), w);
        t.check("gqbim.second.source_action",
                q.leq(q.tensor(TP(x2, y), m.tensor_at(x2, x)), TP(x, y)), w);
        t.check("gqbim.second.source_action_dual", q.leq(T(x, y), par(MP(x2, x), T(x2, y))), w);
      }
    }
  }
  return t.finish("second-enrichment");
}

QBimodule qmod_linear_adjoint(const FiniteQuantaloid& q, const QBimodule& theta, const Family& d) {
  require_girard(q, d);
  const std::size_t nx = theta.source->size();
  const std::size_t ny = theta.target->size();
  QBimodule out{theta.target, theta.source, {}, theta.theta_tensor};
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < nx; ++x) out.theta_tensor.push_back(perp(q, d, theta.tensor_at(x, y)).elem);
  }
  return out;
}

LawReport check_qmod_linear_adjoint(const FiniteQuantaloid& q, const QBimodule& a,
                                    const QBimodule& b) {
  if (!a.linear() || !b.linear()) throw Error(ErrorKind::kShapeMismatch, "linear bimodules needed");
  LawReport report("qmod-linear-adjoint");
  const Json w{{"a", describe_bimodule(q, a)}, {"b", describe_bimodule(q, b)}};
  if (qmod_leq(q, qmod_iota(a.source), qmod_compose_par(q, a, b))) {
    report.pass("linadj.unit", "exhaustive");
  } else {
    report.fail("linadj.unit", w, "exhaustive");
  }
  if (qmod_leq(q, qmod_compose_tensor(q, b, a), qmod_linear_delta(a.target))) {
    report.pass("linadj.counit", "exhaustive");
  } else {
    report.fail("linadj.counit", w, "exhaustive");
  }
  return report;
}

std::vector<QCategory> enumerate_qcategories(const FiniteQuantaloid& q, const FiniteSet& carrier,
                                             const std::vector<std::size_t>& rho, bool linear,
                                             std::size_t cap) {
  const std::size_t n = carrier.size();
  if (rho.size() != n) throw Error(ErrorKind::kShapeMismatch, "rho size");
  std::vector<std::size_t> ranges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) ranges.push_back(q.hom(rho[x], rho[y]).size());
  }
  if (product(ranges, cap) > cap) {
    throw Error(ErrorKind::kSearchSpaceTooLarge, "too many enrichments on " + carrier.name);
  }
  QCategory probe{carrier.name, carrier, rho, {}, std::nullopt};
  std::vector<std::vector<std::size_t>> tensors;
  odometer(ranges, [&](const std::vector<std::size_t>& digits) {
    probe.enrich_tensor = digits;
    if (valid_qcategory(q, probe)) tensors.push_back(digits);
  });
  if (!linear) {
    std::vector<QCategory> out;
    for (auto& t : tensors) out.push_back({carrier.name, carrier, rho, std::move(t), std::nullopt});
    return out;
  }
  if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "base has no par");
  // Par enrichments satisfying counit and cocomposition on their own.
  std::vector<std::vector<std::size_t>> pars;
  odometer(ranges, [&](const std::vector<std::size_t>& digits) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = q.leq({rho[x], rho[x], digits[x * n + x]}, q.bot_id(rho[x]));
    }
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        for (std::size_t z = 0; z < n && ok; ++z) {
          const Arrow xz{rho[x], rho[z], digits[x * n + z]};
          ok = q.leq(xz, q.par({rho[x], rho[y], digits[x * n + y]},
                               {rho[y], rho[z], digits[y * n + z]}));
        }
      }
    }
    if (ok) pars.push_back(digits);
  });
  std::vector<QCategory> out;
  for (const auto& t : tensors) {
    for (const auto& p : pars) {
      QCategory m{carrier.name, carrier, rho, t, p};
      if (valid_qcategory(q, m)) out.push_back(std::move(m));
    }
  }
  return out;
}

std::optional<std::vector<QBimodule>> enumerate_qbimodules(const FiniteQuantaloid& q,
                                                           const CategoryRef& m,
                                                           const CategoryRef& n,
                                                           std::size_t cap) {
  const bool lin = m->linear() && n->linear();
  std::vector<std::size_t> forward, backward;
  for (std::size_t x = 0; x < m->size(); ++x) {
    for (std::size_t y = 0; y < n->size(); ++y) forward.push_back(q.hom(m->rho[x], n->rho[y]).size());
  }
  for (std::size_t y = 0; y < n->size(); ++y) {
    for (std::size_t x = 0; x < m->size(); ++x) backward.push_back(q.hom(n->rho[y], m->rho[x]).size());
  }
  if (product(forward, cap) > cap || (lin && product(backward, cap) > cap)) return std::nullopt;
  QBimodule probe{m, n, {}, std::nullopt};
  std::vector<std::vector<std::size_t>> tensors;
  odometer(forward, [&](const std::vector<std::size_t>& digits) {
    probe.theta_tensor = digits;
    Tally t(true);
    qbim_tensor_conditions(q, probe, lin, t);
    if (!t.stopped()) tensors.push_back(digits);
  });
  std::vector<QBimodule> out;
  if (!lin) {
    for (auto& t : tensors) out.push_back({m, n, std::move(t), std::nullopt});
    return out;
  }
  std::vector<std::vector<std::size_t>> pars;
  odometer(backward, [&](const std::vector<std::size_t>& digits) {
    probe.theta_par = digits;
    Tally t(true);
    qbim_par_conditions(q, probe, t);
    if (!t.stopped()) pars.push_back(digits);
  });
  for (const auto& t : tensors) {
    for (const auto& p : pars) out.push_back({m, n, t, p});
  }
  return out;
}

QModModel::QModModel(const FiniteQuantaloid& q, std::vector<CategoryRef> categories,
                     std::optional<Family> family)
    : q_(&q), categories_(std::move(categories)), family_(std::move(family)) {
  linear_ = !categories_.empty() &&
            std::all_of(categories_.begin(), categories_.end(),
                        [](const CategoryRef& c) { return c->linear(); });
}

const std::vector<QBimodule>& QModModel::all(const CategoryRef& m, const CategoryRef& n) const {
  const auto key = std::make_pair(m.get(), n.get());
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto list = enumerate_qbimodules(*q_, m, n, std::size_t{1} << 22);
    if (!list) throw Error(ErrorKind::kSearchSpaceTooLarge, "bimodules " + m->name + " to " + n->name);
    it = cache_.emplace(key, std::move(*list)).first;
  }
  return it->second;
}

std::optional<std::vector<QBimodule>> QModModel::enumerate(const CategoryRef& m,
                                                           const CategoryRef& n,
                                                           std::size_t cap) const {
  const auto& list = all(m, n);
  if (list.size() > cap) return std::nullopt;
  return list;
}

QBimodule QModModel::sample(const CategoryRef& m, const CategoryRef& n, Rng& rng) const {
  const auto& list = all(m, n);
  if (list.empty()) return bottom(m, n);
  return list[rng.below(list.size())];
}

Json QModModel::describe(const QBimodule& c) const { return describe_bimodule(*q_, c); }

Json QModModel::describe_object(const CategoryRef& o) const { return describe_category(*q_, *o); }

QBimodule QModModel::bot_id(const CategoryRef& m) const {
  if (linear_) return qmod_linear_delta(m);
  if (family_) return qmod_delta(*q_, m, *family_);
  throw Error(ErrorKind::kNoParStructure, "plain Q-Mod has no par identity without a family");
}

QBimodule QModModel::bottom(const CategoryRef& m, const CategoryRef& n) const {
  return qmod_bottom(*q_, m, n, linear_);
}

QBimodule QModModel::top(const CategoryRef& m, const CategoryRef& n) const {
  return qmod_top(*q_, m, n, linear_);
}

Json describe_category(const FiniteQuantaloid& q, const QCategory& m) {
  Json rho = Json::array();
  for (std::size_t o : m.rho) rho.push_back(q.objects()[o]);
  Json out{{"name", m.name}, {"carrier", m.carrier.members}, {"rho", rho}};
  out["tensor"] = matrix_json(q, m.size(), m.size(), [&](auto x, auto y) { return m.tensor_at(x, y); });
  if (m.linear()) {
    out["par"] = matrix_json(q, m.size(), m.size(), [&](auto x, auto y) { return m.par_at(x, y); });
  }
  return out;
}

Json describe_bimodule(const FiniteQuantaloid& q, const QBimodule& b) {
  Json out{{"source", b.source->name}, {"target", b.target->name}};
  out["tensor"] = matrix_json(q, b.source->size(), b.target->size(),
                              [&](auto x, auto y) { return b.tensor_at(x, y); });
  if (b.linear()) {
    out["par"] = matrix_json(q, b.target->size(), b.source->size(),
                             [&](auto y, auto x) { return b.par_at(y, x); });
  }
  return out;
}

std::vector<CategoryRef> sample_categories(const FiniteQuantaloid& q, bool linear,
                                           std::size_t extra, std::uint64_t seed) {
  std::vector<CategoryRef> out;
  for (std::size_t a = 0; a < q.size(); ++a) {
    out.push_back(std::make_shared<QCategory>(singleton_category(q, a, linear)));
  }
  if (extra == 0) return out;
  std::vector<QCategory> pool;
  const FiniteSet carrier = numbered_set("P", 2);
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      for (auto& c : enumerate_qcategories(q, carrier, {a, b}, linear)) pool.push_back(std::move(c));
    }
  }
  Rng rng(derive_seed(seed, "categories"));
  std::vector<std::size_t> picks(pool.size());
  std::iota(picks.begin(), picks.end(), 0);
  for (std::size_t i = 0; i < picks.size(); ++i) {
    std::swap(picks[i], picks[i + rng.below(picks.size() - i)]);
  }
  picks.resize(std::min(extra, picks.size()));
  std::sort(picks.begin(), picks.end());
  for (std::size_t i : picks) {
    QCategory c = pool[i];
    c.name = "C" + std::to_string(i);
    out.push_back(std::make_shared<QCategory>(std::move(c)));
  }
  return out;
}

Sampler qmod_sampler(std::uint64_t seed) {
  Sampler s = Sampler::exhaustive(seed);
  s.tuple_cap = 4096;
  s.fallback_count = 500;
  return s;
}

LawReport check_qmod_laws(const FiniteQuantaloid& q, const std::vector<CategoryRef>& categories,
                          const Sampler& sampler) {
  const QModModel model(q, categories);
  const bool lin = !categories.empty() && categories.front()->linear();
  const auto laws = linear_quantaloid_laws<QModModel>(lin);
  return run_suite<QModModel>("qmod", model, laws, sampler);
}

std::vector<Law<QModModel>> girard_qmod_laws(const Family& d) {
  using O = std::span<const CategoryRef>;
  using C = std::span<const QBimodule>;
  // The family is not required to be Girard here: a failing family is
  // reported through the laws.
  auto delta = [d](const FiniteQuantaloid& Q, const CategoryRef& m) {
    QBimodule out{m, m, {}, std::nullopt};
    for (std::size_t x = 0; x < m->size(); ++x) {
      for (std::size_t x2 = 0; x2 < m->size(); ++x2) {
        out.theta_tensor.push_back(perp(Q, d, m->tensor_at(x2, x)).elem);
      }
    }
    return out;
  };
  return {
      {"girard.cyclic", 2, {{0, 1, "theta"}},
       [delta](const QModModel& m, O o, C c) {
         const auto& Q = m.quantaloid();
         return qmod_right_extension(Q, c[0], delta(Q, o[0])) ==
                qmod_right_lifting(Q, delta(Q, o[1]), c[0]);
       }},
      {"girard.dualizing", 2, {{0, 1, "theta"}},
       [delta](const QModModel& m, O o, C c) {
         const auto& Q = m.quantaloid();
         const QBimodule p = qmod_right_extension(Q, c[0], delta(Q, o[0]));
         return qmod_right_extension(Q, p, delta(Q, o[1])) == c[0];
       }},
  };
}

LawReport check_girard_qmod(const FiniteQuantaloid& q, const Family& d,
                            const std::vector<CategoryRef>& categories, const Sampler& sampler) {
  if (d.size() != q.size()) throw Error(ErrorKind::kFamilyShapeMismatch, "one element per object");
  const auto laws = girard_qmod_laws(d);
  const QModModel model(q, categories);
  return run_suite<QModModel>("girard-qmod", model, laws, sampler);
}

LawReport verify_linear_qmod_theorem(const FiniteQuantaloid& q,
                                     const std::vector<CategoryRef>& categories,
                                     const Sampler& sampler) {
  const bool lin = q.has_par();
  std::vector<CategoryRef> objects = categories;
  std::vector<CategoryRef> singletons(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    const QCategory s = singleton_category(q, a, lin);
    for (const auto& c : objects) {
      if (*c == s) singletons[a] = c;
    }
    if (!singletons[a]) {
      singletons[a] = std::make_shared<QCategory>(s);
      objects.insert(objects.begin() + static_cast<std::ptrdiff_t>(a), singletons[a]);
    }
  }
  const QuantaloidModel base(q);
  const QModModel lifted(q, objects);
  const auto base_laws = linear_quantaloid_laws<QuantaloidModel>(lin);
  const auto lifted_laws = linear_quantaloid_laws<QModModel>(lin);
  return run_biconditional<QuantaloidModel, QModModel>(
      "linear-qmod", base, base_laws, sampler, lifted, lifted_laws, sampler,
      [&](std::size_t a) { return singletons[a]; },
      [&](const Arrow& f) { return singleton_bimodule(q, f, singletons[f.from], singletons[f.to]); });
}

}  // namespace linbicat
