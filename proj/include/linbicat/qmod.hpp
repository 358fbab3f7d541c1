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

#ifndef LINBICAT_QMOD_HPP
#define LINBICAT_QMOD_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linbicat/law_suite.hpp"
#include "linbicat/qrel.hpp"
#include "linbicat/quantaloid.hpp"
#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

/// A Q-category over a finite quantaloid: M_⊗(x,x'): ρ(x)→ρ(x'), and for
/// a linear Q-category also M_⊕(x,x'): ρ(x)→ρ(x'). Matrices are row-major
/// over carrier × carrier and hold hom indices.
struct QCategory {
  std::string name;
  FiniteSet carrier;
  std::vector<std::size_t> rho;
  std::vector<std::size_t> enrich_tensor;
  std::optional<std::vector<std::size_t>> enrich_par;

  std::size_t size() const { return carrier.size(); }
  bool linear() const { return enrich_par.has_value(); }
  Arrow tensor_at(std::size_t x, std::size_t x2) const {
    return {rho[x], rho[x2], enrich_tensor[x * size() + x2]};
  }
  /// Requires par data.
  Arrow par_at(std::size_t x, std::size_t x2) const {
    return {rho[x], rho[x2], (*enrich_par)[x * size() + x2]};
  }
  friend bool operator==(const QCategory&, const QCategory&) = default;
};

using CategoryRef = std::shared_ptr<const QCategory>;

/// Θ: M↛N with Θ_⊗(x,y): ρ_M(x)→ρ_N(y) row-major over X × Y, and for a
/// linear bimodule Θ_⊕(y,x): ρ_N(y)→ρ_M(x) row-major over Y × X.
struct QBimodule {
  CategoryRef source;
  CategoryRef target;
  std::vector<std::size_t> theta_tensor;
  std::optional<std::vector<std::size_t>> theta_par;

  bool linear() const { return theta_par.has_value(); }
  Arrow tensor_at(std::size_t x, std::size_t y) const {
    return {source->rho[x], target->rho[y], theta_tensor[x * target->size() + y]};
  }
  Arrow par_at(std::size_t y, std::size_t x) const {
    return {target->rho[y], source->rho[x], (*theta_par)[y * source->size() + x]};
  }
  friend bool operator==(const QBimodule& a, const QBimodule& b) {
    return (a.source == b.source || *a.source == *b.source) &&
           (a.target == b.target || *a.target == *b.target) && a.theta_tensor == b.theta_tensor &&
           a.theta_par == b.theta_par;
  }
};

/// Throws shape-mismatch on wrong matrix sizes or object indices and
/// unknown-element on out-of-range hom entries.
void require_shape(const FiniteQuantaloid& q, const QCategory& m);
void require_shape(const FiniteQuantaloid& q, const QBimodule& b);

/// qcat.* for plain categories, lqcat.* when par data is present.
LawReport validate_qcategory(const FiniteQuantaloid& q, const QCategory& m);
/// qbim.* for plain bimodules, lqbim.* when par data is present.
LawReport validate_qbimodule(const FiniteQuantaloid& q, const QBimodule& b);

/// ⊤ on the diagonal and bottom elsewhere; with `linear` also ⊥ on the
/// diagonal and top elsewhere.
QCategory discrete_category(const FiniteQuantaloid& q, std::string name, FiniteSet carrier,
                            std::vector<std::size_t> rho, bool linear);
/// ({x}, ρ = a) with M_⊗ = ⊤_a and, when linear, M_⊕ = ⊥_a.
QCategory singleton_category(const FiniteQuantaloid& q, std::size_t a, bool linear);
/// f: a→b between singleton categories; when linear the par part is f⊸⊤_a.
QBimodule singleton_bimodule(const FiniteQuantaloid& q, const Arrow& f, CategoryRef source,
                             CategoryRef target);

/// Throws hom-mismatch when Θ's target is not Π's source. Linear
/// composition when both carry par data; otherwise only the ⊗-parts.
QBimodule qmod_compose_tensor(const FiniteQuantaloid& q, const QBimodule& theta,
                              const QBimodule& pi);
/// Meets of ⊕ on the ⊗-parts; joins of ⊗ on the ⊕-parts when linear.
/// Throws no-par-structure.
QBimodule qmod_compose_par(const FiniteQuantaloid& q, const QBimodule& theta, const QBimodule& pi);
/// ι_M = (M_⊗, M_⊕).
QBimodule qmod_iota(const CategoryRef& m);
/// (M_⊕, M_⊗); throws no-par-structure for a plain category.
QBimodule qmod_linear_delta(const CategoryRef& m);

QBimodule qmod_join(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b);
QBimodule qmod_meet(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b);
/// Pointwise; par parts compared contravariantly.
bool qmod_leq(const FiniteQuantaloid& q, const QBimodule& a, const QBimodule& b);
QBimodule qmod_bottom(const FiniteQuantaloid& q, const CategoryRef& m, const CategoryRef& n,
                      bool linear);
QBimodule qmod_top(const FiniteQuantaloid& q, const CategoryRef& m, const CategoryRef& n,
                   bool linear);

/// For Θ: M↛N and Ψ: M↛P, (y,z) ↦ ⋀_x Θ(x,y) ⊸ Ψ(x,z).
QBimodule qmod_right_extension(const FiniteQuantaloid& q, const QBimodule& theta,
                               const QBimodule& psi);
/// For Ψ: P↛N and Θ: M↛N, (z,x) ↦ ⋀_y Ψ(z,y) ⟜ Θ(x,y).
QBimodule qmod_right_lifting(const FiniteQuantaloid& q, const QBimodule& psi,
                             const QBimodule& theta);

/// δ_M(x,x') = M(x',x) ⊸ d_ρ(x'). Throws not-girard when `d` fails the
/// Girard family check.
QBimodule qmod_delta(const FiniteQuantaloid& q, const CategoryRef& m, const Family& d);

/// Adds the second enrichment M_⊕(x,x') = M_⊗(x',x)^⊥, f^⊥ = f ⊸ d_a.
QCategory girard_linear_category(const FiniteQuantaloid& q, const QCategory& m, const Family& d);
/// Adds Θ_⊕(y,x) = Θ_⊗(x,y)^⊥; source and target are replaced.
QBimodule girard_linear_bimodule(const FiniteQuantaloid& q, const QBimodule& theta,
                                 CategoryRef source, CategoryRef target, const Family& d);
/// gqcat.second.*: the second enrichment of a plain category over a
/// Girard base, with par f⊕g = (g^⊥ ⊗ f^⊥)^⊥. Throws not-girard.
LawReport validate_second_enrichment(const FiniteQuantaloid& q, const QCategory& m,
                                     const Family& d);
/// gqbim.second.*: the second enrichment of a plain bimodule.
LawReport validate_second_enrichment(const FiniteQuantaloid& q, const QBimodule& theta,
                                     const Family& d);

/// Θ^⊥: N↛M with Θ^⊥_⊗(y,x) = Θ_⊗(x,y)^⊥ and Θ^⊥_⊕(x,y) = Θ_⊗(x,y).
/// Throws not-girard.
QBimodule qmod_linear_adjoint(const FiniteQuantaloid& q, const QBimodule& theta, const Family& d);
/// linadj.unit ι_M <= A⊕B and linadj.counit B⊗A <= δ_N for linear A: M↛N,
/// B: N↛M.
LawReport check_qmod_linear_adjoint(const FiniteQuantaloid& q, const QBimodule& a,
                                    const QBimodule& b);

/// All valid (linear when `linear`) enrichments on `carrier` with object
/// assignment `rho`, in lexicographic order. Throws search-space-too-large
/// when the candidate count exceeds `cap`.
std::vector<QCategory> enumerate_qcategories(const FiniteQuantaloid& q, const FiniteSet& carrier,
                                             const std::vector<std::size_t>& rho, bool linear,
                                             std::size_t cap = 1u << 20);
/// Every valid bimodule M↛N (linear when both categories are), or nullopt
/// when the candidate count exceeds `cap`.
std::optional<std::vector<QBimodule>> enumerate_qbimodules(const FiniteQuantaloid& q,
                                                           const CategoryRef& m,
                                                           const CategoryRef& n,
                                                           std::size_t cap = 1u << 20);

/// Q-Mod (or linear Q-Mod) over a fixed list of categories. Valid bimodules
/// between each pair are enumerated once and cached.
class QModModel {
 public:
  using Object = CategoryRef;
  using Cell = QBimodule;

  /// With a family, par composition and δ_M make plain Q-Mod linear over a
  /// Girard base; otherwise linear needs linear categories.
  QModModel(const FiniteQuantaloid& q, std::vector<CategoryRef> categories,
            std::optional<Family> family = std::nullopt);

  const FiniteQuantaloid& quantaloid() const { return *q_; }
  std::vector<Object> objects() const { return categories_; }
  std::optional<std::vector<Cell>> enumerate(const Object& m, const Object& n,
                                             std::size_t cap) const;
  Cell sample(const Object& m, const Object& n, Rng& rng) const;
  Json describe(const Cell& c) const;
  Json describe_object(const Object& o) const;

  Cell tensor(const Cell& f, const Cell& g) const { return qmod_compose_tensor(*q_, f, g); }
  Cell par(const Cell& f, const Cell& g) const { return qmod_compose_par(*q_, f, g); }
  Cell top_id(const Object& m) const { return qmod_iota(m); }
  Cell bot_id(const Object& m) const;
  Cell bottom(const Object& m, const Object& n) const;
  Cell top(const Object& m, const Object& n) const;
  Cell join(const Cell& f, const Cell& g) const { return qmod_join(*q_, f, g); }
  Cell meet(const Cell& f, const Cell& g) const { return qmod_meet(*q_, f, g); }
  bool leq(const Cell& f, const Cell& g) const { return qmod_leq(*q_, f, g); }
  bool equal(const Cell& f, const Cell& g) const { return f == g; }

 private:
  const std::vector<Cell>& all(const Object& m, const Object& n) const;

  const FiniteQuantaloid* q_;
  std::vector<CategoryRef> categories_;
  std::optional<Family> family_;
  bool linear_;
  mutable std::map<std::pair<const QCategory*, const QCategory*>, std::vector<Cell>> cache_;
};

Json describe_category(const FiniteQuantaloid& q, const QCategory& m);
Json describe_bimodule(const FiniteQuantaloid& q, const QBimodule& b);

/// Desk-scale categories: every singleton category, then up to `extra`
/// valid categories on two points drawn with `seed`.
std::vector<CategoryRef> sample_categories(const FiniteQuantaloid& q, bool linear,
                                           std::size_t extra, std::uint64_t seed);

/// Exhaustive per chain up to 4096 tuples, 500 random draws beyond.
Sampler qmod_sampler(std::uint64_t seed = 0);

/// Tensor laws, plus par laws and distributions for linear categories.
LawReport check_qmod_laws(const FiniteQuantaloid& q, const std::vector<CategoryRef>& categories,
                          const Sampler& sampler = qmod_sampler());
/// girard.cyclic and girard.dualizing for δ_M(x,x') = M(x',x) ⊸ d_ρ(x'),
/// slot "theta". The family is not required to be Girard.
std::vector<Law<QModModel>> girard_qmod_laws(const Family& d);
/// girard.cyclic and girard.dualizing for δ_M over every sampled bimodule.
LawReport check_girard_qmod(const FiniteQuantaloid& q, const Family& d,
                            const std::vector<CategoryRef>& categories,
                            const Sampler& sampler = qmod_sampler());

/// Linear-quantaloid laws on the base and on linear Q-Mod over the sampled
/// categories, tied together by the singleton-category embedding.
LawReport verify_linear_qmod_theorem(const FiniteQuantaloid& q,
                                     const std::vector<CategoryRef>& categories,
                                     const Sampler& sampler = qmod_sampler());

}  // namespace linbicat

#endif  // LINBICAT_QMOD_HPP
