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

#ifndef LINBICAT_QUANTALOID_HPP
#define LINBICAT_QUANTALOID_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linbicat/lattice.hpp"
#include "linbicat/law_suite.hpp"
#include "linbicat/quantale.hpp"
#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

/// A hom element `elem` of hom(from, to).
struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t elem = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Per-object endo-hom elements d_a.
using Family = std::vector<std::size_t>;

/// A finite quantaloid with optional par layer. Composition is
/// diagrammatic: tensor(f: a→b, g: b→c) is a→c. Tables are indexed by the
/// triple (a, b, c) as (a*k + b)*k + c and are row-major over
/// hom(a,b) × hom(b,c).
class FiniteQuantaloid {
 public:
  struct ParLayer {
    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> bot_ids;
  };

  /// Throws shape-mismatch on wrong table counts or sizes and
  /// unknown-element on out-of-range entries; duplicate-name on objects.
  FiniteQuantaloid(std::vector<std::string> objects, std::vector<FiniteLattice> homs,
                   std::vector<std::vector<std::size_t>> tensor, std::vector<std::size_t> top_ids,
                   std::optional<ParLayer> par = std::nullopt);

  /// One object "*". Finite backend only.
  static FiniteQuantaloid from_quantale(const Quantale& q);
  /// Every hom is q's lattice and both compositions are q's.
  static FiniteQuantaloid uniform(std::vector<std::string> objects, const Quantale& q);
  /// Inverse of from_quantale; throws shape-mismatch unless one object.
  Quantale to_quantale() const;

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t index_of(std::string_view object) const;
  const FiniteLattice& hom(std::size_t a, std::size_t b) const { return homs_[a * size() + b]; }
  const std::vector<std::vector<std::size_t>>& tensor_tables() const { return tensor_; }
  const std::optional<ParLayer>& par_layer() const { return par_; }
  bool has_par() const { return par_.has_value(); }

  /// Throws hom-mismatch when f.to != g.from.
  Arrow tensor(const Arrow& f, const Arrow& g) const;
  /// Also throws no-par-structure.
  Arrow par(const Arrow& f, const Arrow& g) const;
  Arrow top_id(std::size_t a) const { return {a, a, top_ids_[a]}; }
  Arrow bot_id(std::size_t a) const;
  Arrow bottom(std::size_t a, std::size_t b) const { return {a, b, hom(a, b).bottom()}; }
  Arrow top(std::size_t a, std::size_t b) const { return {a, b, hom(a, b).top()}; }
  Arrow join(const Arrow& f, const Arrow& g) const;
  Arrow meet(const Arrow& f, const Arrow& g) const;
  bool leq(const Arrow& f, const Arrow& g) const;

  /// For f: a→b and h: a→c, the largest g: b→c with f⊗g <= h.
  Arrow residual_right(const Arrow& f, const Arrow& h) const;
  /// For h: a→c and g: b→c, the largest f: a→b with f⊗g <= h.
  Arrow residual_left(const Arrow& h, const Arrow& g) const;

  std::vector<Arrow> arrows(std::size_t a, std::size_t b) const;
  /// Throws unknown-element.
  void require(const Arrow& f) const;
  Json describe(const Arrow& f) const;

 private:
  std::size_t triple(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * size() + b) * size() + c;
  }

  std::vector<std::string> objects_;
  std::vector<FiniteLattice> homs_;
  std::vector<std::vector<std::size_t>> tensor_;
  std::vector<std::size_t> top_ids_;
  std::optional<ParLayer> par_;
};

/// A finite quantaloid for the generic law engine.
class QuantaloidModel {
 public:
  using Object = std::size_t;
  using Cell = Arrow;

  explicit QuantaloidModel(const FiniteQuantaloid& q) : q_(&q) {}

  const FiniteQuantaloid& quantaloid() const { return *q_; }
  std::vector<Object> objects() const;
  std::optional<std::vector<Cell>> enumerate(Object a, Object b, std::size_t cap) const;
  Cell sample(Object a, Object b, Rng& rng) const {
    return {a, b, static_cast<std::size_t>(rng.below(q_->hom(a, b).size()))};
  }
  Json describe(const Cell& c) const { return q_->describe(c); }
  Json describe_object(const Object& o) const { return q_->objects()[o]; }

  Cell tensor(const Cell& f, const Cell& g) const { return q_->tensor(f, g); }
  Cell par(const Cell& f, const Cell& g) const { return q_->par(f, g); }
  Cell top_id(Object a) const { return q_->top_id(a); }
  Cell bot_id(Object a) const { return q_->bot_id(a); }
  Cell bottom(Object a, Object b) const { return q_->bottom(a, b); }
  Cell top(Object a, Object b) const { return q_->top(a, b); }
  Cell join(const Cell& f, const Cell& g) const { return q_->join(f, g); }
  Cell meet(const Cell& f, const Cell& g) const { return q_->meet(f, g); }
  bool leq(const Cell& f, const Cell& g) const { return q_->leq(f, g); }
  bool equal(const Cell& f, const Cell& g) const { return f == g; }

 private:
  const FiniteQuantaloid* q_;
};

/// Tensor laws, plus par laws and both distributions when a par layer is
/// present. Exhaustive within the sampler caps.
LawReport check_quantaloid_laws(const FiniteQuantaloid& q, const Sampler& sampler = {});

/// girard.cyclic and girard.dualizing for the family, slot "f". Entries
/// of `d` must be in range.
std::vector<Law<QuantaloidModel>> girard_family_laws(const Family& d);
/// For every f: a→b, f⊸d_a = d_b⟜f (cyclic) and f^⊥⊥ = f (dualizing).
/// Throws family-shape-mismatch.
LawReport check_girard_family(const FiniteQuantaloid& q, const Family& d);
/// Replaces the par layer by f⊕g = (g^⊥ ⊗ f^⊥)^⊥ with f^⊥ = f ⊸ d_a and par
/// units d. Throws family-shape-mismatch.
FiniteQuantaloid with_girard_par(const FiniteQuantaloid& q, const Family& d);
/// Every family passing check_girard_family, in lexicographic order.
/// Throws search-space-too-large when the candidate count exceeds `cap`.
std::vector<Family> find_girard_families(const FiniteQuantaloid& q, std::size_t cap = 1u << 16);

// ---------------------------------------------------------------------------
// Monads and their bimodules.

struct Monad {
  std::size_t object = 0;
  std::size_t m = 0;
  friend bool operator==(const Monad&, const Monad&) = default;
};

struct MonadBimodule {
  Monad source;
  Monad target;
  std::size_t f = 0;
  friend bool operator==(const MonadBimodule&, const MonadBimodule&) = default;
};

bool check_monad(const FiniteQuantaloid& q, const Monad& m);
bool check_monad_bimodule(const FiniteQuantaloid& q, const MonadBimodule& f);
/// Throws hom-mismatch when f's target is not g's source.
MonadBimodule monq_compose(const FiniteQuantaloid& q, const MonadBimodule& f,
                           const MonadBimodule& g);
MonadBimodule monq_identity(const Monad& m);
std::vector<Monad> enumerate_monads(const FiniteQuantaloid& q);

/// Mon Q over an explicit list of monads: homs are the bimodules, ordered
/// as in the base; `base_element[a*k+b][i]` is the base element behind hom
/// element i.
struct MonQ {
  FiniteQuantaloid quantaloid;
  std::vector<Monad> monads;
  std::vector<std::vector<std::size_t>> base_element;

  /// Hom index of base element `elem` in hom(a, b); throws
  /// family-shape-mismatch when it is not a bimodule.
  std::size_t local(std::size_t a, std::size_t b, std::size_t elem) const;
};

/// Throws search-space-too-large beyond `max_monads`.
MonQ materialize_monq(const FiniteQuantaloid& q, std::vector<Monad> monads);
MonQ materialize_monq(const FiniteQuantaloid& q, std::size_t max_monads = 16);

/// δ_(a,m) = m ⊸ d_a, as base elements, one per monad.
Family monq_girard_family(const FiniteQuantaloid& q, std::span<const Monad> monads, const Family& d);

// ---------------------------------------------------------------------------
// Linear monads and linear monad bimodules.

struct LinearMonad {
  std::size_t object = 0;
  std::size_t tensor_part = 0;
  std::size_t par_part = 0;
  friend bool operator==(const LinearMonad&, const LinearMonad&) = default;
};

/// f: (a,m) → (b,n) with tensor_part: a→b and par_part: b→a.
struct LinearMonadBimodule {
  LinearMonad source;
  LinearMonad target;
  std::size_t tensor_part = 0;
  std::size_t par_part = 0;
  friend bool operator==(const LinearMonadBimodule&, const LinearMonadBimodule&) = default;
};

/// The eight lmonad.* laws. Throws no-par-structure.
LawReport validate_linear_monad(const FiniteQuantaloid& q, const LinearMonad& m);
/// The eight lmonbim.* laws.
LawReport validate_linear_monad_bimodule(const FiniteQuantaloid& q, const LinearMonadBimodule& f);
bool check_linear_monad(const FiniteQuantaloid& q, const LinearMonad& m);
bool check_linear_monad_bimodule(const FiniteQuantaloid& q, const LinearMonadBimodule& f);

/// (f⊗g) = (f_⊗ ⊗ g_⊗, g_⊕ ⊕ f_⊕).
LinearMonadBimodule linear_monq_compose_tensor(const FiniteQuantaloid& q,
                                               const LinearMonadBimodule& f,
                                               const LinearMonadBimodule& g);
/// (f⊕g) = (f_⊗ ⊕ g_⊗, g_⊕ ⊗ f_⊕).
LinearMonadBimodule linear_monq_compose_par(const FiniteQuantaloid& q,
                                            const LinearMonadBimodule& f,
                                            const LinearMonadBimodule& g);
/// ⊤_(a,m) = (m_⊗, m_⊕).
LinearMonadBimodule linear_monq_top_identity(const LinearMonad& m);
/// ⊥_(a,m) = (m_⊕, m_⊗).
LinearMonadBimodule linear_monq_bot_identity(const LinearMonad& m);

/// (a, ⊤_a, ⊥_a).
LinearMonad trivial_linear_monad(const FiniteQuantaloid& q, std::size_t a);
/// (f, f ⊸ ⊤_a) between trivial monads, for f: a→b.
LinearMonadBimodule trivial_linear_bimodule(const FiniteQuantaloid& q, const Arrow& f);

std::vector<LinearMonad> enumerate_linear_monads(const FiniteQuantaloid& q);
std::vector<LinearMonadBimodule> enumerate_linear_bimodules(const FiniteQuantaloid& q,
                                                            const LinearMonad& m,
                                                            const LinearMonad& n);

/// Linear Mon Q over a list of linear monads. The 2-cell order compares
/// tensor parts covariantly and par parts contravariantly.
class LinearMonQModel {
 public:
  using Object = LinearMonad;
  using Cell = LinearMonadBimodule;

  LinearMonQModel(const FiniteQuantaloid& q, std::vector<LinearMonad> monads)
      : q_(&q), monads_(std::move(monads)) {}

  const FiniteQuantaloid& quantaloid() const { return *q_; }
  std::vector<Object> objects() const { return monads_; }
  std::optional<std::vector<Cell>> enumerate(const Object& m, const Object& n,
                                             std::size_t cap) const;
  Cell sample(const Object& m, const Object& n, Rng& rng) const;
  Json describe(const Cell& c) const;
  Json describe_object(const Object& o) const;

  Cell tensor(const Cell& f, const Cell& g) const { return linear_monq_compose_tensor(*q_, f, g); }
  Cell par(const Cell& f, const Cell& g) const { return linear_monq_compose_par(*q_, f, g); }
  Cell top_id(const Object& m) const { return linear_monq_top_identity(m); }
  Cell bot_id(const Object& m) const { return linear_monq_bot_identity(m); }
  Cell bottom(const Object& m, const Object& n) const;
  Cell top(const Object& m, const Object& n) const;
  Cell join(const Cell& f, const Cell& g) const;
  Cell meet(const Cell& f, const Cell& g) const;
  bool leq(const Cell& f, const Cell& g) const;
  bool equal(const Cell& f, const Cell& g) const { return f == g; }

 private:
  const FiniteQuantaloid* q_;
  std::vector<LinearMonad> monads_;
};

Json describe_monad(const FiniteQuantaloid& q, const LinearMonad& m);

}  // namespace linbicat

#endif  // LINBICAT_QUANTALOID_HPP
