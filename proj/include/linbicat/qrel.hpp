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

#ifndef LINBICAT_QREL_HPP
#define LINBICAT_QREL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linbicat/law_suite.hpp"
#include "linbicat/quantale.hpp"
#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

struct FiniteSet {
  std::string name;
  std::vector<std::string> members;

  std::size_t size() const { return members.size(); }
  /// Throws unknown-element.
  std::size_t index_of(std::string_view member) const;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Throws duplicate-name when members repeat.
FiniteSet make_set(std::string name, std::vector<std::string> members);
/// {"x1", ..., "xk"} named by `name`.
FiniteSet numbered_set(std::string name, std::size_t k, std::string_view prefix = "x");

/// A Q-valued matrix from `source` to `target`, row-major by source member.
/// Holds a pointer to its quantale, which must outlive it.
class QRelation {
 public:
  /// Throws shape-mismatch on a wrong value count and unknown-element on
  /// entries outside the carrier.
  QRelation(const Quantale& q, FiniteSet source, FiniteSet target, std::vector<Element> values);
  static QRelation constant(const Quantale& q, const FiniteSet& source, const FiniteSet& target,
                            Element value);

  const Quantale& quantale() const { return *q_; }
  const FiniteSet& source() const { return source_; }
  const FiniteSet& target() const { return target_; }
  std::size_t rows() const { return source_.size(); }
  std::size_t cols() const { return target_.size(); }
  Element operator()(std::size_t x, std::size_t y) const { return values_[x * cols() + y]; }
  const std::vector<Element>& values() const { return values_; }

  /// Same boundaries and entries (quantales compared structurally).
  friend bool operator==(const QRelation& a, const QRelation& b);

 private:
  const Quantale* q_;
  FiniteSet source_;
  FiniteSet target_;
  std::vector<Element> values_;
};

/// Throws quantale-mismatch.
void require_same_quantale(const QRelation& f, const QRelation& g);

/// (f⊗g)(x,z) = join over y of f(x,y)⊗g(y,z). Throws set-mismatch,
/// quantale-mismatch.
QRelation compose_tensor(const QRelation& f, const QRelation& g);
/// (f⊕g)(x,z) = meet over y of f(x,y)⊕g(y,z). Also throws no-par-structure.
QRelation compose_par(const QRelation& f, const QRelation& g);
/// Unit on the diagonal, bottom elsewhere.
QRelation id_top(const Quantale& q, const FiniteSet& x);
/// Par unit on the diagonal, top elsewhere. Throws no-par-structure.
QRelation id_bot(const Quantale& q, const FiniteSet& x);

QRelation rel_join(const QRelation& f, const QRelation& g);
QRelation rel_meet(const QRelation& f, const QRelation& g);
/// Pointwise order; throws set-mismatch / quantale-mismatch.
bool rel_leq(const QRelation& f, const QRelation& g);

/// For f: X→Y, h: X→Z, the largest s: Y→Z with f⊗s <= h.
QRelation right_extension(const QRelation& f, const QRelation& h);
/// For h: Z→Y, f: X→Y, the largest s: Z→X with s⊗f <= h.
QRelation right_lifting(const QRelation& h, const QRelation& f);

/// `d` on the diagonal, top elsewhere.
QRelation dual_family(const Quantale& q, const FiniteSet& x, Element d);
/// r^⊥(y,x) = r(x,y) ⊸ d.
QRelation rel_dual(const QRelation& r, Element d);
/// Uses the quantale's dualizer; throws not-girard without one.
QRelation rel_dual(const QRelation& r);

/// ⊤_X <= A⊕B and B⊗A <= ⊥_Y for A: X→Y, B: Y→X.
bool check_linear_adjoint(const QRelation& a, const QRelation& b);

/// Every relation X→Y in lexicographic entry order (first entry most
/// significant). Finite carriers only; throws search-space-too-large when
/// |Q|^(|X||Y|) exceeds `cap`.
std::vector<QRelation> enumerate_relations(const Quantale& q, const FiniteSet& x,
                                           const FiniteSet& y, std::size_t cap = 4096);
QRelation sample_relation(const Quantale& q, const FiniteSet& x, const FiniteSet& y, Rng& rng,
                          int window);

/// Every B: Y→X with check_linear_adjoint(a, B).
std::vector<QRelation> find_linear_adjoints(const QRelation& a, std::size_t cap = 4096);

/// Q-Rel over a fixed list of sets, for the generic law engine.
class QRelModel {
 public:
  using Object = FiniteSet;
  using Cell = QRelation;

  QRelModel(const Quantale& q, std::vector<FiniteSet> sets, int window = 10)
      : q_(&q), sets_(std::move(sets)), window_(window) {}

  const Quantale& quantale() const { return *q_; }
  std::vector<Object> objects() const { return sets_; }
  std::optional<std::vector<Cell>> enumerate(const Object& x, const Object& y,
                                             std::size_t cap) const;
  Cell sample(const Object& x, const Object& y, Rng& rng) const {
    return sample_relation(*q_, x, y, rng, window_);
  }
  Json describe(const Cell& c) const;
  Json describe_object(const Object& o) const;

  Cell tensor(const Cell& f, const Cell& g) const { return compose_tensor(f, g); }
  Cell par(const Cell& f, const Cell& g) const { return compose_par(f, g); }
  Cell top_id(const Object& x) const { return id_top(*q_, x); }
  Cell bot_id(const Object& x) const { return id_bot(*q_, x); }
  Cell bottom(const Object& x, const Object& y) const { return Cell::constant(*q_, x, y, q_->bottom()); }
  Cell top(const Object& x, const Object& y) const { return Cell::constant(*q_, x, y, q_->top()); }
  Cell join(const Cell& f, const Cell& g) const { return rel_join(f, g); }
  Cell meet(const Cell& f, const Cell& g) const { return rel_meet(f, g); }
  bool leq(const Cell& f, const Cell& g) const { return rel_leq(f, g); }
  bool equal(const Cell& f, const Cell& g) const { return f == g; }

  /// Deletes one member of one chain object, or lowers one entry.
  std::vector<Counterexample<QRelModel>> shrink(std::span<const Slot> slots,
                                                const std::vector<Object>& objects,
                                                const std::vector<Cell>& cells) const;

 private:
  const Quantale* q_;
  std::vector<FiniteSet> sets_;
  int window_;
};

/// Sets of every size in [min_size, max_size], named "X0", "X1", ...
std::vector<FiniteSet> standard_sets(std::size_t max_size, std::size_t min_size = 1);

/// The Q-Rel law suite: tensor laws, and with a par also the par laws and
/// both linear distributions.
LawReport verify_qrel_laws(const Quantale& q, const std::vector<FiniteSet>& sets,
                           const Sampler& sampler);
/// girard.cyclic and girard.dualizing for d_X = dual_family(X, d), slot "r".
std::vector<Law<QRelModel>> girard_qrel_laws(Element d);
/// girard.cyclic and girard.dualizing for the family d_X = dual_family(X, d)
/// on every relation between the sets. Uses the quantale's dualizer.
LawReport check_girard_qrel(const Quantale& g, const std::vector<FiniteSet>& sets,
                            const Sampler& sampler);

}  // namespace linbicat

#endif  // LINBICAT_QREL_HPP
