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

#ifndef LINBICAT_QUANTALE_HPP
#define LINBICAT_QUANTALE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linbicat/lattice.hpp"
#include "linbicat/law_suite.hpp"
#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

/// A carrier element. For finite carriers `raw` is the element index; for
/// the extended integers it is the integer itself, with the two extreme
/// int64 values standing for the infinities.
struct Element {
  std::int64_t raw = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
/// Finite extended integers are kept within this magnitude so that sums
/// never wrap; anything larger raises arithmetic-overflow.
inline constexpr std::int64_t kZinfLimit = std::int64_t{1} << 61;

inline Element at(std::size_t index) { return Element{static_cast<std::int64_t>(index)}; }
inline std::size_t index(Element e) { return static_cast<std::size_t>(e.raw); }

/// Second multiplication of a finite quantale, tabulated like the tensor.
struct ParTable {
  std::vector<std::size_t> table;  // row-major n*n
  std::size_t unit = 0;
};

/// Closed form on Z ∪ {±∞}. Tensor is a+b-tensor_shift with -∞ absorbing
/// (unit tensor_shift); par is a+b-dualizer with +∞ absorbing (unit
/// dualizer). With `absorbing_bottom_par` the par instead lets -∞ absorb,
/// which breaks meet preservation at the top. `absorbing_top_tensor` lets
/// +∞ absorb in the tensor; it is only sound in the opposite view, where
/// the tensor closed form serves as the par.
struct ZinfParams {
  std::int64_t tensor_shift = 0;
  std::int64_t dualizer = 0;
  bool absorbing_bottom_par = false;
  bool absorbing_top_tensor = false;
  friend bool operator==(const ZinfParams&, const ZinfParams&) = default;
};

/// A quantale, optionally with a par (LD structure) and a dualizer (Girard
/// structure). Two backends: a finite table over a FiniteLattice, or the
/// extended integers in closed form. The extended-integer backend may be
/// viewed in the opposite order, which exchanges the two multiplications.
class Quantale {
 public:
  struct Table {
    FiniteLattice lattice;
    std::vector<std::size_t> tensor;
    std::size_t unit = 0;
    std::optional<ParTable> par;
    std::optional<std::size_t> dualizer;
    // Derived at construction.
    std::vector<std::size_t> residual_right;    // a ⊸ b at a*n+b
    std::vector<std::size_t> residual_left;     // b ⟜ a at b*n+a
    std::vector<std::size_t> coresidual_right;  // least c with a⊕c >= b
    std::vector<std::size_t> coresidual_left;   // least c with c⊕a >= b
  };

  /// Throws shape-mismatch on wrong table sizes and unknown-element on
  /// out-of-range entries. Laws are not checked here.
  static Quantale from_table(FiniteLattice lattice, std::vector<std::size_t> tensor,
                             std::size_t unit, std::optional<ParTable> par = std::nullopt,
                             std::optional<std::size_t> dualizer = std::nullopt);
  static Quantale extended_integers(ZinfParams params);
  /// (max, +) with the given dualizer: Girard, par is the (min, +) side.
  static Quantale tropical(std::int64_t dualizer = 0);
  /// The opposite-order view of the tropical structure shifted by `e`:
  /// join is min, tensor is + with -∞+∞ = +∞, dualizer `e`.
  static Quantale arctic(std::int64_t e = 0);

  bool is_finite() const { return std::holds_alternative<Table>(backend_); }
  bool is_opposite_view() const { return opposite_; }
  /// Finite backend only (logic_error otherwise).
  const Table& table() const;
  const FiniteLattice& lattice() const { return table().lattice; }
  std::size_t size() const { return table().lattice.size(); }
  /// Extended-integer backend only.
  const ZinfParams& zinf() const;

  /// All elements in declaration order (finite backend only).
  std::vector<Element> elements() const;
  /// Default law-check domain: every element of a finite carrier, or
  /// [-window, window] plus both infinities in order for the extended
  /// integers.
  std::vector<Element> domain(int window = 10) const;
  /// Random element; extended-integer draws hit each infinity with
  /// probability 1/8 and are otherwise uniform in [-window, window].
  Element sample(Rng& rng, int window) const;
  /// Elements strictly below `a` used to shrink witnesses: the bottom and
  /// the immediate predecessors.
  std::vector<Element> shrink_candidates(Element a) const;

  bool contains(Element a) const;
  void require(Element a) const;  // throws unknown-element

  bool leq(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element join(std::span<const Element> xs) const;
  Element meet(std::span<const Element> xs) const;
  Element bottom() const;
  Element top() const;

  Element tensor(Element a, Element b) const;
  Element unit() const;
  bool has_par() const;
  /// Throws no-par-structure when absent.
  Element par(Element a, Element b) const;
  Element par_unit() const;
  std::optional<Element> dualizer() const;

  /// a ⊸ b: the largest c with a⊗c <= b.
  Element residual_right(Element a, Element b) const;
  /// b ⟜ a: the largest c with c⊗a <= b.
  Element residual_left(Element b, Element a) const;
  /// Least c with a⊕c >= b, and least c with c⊕a >= b. Require a par.
  Element coresidual_right(Element a, Element b) const;
  Element coresidual_left(Element b, Element a) const;

  /// Element naming at the file boundary: lattice names, or integers and
  /// "+inf"/"-inf".
  std::string format(Element a) const;
  Json to_json(Element a) const;
  Element parse(std::string_view text) const;
  Element from_json(const Json& value) const;

  /// Reverses the order and exchanges (tensor, unit) with (par, par unit).
  /// A dualizer becomes the old unit. Throws no-par-structure.
  Quantale opposite() const;
  Quantale with_dualizer(std::optional<Element> d) const;
  Quantale with_par(std::optional<ParTable> par) const;

  friend bool operator==(const Quantale& a, const Quantale& b);

 private:
  using Backend = std::variant<Table, ZinfParams>;
  Quantale(Backend backend, bool opposite) : backend_(std::move(backend)), opposite_(opposite) {}

  const ZinfParams* zp() const { return std::get_if<ZinfParams>(&backend_); }

  Backend backend_;
  bool opposite_ = false;
};

/// The one-object view of a quantale for the generic law engine: every
/// cell is an element of `domain`.
class QuantaleModel {
 public:
  using Object = int;
  using Cell = Element;

  QuantaleModel(const Quantale& q, std::vector<Element> domain) : q_(&q), domain_(std::move(domain)) {}

  const Quantale& quantale() const { return *q_; }
  std::vector<Object> objects() const { return {0}; }
  std::optional<std::vector<Cell>> enumerate(Object, Object, std::size_t cap) const {
    if (domain_.size() > cap) return std::nullopt;
    return domain_;
  }
  Cell sample(Object, Object, Rng& rng) const { return domain_[rng.below(domain_.size())]; }
  Json describe(const Cell& c) const { return q_->to_json(c); }
  Json describe_object(const Object&) const { return "*"; }

  Cell tensor(Cell a, Cell b) const { return q_->tensor(a, b); }
  Cell par(Cell a, Cell b) const { return q_->par(a, b); }
  Cell top_id(Object) const { return q_->unit(); }
  Cell bot_id(Object) const { return q_->par_unit(); }
  Cell bottom(Object, Object) const { return q_->bottom(); }
  Cell top(Object, Object) const { return q_->top(); }
  Cell join(Cell a, Cell b) const { return q_->join(a, b); }
  Cell meet(Cell a, Cell b) const { return q_->meet(a, b); }
  bool leq(Cell a, Cell b) const { return q_->leq(a, b); }
  bool equal(Cell a, Cell b) const { return a == b; }

  std::vector<Counterexample<QuantaleModel>> shrink(std::span<const Slot> slots,
                                                    const std::vector<Object>& objects,
                                                    const std::vector<Cell>& cells) const;

 private:
  const Quantale* q_;
  std::vector<Element> domain_;
};

/// Tensor laws (associativity, units, binary and empty join preservation,
/// monotonicity) over `domain`; defaults to Quantale::domain().
LawReport check_quantale_laws(const Quantale& q, std::optional<std::vector<Element>> domain = {},
                              const Sampler& sampler = {});
/// Both quantale structures (the par against meets) and both linear
/// distributions. Throws no-par-structure.
LawReport check_ld_laws(const Quantale& q, std::optional<std::vector<Element>> domain = {},
                        const Sampler& sampler = {});
/// girard.cyclic and girard.dualizing for `d`, slot "a".
std::vector<Law<QuantaleModel>> girard_quantale_laws(Element d);
/// girard.cyclic and girard.dualizing for candidate `d` over `domain`.
LawReport check_girard_laws(const Quantale& q, Element d,
                            std::optional<std::vector<Element>> domain = {});

bool is_cyclic_dualizing(const Quantale& q, Element d,
                         std::optional<std::vector<Element>> domain = {});
/// Every cyclic dualizing element. Extended integers: candidates and test
/// domain are the window.
std::vector<Element> find_dualizers(const Quantale& q, int window = 10);

/// Attaches `d` after checking it is cyclic dualizing; throws not-girard.
Quantale make_girard(const Quantale& q, Element d);
/// a^⊥ = a ⊸ ⊥. Throws not-girard without a dualizer.
Element girard_neg(const Quantale& g, Element a);
/// a ⊕ b = (b^⊥ ⊗ a^⊥)^⊥.
Element girard_par(const Quantale& g, Element a, Element b);
/// Pairs the tensor with the derived par (unit ⊥). Finite tables are
/// materialized; the extended integers already carry it.
Quantale girard_to_ld(const Quantale& g);
Quantale opposite_quantale(const Quantale& ld);

/// A finite monoid given by its multiplication table over named elements.
struct MonoidTable {
  std::vector<std::string> elements;
  std::vector<std::size_t> table;  // row-major n*n
};

/// Z/n with the given element names, names[0] the identity.
MonoidTable cyclic_monoid(std::vector<std::string> names);

/// The completion M⁺: M as an antichain between adjoined "bottom" and
/// "top". Tensor extends the monoid operation with bottom absorbing; par is
/// x + y - shift with top absorbing. Throws invalid-monoid,
/// not-commutative, not-cancellative, shift-not-invertible.
Quantale shift_completion(const MonoidTable& monoid, std::string_view shift);

}  // namespace linbicat

#endif  // LINBICAT_QUANTALE_HPP
