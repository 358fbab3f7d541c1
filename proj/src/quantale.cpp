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

#include "linbicat/quantale.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "linbicat/error.hpp"

namespace linbicat {

namespace {

std::int64_t checked(std::int64_t x) {
  if (x > kZinfLimit || x < -kZinfLimit) {
    throw Error(ErrorKind::kArithmeticOverflow,
                "extended integer " + std::to_string(x) + " exceeds the supported range");
  }
  return x;
}

bool finite(std::int64_t x) { return x != kPosInf && x != kNegInf; }

// Closed forms in the usual order.

std::int64_t z_tensor(const ZinfParams& p, std::int64_t a, std::int64_t b) {
  if (p.absorbing_top_tensor) {
    if (a == kPosInf || b == kPosInf) return kPosInf;
    if (a == kNegInf || b == kNegInf) return kNegInf;
  } else {
    if (a == kNegInf || b == kNegInf) return kNegInf;
    if (a == kPosInf || b == kPosInf) return kPosInf;
  }
  return checked(a + b - p.tensor_shift);
}

std::int64_t z_par(const ZinfParams& p, std::int64_t a, std::int64_t b) {
  if (p.absorbing_bottom_par) {
    if (a == kNegInf || b == kNegInf) return kNegInf;
    if (a == kPosInf || b == kPosInf) return kPosInf;
  } else {
    if (a == kPosInf || b == kPosInf) return kPosInf;
    if (a == kNegInf || b == kNegInf) return kNegInf;
  }
  return checked(a + b - p.dualizer);
}

// Largest c with a + c - shift <= b.
std::int64_t z_residual(const ZinfParams& p, std::int64_t a, std::int64_t b) {
  if (a == kNegInf) return kPosInf;
  if (a == kPosInf) return b == kPosInf ? kPosInf : kNegInf;
  if (b == kPosInf) return kPosInf;
  if (b == kNegInf) return kNegInf;
  return checked(b - a + p.tensor_shift);
}

// Least c with a + c - dualizer >= b.
std::int64_t z_coresidual(const ZinfParams& p, std::int64_t a, std::int64_t b) {
  if (b == kNegInf) return kNegInf;
  if (a == kPosInf) return kNegInf;
  if (a == kNegInf) return kPosInf;
  if (b == kPosInf) return kPosInf;
  return checked(b - a + p.dualizer);
}

void fill_derived(Quantale::Table& t) {
  const FiniteLattice& lat = t.lattice;
  const std::size_t n = lat.size();
  auto op = [&](const std::vector<std::size_t>& tab, std::size_t a, std::size_t b) {
    return tab[a * n + b];
  };
  t.residual_right.assign(n * n, 0);
  t.residual_left.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t right = lat.bottom();
      std::size_t left = lat.bottom();
      for (std::size_t c = 0; c < n; ++c) {
        if (lat.leq(op(t.tensor, a, c), b)) right = lat.join(right, c);
        if (lat.leq(op(t.tensor, c, a), b)) left = lat.join(left, c);
      }
      t.residual_right[a * n + b] = right;
      t.residual_left[b * n + a] = left;
    }
  }
  t.coresidual_right.clear();
  t.coresidual_left.clear();
  if (!t.par) return;
  t.coresidual_right.assign(n * n, 0);
  t.coresidual_left.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t right = lat.top();
      std::size_t left = lat.top();
      for (std::size_t c = 0; c < n; ++c) {
        if (lat.leq(b, op(t.par->table, a, c))) right = lat.meet(right, c);
        if (lat.leq(b, op(t.par->table, c, a))) left = lat.meet(left, c);
      }
      t.coresidual_right[a * n + b] = right;
      t.coresidual_left[b * n + a] = left;
    }
  }
}

void check_table(const std::vector<std::size_t>& tab, std::size_t n, std::string_view what) {
  if (tab.size() != n * n) {
    throw Error(ErrorKind::kShapeMismatch, std::string(what) + " table is not " +
                                               std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t v : tab) {
    if (v >= n) throw Error(ErrorKind::kUnknownElement, std::string(what) + " table entry out of range");
  }
}

}  // namespace

Quantale Quantale::from_table(FiniteLattice lattice, std::vector<std::size_t> tensor,
                              std::size_t unit, std::optional<ParTable> par,
                              std::optional<std::size_t> dualizer) {
  const std::size_t n = lattice.size();
  check_table(tensor, n, "tensor");
  if (unit >= n) throw Error(ErrorKind::kUnknownElement, "unit out of range");
  if (par) {
    check_table(par->table, n, "par");
    if (par->unit >= n) throw Error(ErrorKind::kUnknownElement, "par unit out of range");
  }
  if (dualizer && *dualizer >= n) throw Error(ErrorKind::kUnknownElement, "dualizer out of range");
  Table t{std::move(lattice), std::move(tensor), unit, std::move(par), dualizer, {}, {}, {}, {}};
  fill_derived(t);
  return Quantale(std::move(t), false);
}

Quantale Quantale::extended_integers(ZinfParams params) {
  checked(params.tensor_shift);
  checked(params.dualizer);
  return Quantale(params, false);
}

Quantale Quantale::tropical(std::int64_t dualizer) {
  return extended_integers(ZinfParams{0, dualizer, false});
}

Quantale Quantale::arctic(std::int64_t e) {
  return extended_integers(ZinfParams{e, 0, false}).opposite();
}

const Quantale::Table& Quantale::table() const {
  const auto* t = std::get_if<Table>(&backend_);
  if (t == nullptr) throw std::logic_error("extended-integer quantale has no table");
  return *t;
}

const ZinfParams& Quantale::zinf() const {
  const auto* p = zp();
  if (p == nullptr) throw std::logic_error("finite quantale has no closed form");
  return *p;
}

std::vector<Element> Quantale::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

std::vector<Element> Quantale::domain(int window) const {
  if (is_finite()) return elements();
  std::vector<Element> out{Element{kNegInf}};
  for (std::int64_t x = -window; x <= window; ++x) out.push_back(Element{x});
  out.push_back(Element{kPosInf});
  return out;
}

Element Quantale::sample(Rng& rng, int window) const {
  if (is_finite()) return at(rng.below(size()));
  switch (rng.below(8)) {
    case 0:
      return Element{kPosInf};
    case 1:
      return Element{kNegInf};
    default:
      return Element{rng.between(-window, window)};
  }
}

std::vector<Element> Quantale::shrink_candidates(Element a) const {
  std::vector<Element> out;
  if (a != bottom()) out.push_back(bottom());
  if (const auto* p = zp()) {
    (void)p;
    if (!finite(a.raw)) {
      if (a != bottom()) out.push_back(Element{0});
    } else {
      const std::int64_t step = opposite_ ? 1 : -1;
      if (std::abs(a.raw + step) <= kZinfLimit) out.push_back(Element{a.raw + step});
    }
    return out;
  }
  const FiniteLattice& lat = lattice();
  for (const auto& [lo, hi] : lat.covers()) {
    if (hi == index(a) && at(lo) != bottom()) out.push_back(at(lo));
  }
  return out;
}

bool Quantale::contains(Element a) const {
  if (is_finite()) return a.raw >= 0 && static_cast<std::size_t>(a.raw) < size();
  return !finite(a.raw) || (a.raw <= kZinfLimit && a.raw >= -kZinfLimit);
}

void Quantale::require(Element a) const {
  if (!contains(a)) throw Error(ErrorKind::kUnknownElement, "element " + std::to_string(a.raw));
}

bool Quantale::leq(Element a, Element b) const {
  if (zp()) return opposite_ ? b.raw <= a.raw : a.raw <= b.raw;
  return lattice().leq(index(a), index(b));
}

Element Quantale::join(Element a, Element b) const {
  if (zp()) return opposite_ ? std::min(a, b) : std::max(a, b);
  return at(lattice().join(index(a), index(b)));
}

Element Quantale::meet(Element a, Element b) const {
  if (zp()) return opposite_ ? std::max(a, b) : std::min(a, b);
  return at(lattice().meet(index(a), index(b)));
}

Element Quantale::join(std::span<const Element> xs) const {
  Element acc = bottom();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Quantale::meet(std::span<const Element> xs) const {
  Element acc = top();
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

Element Quantale::bottom() const {
  if (zp()) return Element{opposite_ ? kPosInf : kNegInf};
  return at(lattice().bottom());
}

Element Quantale::top() const {
  if (zp()) return Element{opposite_ ? kNegInf : kPosInf};
  return at(lattice().top());
}

Element Quantale::tensor(Element a, Element b) const {
  if (const auto* p = zp()) return Element{opposite_ ? z_par(*p, a.raw, b.raw) : z_tensor(*p, a.raw, b.raw)};
  const Table& t = table();
  return at(t.tensor[index(a) * size() + index(b)]);
}

Element Quantale::unit() const {
  if (const auto* p = zp()) return Element{opposite_ ? p->dualizer : p->tensor_shift};
  return at(table().unit);
}

bool Quantale::has_par() const { return zp() != nullptr || table().par.has_value(); }

Element Quantale::par(Element a, Element b) const {
  if (const auto* p = zp()) return Element{opposite_ ? z_tensor(*p, a.raw, b.raw) : z_par(*p, a.raw, b.raw)};
  const Table& t = table();
  if (!t.par) throw Error(ErrorKind::kNoParStructure, "quantale has no par");
  return at(t.par->table[index(a) * size() + index(b)]);
}

Element Quantale::par_unit() const {
  if (const auto* p = zp()) return Element{opposite_ ? p->tensor_shift : p->dualizer};
  const Table& t = table();
  if (!t.par) throw Error(ErrorKind::kNoParStructure, "quantale has no par");
  return at(t.par->unit);
}

std::optional<Element> Quantale::dualizer() const {
  if (const auto* p = zp()) return Element{opposite_ ? p->tensor_shift : p->dualizer};
  const Table& t = table();
  if (!t.dualizer) return std::nullopt;
  return at(*t.dualizer);
}

Element Quantale::residual_right(Element a, Element b) const {
  if (const auto* p = zp()) {
    return Element{opposite_ ? z_coresidual(*p, a.raw, b.raw) : z_residual(*p, a.raw, b.raw)};
  }
  return at(table().residual_right[index(a) * size() + index(b)]);
}

Element Quantale::residual_left(Element b, Element a) const {
  if (zp()) return residual_right(a, b);  // commutative
  return at(table().residual_left[index(b) * size() + index(a)]);
}

Element Quantale::coresidual_right(Element a, Element b) const {
  if (const auto* p = zp()) {
    return Element{opposite_ ? z_residual(*p, a.raw, b.raw) : z_coresidual(*p, a.raw, b.raw)};
  }
  const Table& t = table();
  if (!t.par) throw Error(ErrorKind::kNoParStructure, "quantale has no par");
  return at(t.coresidual_right[index(a) * size() + index(b)]);
}

Element Quantale::coresidual_left(Element b, Element a) const {
  if (zp()) return coresidual_right(a, b);
  const Table& t = table();
  if (!t.par) throw Error(ErrorKind::kNoParStructure, "quantale has no par");
  return at(t.coresidual_left[index(b) * size() + index(a)]);
}

std::string Quantale::format(Element a) const {
  if (zp()) {
    if (a.raw == kPosInf) return "+inf";
    if (a.raw == kNegInf) return "-inf";
    return std::to_string(a.raw);
  }
  return lattice().name(index(a));
}

Json Quantale::to_json(Element a) const {
  if (zp() && finite(a.raw)) return a.raw;
  return format(a);
}

Element Quantale::parse(std::string_view text) const {
  if (zp()) {
    if (text == "+inf" || text == "inf") return Element{kPosInf};
    if (text == "-inf") return Element{kNegInf};
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorKind::kUnknownElement, "'" + std::string(text) + "' is not an extended integer");
    }
    return Element{checked(v)};
  }
  return at(lattice().index_of(text));
}

Element Quantale::from_json(const Json& value) const {
  if (value.is_string()) return parse(value.get<std::string>());
  if (zp() && value.is_number_integer()) return Element{checked(value.get<std::int64_t>())};
  throw Error(ErrorKind::kUnknownElement, "expected an element, got " + value.dump());
}

Quantale Quantale::opposite() const {
  if (const auto* p = zp()) return Quantale(*p, !opposite_);
  const Table& t = table();
  if (!t.par) throw Error(ErrorKind::kNoParStructure, "opposite needs a par");
  std::optional<std::size_t> d;
  if (t.dualizer) d = t.unit;
  return from_table(t.lattice.opposite(), t.par->table, t.par->unit, ParTable{t.tensor, t.unit}, d);
}

Quantale Quantale::with_dualizer(std::optional<Element> d) const {
  if (const auto* p = zp()) {
    if (!d || !finite(d->raw)) throw Error(ErrorKind::kNotGirard, "extended-integer dualizer must be finite");
    ZinfParams next = *p;
    (opposite_ ? next.tensor_shift : next.dualizer) = checked(d->raw);
    return Quantale(next, opposite_);
  }
  if (d) require(*d);
  Quantale q = *this;
  std::get<Table>(q.backend_).dualizer = d ? std::optional<std::size_t>(index(*d)) : std::nullopt;
  return q;
}

Quantale Quantale::with_par(std::optional<ParTable> par) const {
  if (zp()) throw Error(ErrorKind::kShapeMismatch, "the extended-integer par is fixed by its parameters");
  const Table& t = table();
  return from_table(t.lattice, t.tensor, t.unit, std::move(par), t.dualizer);
}

bool operator==(const Quantale& a, const Quantale& b) {
  if (a.opposite_ != b.opposite_) return false;
  if (a.zp() || b.zp()) return a.zp() && b.zp() && *a.zp() == *b.zp();
  const auto& x = a.table();
  const auto& y = b.table();
  auto same_par = [](const std::optional<ParTable>& p, const std::optional<ParTable>& q) {
    if (p.has_value() != q.has_value()) return false;
    return !p || (p->table == q->table && p->unit == q->unit);
  };
  return x.lattice == y.lattice && x.tensor == y.tensor && x.unit == y.unit &&
         same_par(x.par, y.par) && x.dualizer == y.dualizer;
}

std::vector<Counterexample<QuantaleModel>> QuantaleModel::shrink(
    std::span<const Slot>, const std::vector<Object>& objects, const std::vector<Cell>& cells) const {
  std::vector<Counterexample<QuantaleModel>> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Element lower : q_->shrink_candidates(cells[i])) {
      if (std::find(domain_.begin(), domain_.end(), lower) == domain_.end()) continue;
      auto next = cells;
      next[i] = lower;
      out.push_back({objects, std::move(next)});
    }
  }
  return out;
}

LawReport check_quantale_laws(const Quantale& q, std::optional<std::vector<Element>> domain,
                              const Sampler& sampler) {
  const QuantaleModel model(q, domain ? std::move(*domain) : q.domain(sampler.window));
  const auto laws = tensor_laws<QuantaleModel>();
  return run_suite<QuantaleModel>("quantale", model, laws, sampler);
}

LawReport check_ld_laws(const Quantale& q, std::optional<std::vector<Element>> domain,
                        const Sampler& sampler) {
  if (!q.has_par()) throw Error(ErrorKind::kNoParStructure, "LD check needs a par");
  const QuantaleModel model(q, domain ? std::move(*domain) : q.domain(sampler.window));
  const auto laws = linear_quantaloid_laws<QuantaleModel>(true);
  return run_suite<QuantaleModel>("ld-quantale", model, laws, sampler);
}

std::vector<Law<QuantaleModel>> girard_quantale_laws(Element d) {
  using O = std::span<const int>;
  using C = std::span<const Element>;
  return {
      {"girard.cyclic", 1, {{0, 0, "a"}},
       [d](const QuantaleModel& m, O, C c) {
         return m.quantale().residual_left(d, c[0]) == m.quantale().residual_right(c[0], d);
       }},
      {"girard.dualizing", 1, {{0, 0, "a"}},
       [d](const QuantaleModel& m, O, C c) {
         const Quantale& g = m.quantale();
         return g.residual_right(g.residual_right(c[0], d), d) == c[0];
       }},
  };
}

LawReport check_girard_laws(const Quantale& q, Element d, std::optional<std::vector<Element>> domain) {
  q.require(d);
  const QuantaleModel model(q, domain ? std::move(*domain) : q.domain());
  const auto laws = girard_quantale_laws(d);
  return run_suite<QuantaleModel>("girard", model, laws, Sampler::exhaustive());
}

bool is_cyclic_dualizing(const Quantale& q, Element d, std::optional<std::vector<Element>> domain) {
  return check_girard_laws(q, d, std::move(domain)).passed();
}

std::vector<Element> find_dualizers(const Quantale& q, int window) {
  std::vector<Element> out;
  const auto dom = q.domain(window);
  for (Element d : dom) {
    if (is_cyclic_dualizing(q, d, dom)) out.push_back(d);
  }
  return out;
}

Quantale make_girard(const Quantale& q, Element d) {
  if (!is_cyclic_dualizing(q, d)) {
    throw Error(ErrorKind::kNotGirard, q.format(d) + " is not a cyclic dualizing element");
  }
  return q.with_dualizer(d);
}

Element girard_neg(const Quantale& g, Element a) {
  const auto d = g.dualizer();
  if (!d) throw Error(ErrorKind::kNotGirard, "quantale has no dualizer");
  return g.residual_right(a, *d);
}

Element girard_par(const Quantale& g, Element a, Element b) {
  return girard_neg(g, g.tensor(girard_neg(g, b), girard_neg(g, a)));
}

Quantale girard_to_ld(const Quantale& g) {
  const auto d = g.dualizer();
  if (!d) throw Error(ErrorKind::kNotGirard, "quantale has no dualizer");
  if (!g.is_finite()) {
    ZinfParams p = g.zinf();
    p.absorbing_bottom_par = false;
    p.absorbing_top_tensor = false;
    Quantale out = Quantale::extended_integers(p);
    return g.is_opposite_view() ? out.opposite() : out;
  }
  const std::size_t n = g.size();
  ParTable par{std::vector<std::size_t>(n * n), index(*d)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) par.table[a * n + b] = index(girard_par(g, at(a), at(b)));
  return g.with_par(std::move(par));
}

Quantale opposite_quantale(const Quantale& ld) { return ld.opposite(); }

MonoidTable cyclic_monoid(std::vector<std::string> names) {
  const std::size_t n = names.size();
  MonoidTable m{std::move(names), std::vector<std::size_t>(n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.table[i * n + j] = (i + j) % n;
  return m;
}

Quantale shift_completion(const MonoidTable& monoid, std::string_view shift) {
  const std::size_t n = monoid.elements.size();
  if (n == 0) throw Error(ErrorKind::kInvalidMonoid, "monoid is empty");
  if (monoid.table.size() != n * n) throw Error(ErrorKind::kInvalidMonoid, "table is not n*n");
  for (std::size_t v : monoid.table)
    if (v >= n) throw Error(ErrorKind::kInvalidMonoid, "table entry out of range");
  auto op = [&](std::size_t a, std::size_t b) { return monoid.table[a * n + b]; };
  const auto& name = monoid.elements;

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::kInvalidMonoid, "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) {
          throw Error(ErrorKind::kInvalidMonoid,
                      "not associative at (" + name[a] + ", " + name[b] + ", " + name[c] + ")");
        }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (op(a, b) != op(b, a)) {
        throw Error(ErrorKind::kNotCommutative, "(" + name[a] + ", " + name[b] + ")");
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (op(a, b) == op(a, c)) {
          throw Error(ErrorKind::kNotCancellative,
                      name[a] + " + " + name[b] + " = " + name[a] + " + " + name[c]);
        }
  const auto it = std::find(name.begin(), name.end(), shift);
  if (it == name.end()) throw Error(ErrorKind::kUnknownElement, "shift '" + std::string(shift) + "'");
  const std::size_t s = static_cast<std::size_t>(it - name.begin());
  std::optional<std::size_t> inverse;
  for (std::size_t b = 0; b < n && !inverse; ++b)
    if (op(s, b) == *identity) inverse = b;
  if (!inverse) throw Error(ErrorKind::kShiftNotInvertible, std::string(shift));

  // Carrier: 0 = bottom, 1..n = M, n+1 = top.
  std::vector<std::string> names{"bottom"};
  names.insert(names.end(), name.begin(), name.end());
  names.emplace_back("top");
  const std::size_t bot = 0;
  const std::size_t top = n + 1;
  std::vector<FiniteLattice::Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    covers.emplace_back("bottom", name[i]);
    covers.emplace_back(name[i], "top");
  }
  FiniteLattice lattice = FiniteLattice::build(std::move(names), covers);

  const std::size_t m = n + 2;
  std::vector<std::size_t> tensor(m * m);
  ParTable par{std::vector<std::size_t>(m * m), s + 1};
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t t;
      std::size_t p;
      if (x == bot || y == bot) {
        t = bot;
      } else if (x == top || y == top) {
        t = top;
      } else {
        t = op(x - 1, y - 1) + 1;
      }
      if (x == top || y == top) {
        p = top;
      } else if (x == bot || y == bot) {
        p = bot;
      } else {
        p = op(op(x - 1, y - 1), *inverse) + 1;
      }
      tensor[x * m + y] = t;
      par.table[x * m + y] = p;
    }
  }
  return Quantale::from_table(std::move(lattice), std::move(tensor), *identity + 1, std::move(par));
}

}  // namespace linbicat
