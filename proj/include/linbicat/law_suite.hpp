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

#ifndef LINBICAT_LAW_SUITE_HPP
#define LINBICAT_LAW_SUITE_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linbicat/report.hpp"
#include "linbicat/sampler.hpp"

namespace linbicat {

/// A source of 1-cells between objects: enough to enumerate or sample test
/// tuples and to print witnesses.
template <class M>
concept CellModel = requires(const M& m, const typename M::Object& o,
                             const typename M::Cell& c, Rng& rng, std::size_t cap) {
  { m.objects() } -> std::convertible_to<std::vector<typename M::Object>>;
  { m.enumerate(o, o, cap) } -> std::same_as<std::optional<std::vector<typename M::Cell>>>;
  { m.sample(o, o, rng) } -> std::same_as<typename M::Cell>;
  { m.describe(c) } -> std::same_as<Json>;
  { m.describe_object(o) } -> std::same_as<Json>;
};

/// A locally posetal structure with both compositions, identities for each,
/// and the pointwise lattice operations on hom-sets. Composition is
/// diagrammatic: tensor(f, g) is "f then g".
template <class M>
concept LinearModel =
    CellModel<M> && requires(const M& m, const typename M::Object& o, const typename M::Cell& c) {
      { m.tensor(c, c) } -> std::same_as<typename M::Cell>;
      { m.par(c, c) } -> std::same_as<typename M::Cell>;
      { m.top_id(o) } -> std::same_as<typename M::Cell>;
      { m.bot_id(o) } -> std::same_as<typename M::Cell>;
      { m.bottom(o, o) } -> std::same_as<typename M::Cell>;
      { m.top(o, o) } -> std::same_as<typename M::Cell>;
      { m.join(c, c) } -> std::same_as<typename M::Cell>;
      { m.meet(c, c) } -> std::same_as<typename M::Cell>;
      { m.leq(c, c) } -> std::same_as<bool>;
      { m.equal(c, c) } -> std::same_as<bool>;
    };

/// A cell position in a law: the cell runs from chain object `from` to chain
/// object `to`.
struct Slot {
  std::size_t from;
  std::size_t to;
  std::string_view name;
};

template <class M>
struct Law {
  using Object = typename M::Object;
  using Cell = typename M::Cell;
  using Predicate = std::function<bool(const M&, std::span<const Object>, std::span<const Cell>)>;

  std::string_view id;
  std::size_t chain = 2;
  std::vector<Slot> slots;
  Predicate holds;
};

template <class M>
struct Counterexample {
  std::vector<typename M::Object> objects;
  std::vector<typename M::Cell> cells;
};

template <class M>
struct LawOutcome {
  std::optional<Counterexample<M>> counterexample;
  std::string mode;
};

namespace detail {

inline std::vector<std::size_t> decode_chain(std::size_t code, std::size_t base, std::size_t len) {
  std::vector<std::size_t> digits(len);
  for (std::size_t i = len; i-- > 0;) {
    digits[i] = code % base;
    code /= base;
  }
  return digits;
}

template <class M>
void shrink(const M& model, const Law<M>& law, Counterexample<M>& cex) {
  if constexpr (requires { model.shrink(law.slots, cex.objects, cex.cells); }) {
    for (int step = 0; step < 10000; ++step) {
      bool progressed = false;
      for (auto& cand : model.shrink(law.slots, cex.objects, cex.cells)) {
        if (!law.holds(model, cand.objects, cand.cells)) {
          cex = std::move(cand);
          progressed = true;
          break;
        }
      }
      if (!progressed) return;
    }
  }
}

}  // namespace detail

/// Searches for a violation of `law`. Exhaustive search visits chains and
/// tuples in lexicographic order (declaration order of objects and of
/// enumerated cells), so the first counterexample is deterministic.
template <CellModel M>
LawOutcome<M> check_law(const M& model, const Law<M>& law, const Sampler& sampler) {
  using Object = typename M::Object;
  using Cell = typename M::Cell;
  LawOutcome<M> out;
  const std::vector<Object> objects = model.objects();
  const std::size_t k = objects.size();
  if (k == 0) {
    out.mode = "exhaustive";
    return out;
  }
  std::size_t chains = 1;
  for (std::size_t i = 0; i < law.chain; ++i) chains *= k;

  auto objects_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Object> objs;
    objs.reserve(idx.size());
    for (std::size_t i : idx) objs.push_back(objects[i]);
    return objs;
  };
  auto report = [&](std::vector<Object> objs, std::vector<Cell> cells) {
    Counterexample<M> cex{std::move(objs), std::move(cells)};
    detail::shrink(model, law, cex);
    out.counterexample = std::move(cex);
  };

  std::vector<std::size_t> pending;
  bool exhaustive_used = false;
  if (sampler.mode == Sampler::Mode::kExhaustive) {
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::vector<Cell>>> cache;
    for (std::size_t code = 0; code < chains; ++code) {
      const auto idx = detail::decode_chain(code, k, law.chain);
      std::vector<const std::vector<Cell>*> lists;
      std::size_t product = 1;
      bool feasible = true;
      for (const Slot& s : law.slots) {
        const auto key = std::make_pair(idx[s.from], idx[s.to]);
        auto it = cache.find(key);
        if (it == cache.end()) {
          it = cache.emplace(key, model.enumerate(objects[key.first], objects[key.second],
                                                  sampler.slot_cap)).first;
        }
        if (!it->second) {
          feasible = false;
          break;
        }
        lists.push_back(&*it->second);
        product *= std::max<std::size_t>(it->second->size(), 1);
        if (it->second->empty()) product = 0;
        if (product > sampler.tuple_cap) {
          feasible = false;
          break;
        }
      }
      if (!feasible) {
        pending.push_back(code);
        continue;
      }
      exhaustive_used = true;
      const std::vector<Object> objs = objects_of(idx);
      std::vector<Cell> cells;
      for (std::size_t t = 0; t < product; ++t) {
        cells.clear();
        std::size_t rest = t;
        std::vector<std::size_t> digit(lists.size());
        for (std::size_t s = lists.size(); s-- > 0;) {
          digit[s] = rest % lists[s]->size();
          rest /= lists[s]->size();
        }
        for (std::size_t s = 0; s < lists.size(); ++s) cells.push_back((*lists[s])[digit[s]]);
        if (!law.holds(model, objs, cells)) {
          out.mode = "exhaustive";
          report(objs, cells);
          return out;
        }
      }
    }
  } else {
    pending.resize(chains);
    for (std::size_t c = 0; c < chains; ++c) pending[c] = c;
  }

  if (pending.empty()) {
    out.mode = "exhaustive";
    return out;
  }
  const std::size_t draws =
      sampler.mode == Sampler::Mode::kRandom ? sampler.count : sampler.fallback_count;
  const std::string label = sampler.random_label(draws);
  out.mode = exhaustive_used ? "exhaustive+" + label : label;
  Rng rng(derive_seed(sampler.seed, law.id));
  std::vector<Cell> cells;
  for (std::size_t d = 0; d < draws; ++d) {
    const auto idx = detail::decode_chain(pending[rng.below(pending.size())], k, law.chain);
    const std::vector<Object> objs = objects_of(idx);
    cells.clear();
    for (const Slot& s : law.slots) cells.push_back(model.sample(objs[s.from], objs[s.to], rng));
    if (!law.holds(model, objs, cells)) {
      report(objs, cells);
      return out;
    }
  }
  return out;
}

template <CellModel M>
Json witness_json(const M& model, const Law<M>& law, const Counterexample<M>& cex) {
  Json w;
  Json objs = Json::array();
  for (const auto& o : cex.objects) objs.push_back(model.describe_object(o));
  w["objects"] = std::move(objs);
  for (std::size_t s = 0; s < law.slots.size(); ++s) {
    w[std::string(law.slots[s].name)] = model.describe(cex.cells[s]);
  }
  return w;
}

template <CellModel M>
LawReport run_suite(std::string suite, const M& model, std::span<const Law<M>> laws,
                    const Sampler& sampler) {
  LawReport report(std::move(suite));
  for (const auto& law : laws) {
    auto outcome = check_law(model, law, sampler);
    if (outcome.counterexample) {
      report.fail(std::string(law.id), witness_json(model, law, *outcome.counterexample),
                  outcome.mode);
    } else {
      report.pass(std::string(law.id), outcome.mode);
    }
  }
  return report;
}

/// Evaluates `law` on an explicit tuple; true when the law holds there.
template <CellModel M>
bool law_holds_at(const M& model, const Law<M>& law, std::span<const typename M::Object> objects,
                  std::span<const typename M::Cell> cells) {
  return law.holds(model, objects, cells);
}

// ---------------------------------------------------------------------------
// The standard law lists. Slot names are f, g, h in composition order.

template <LinearModel M>
std::vector<Law<M>> tensor_laws() {
  using O = std::span<const typename M::Object>;
  using C = std::span<const typename M::Cell>;
  return {
      {"tensor.assoc", 4, {{0, 1, "f"}, {1, 2, "g"}, {2, 3, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.tensor(m.tensor(c[0], c[1]), c[2]), m.tensor(c[0], m.tensor(c[1], c[2])));
       }},
      {"tensor.unit.left", 2, {{0, 1, "f"}},
       [](const M& m, O o, C c) { return m.equal(m.tensor(m.top_id(o[0]), c[0]), c[0]); }},
      {"tensor.unit.right", 2, {{0, 1, "f"}},
       [](const M& m, O o, C c) { return m.equal(m.tensor(c[0], m.top_id(o[1])), c[0]); }},
      {"tensor.join.left", 3, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.tensor(m.join(c[0], c[1]), c[2]),
                        m.join(m.tensor(c[0], c[2]), m.tensor(c[1], c[2])));
       }},
      {"tensor.join.right", 3, {{0, 1, "f"}, {1, 2, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.tensor(c[0], m.join(c[1], c[2])),
                        m.join(m.tensor(c[0], c[1]), m.tensor(c[0], c[2])));
       }},
      {"tensor.bottom.left", 3, {{1, 2, "f"}},
       [](const M& m, O o, C c) {
         return m.equal(m.tensor(m.bottom(o[0], o[1]), c[0]), m.bottom(o[0], o[2]));
       }},
      {"tensor.bottom.right", 3, {{0, 1, "f"}},
       [](const M& m, O o, C c) {
         return m.equal(m.tensor(c[0], m.bottom(o[1], o[2])), m.bottom(o[0], o[2]));
       }},
      {"tensor.monotone.left", 3, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.tensor(c[0], c[2]), m.tensor(m.join(c[0], c[1]), c[2]));
       }},
      {"tensor.monotone.right", 3, {{0, 1, "f"}, {1, 2, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.tensor(c[0], c[1]), m.tensor(c[0], m.join(c[1], c[2])));
       }},
  };
}

template <LinearModel M>
std::vector<Law<M>> par_laws() {
  using O = std::span<const typename M::Object>;
  using C = std::span<const typename M::Cell>;
  return {
      {"par.assoc", 4, {{0, 1, "f"}, {1, 2, "g"}, {2, 3, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.par(m.par(c[0], c[1]), c[2]), m.par(c[0], m.par(c[1], c[2])));
       }},
      {"par.unit.left", 2, {{0, 1, "f"}},
       [](const M& m, O o, C c) { return m.equal(m.par(m.bot_id(o[0]), c[0]), c[0]); }},
      {"par.unit.right", 2, {{0, 1, "f"}},
       [](const M& m, O o, C c) { return m.equal(m.par(c[0], m.bot_id(o[1])), c[0]); }},
      {"par.meet.left", 3, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.par(m.meet(c[0], c[1]), c[2]),
                        m.meet(m.par(c[0], c[2]), m.par(c[1], c[2])));
       }},
      {"par.meet.right", 3, {{0, 1, "f"}, {1, 2, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.equal(m.par(c[0], m.meet(c[1], c[2])),
                        m.meet(m.par(c[0], c[1]), m.par(c[0], c[2])));
       }},
      {"par.top.left", 3, {{1, 2, "f"}},
       [](const M& m, O o, C c) {
         return m.equal(m.par(m.top(o[0], o[1]), c[0]), m.top(o[0], o[2]));
       }},
      {"par.top.right", 3, {{0, 1, "f"}},
       [](const M& m, O o, C c) {
         return m.equal(m.par(c[0], m.top(o[1], o[2])), m.top(o[0], o[2]));
       }},
      {"par.monotone.left", 3, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.par(m.meet(c[0], c[1]), c[2]), m.par(c[0], c[2]));
       }},
      {"par.monotone.right", 3, {{0, 1, "f"}, {1, 2, "g"}, {1, 2, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.par(c[0], m.meet(c[1], c[2])), m.par(c[0], c[1]));
       }},
  };
}

template <LinearModel M>
std::vector<Law<M>> distribution_laws() {
  using O = std::span<const typename M::Object>;
  using C = std::span<const typename M::Cell>;
  return {
      {"dist.left", 4, {{0, 1, "f"}, {1, 2, "g"}, {2, 3, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.tensor(c[0], m.par(c[1], c[2])), m.par(m.tensor(c[0], c[1]), c[2]));
       }},
      {"dist.right", 4, {{0, 1, "f"}, {1, 2, "g"}, {2, 3, "h"}},
       [](const M& m, O, C c) {
         return m.leq(m.tensor(m.par(c[0], c[1]), c[2]), m.par(c[0], m.tensor(c[1], c[2])));
       }},
  };
}

/// Tensor laws, and when `with_par` also the par laws and both linear
/// distributions: the full linear-quantaloid suite.
template <LinearModel M>
std::vector<Law<M>> linear_quantaloid_laws(bool with_par) {
  auto laws = tensor_laws<M>();
  if (with_par) {
    for (auto& l : par_laws<M>()) laws.push_back(std::move(l));
    for (auto& l : distribution_laws<M>()) laws.push_back(std::move(l));
  }
  return laws;
}

template <LinearModel M>
const Law<M>* find_law_in(std::span<const Law<M>> laws, std::string_view id) {
  for (const auto& l : laws)
    if (l.id == id) return &l;
  return nullptr;
}

}  // namespace linbicat

#endif  // LINBICAT_LAW_SUITE_HPP
