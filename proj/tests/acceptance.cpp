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
// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "linbicat/catalog.hpp"
#include "linbicat/json_io.hpp"
#include "linbicat/oracles.hpp"
#include "linbicat/qrel.hpp"
#include "linbicat/quantale.hpp"
#include "linbicat/sampler.hpp"
#include "linbicat/theorem.hpp"
#include "linbicat/verify.hpp"

using namespace linbicat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (!ok) return;
    ok = false;
    detail = what;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

oracle::BoolMatrix to_bool(const QRelation& r) {
  oracle::BoolMatrix m(r.rows(), std::vector<bool>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m[i][j] = r(i, j).raw == 1;
  return m;
}

oracle::ExtInt to_ext(Element e) {
  if (e.raw == kPosInf) return oracle::ExtInt::plus_inf();
  if (e.raw == kNegInf) return oracle::ExtInt::minus_inf();
  return oracle::ExtInt::of(e.raw);
}

oracle::ExtMatrix to_ext(const QRelation& r) {
  oracle::ExtMatrix m(r.rows(), std::vector<oracle::ExtInt>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m[i][j] = to_ext(r(i, j));
  return m;
}

std::string show(Element e) { return oracle::to_string(to_ext(e)); }

std::string first_failure(const LawReport& r) {
  const LawEntry* e = r.first_failure();
  if (e == nullptr) return "no failing law";
  return e->law + " " + (e->witness ? e->witness->dump() : std::string());
}

bool entry_passed(const LawReport& r, std::string_view law) {
  const LawEntry* e = r.find(law);
  return e != nullptr && e->passed;
}

bool entry_failed(const LawReport& r, std::string_view law) {
  const LawEntry* e = r.find(law);
  return e != nullptr && !e->passed && e->witness.has_value();
}

Outcome boolean_oracle() {
  Outcome out;
  const Quantale b = boolean_quantale();
  const auto sets = standard_sets(3, 0);
  std::size_t pairs = 0;
  for (const auto& x : sets)
    for (const auto& y : sets)
      for (const auto& z : sets) {
        const auto fs = enumerate_relations(b, x, y);
        const auto gs = enumerate_relations(b, y, z);
        std::vector<oracle::BoolMatrix> bgs;
        for (const auto& g : gs) bgs.push_back(to_bool(g));
        for (const auto& f : fs) {
          const auto bf = to_bool(f);
          for (std::size_t k = 0; k < gs.size(); ++k) {
            const auto& g = gs[k];
            ++pairs;
            if (to_bool(compose_tensor(f, g)) !=
                oracle::bool_compose(bf, bgs[k], y.size(), z.size(), oracle::Quantifier::kExists))
              out.fail("tensor differs at " + relation_to_json(f).dump() + " ; " + relation_to_json(g).dump());
            if (to_bool(compose_par(f, g)) !=
                oracle::bool_compose(bf, bgs[k], y.size(), z.size(), oracle::Quantifier::kForall))
              out.fail("par differs at " + relation_to_json(f).dump() + " ; " + relation_to_json(g).dump());
          }
        }
      }
  if (out.ok) out.detail = std::to_string(pairs) + " composable pairs, sets of size 0..3";
  return out;
}

Outcome zinf_oracle() {
  Outcome out;
  const Quantale t = Quantale::tropical();
  const auto three = numbered_set("X", 3);
  Rng rng(derive_seed(0, "acceptance.zinf"));
  std::size_t mixed = 0;
  for (int i = 0; i < 500; ++i) {
    const QRelation f = sample_relation(t, three, three, rng, 10);
    const QRelation g = sample_relation(t, three, three, rng, 10);
    bool plus = false;
    bool minus = false;
    for (const auto* r : {&f, &g})
      for (Element e : r->values()) {
        plus |= e.raw == kPosInf;
        minus |= e.raw == kNegInf;
      }
    mixed += plus && minus;
    out.require(to_ext(compose_tensor(f, g)) == oracle::maxplus(to_ext(f), to_ext(g), 3, 3),
                "max-plus differs at instance " + std::to_string(i));
    out.require(to_ext(compose_par(f, g)) == oracle::minplus(to_ext(f), to_ext(g), 3, 3),
                "min-plus differs at instance " + std::to_string(i));
  }
  out.require(mixed > 0, "no instance mixes both infinities");
  if (out.ok) out.detail = "500 instances, " + std::to_string(mixed) + " with both infinities";
  return out;
}

std::vector<Element> zinf_range(int lo, int hi) {
  std::vector<Element> xs{Element{kNegInf}};
  for (int v = lo; v <= hi; ++v) xs.push_back(Element{v});
  xs.push_back(Element{kPosInf});
  return xs;
}

Outcome residuals() {
  Outcome out;
  std::size_t finite = 0;
  std::size_t infinite = 0;
  for (const auto& entry : catalog()) {
    const Quantale& q = entry.quantale;
    if (q.is_finite()) {
      if (q.size() > 6) continue;
      ++finite;
      const auto xs = q.elements();
      for (Element a : xs)
        for (Element b : xs)
          for (Element c : xs) {
            const bool below = q.leq(q.tensor(a, b), c);
            out.require(below == q.leq(b, q.residual_right(a, c)),
                        entry.name + ": right residual adjunction");
            out.require(below == q.leq(a, q.residual_left(c, b)),
                        entry.name + ": left residual adjunction");
          }
      continue;
    }
    // Residuals of arguments in [-10,10] lie in [-20,20] or at an infinity.
    ++infinite;
    const auto args = zinf_range(-10, 10);
    const auto candidates = zinf_range(-20, 20);
    for (Element a : args)
      for (Element b : args) {
        Element right = q.bottom();
        Element left = q.bottom();
        for (Element c : candidates) {
          if (q.leq(q.tensor(a, c), b)) right = q.join(right, c);
          if (q.leq(q.tensor(c, a), b)) left = q.join(left, c);
        }
        if (q.residual_right(a, b) != right)
          out.fail(entry.name + ": " + show(a) + " -o " + show(b) + " is " +
                   show(q.residual_right(a, b)) + ", brute force " + show(right));
        if (q.residual_left(b, a) != left)
          out.fail(entry.name + ": " + show(b) + " o- " + show(a) + " is " +
                   show(q.residual_left(b, a)) + ", brute force " + show(left));
      }
  }
  if (out.ok)
    out.detail = std::to_string(finite) + " finite entries, " + std::to_string(infinite) +
                 " extended-integer entries";
  return out;
}

Outcome dualizers() {
  Outcome out;
  out.require(find_dualizers(boolean_quantale()) == std::vector<Element>{at(0)},
              "boolean dualizers are not {0}");
  out.require(find_dualizers(three_chain_frame()).empty(), "three-chain has a dualizer");
  const Quantale t = Quantale::tropical();
  out.require(is_cyclic_dualizing(t, Element{0}), "0 is not cyclic dualizing on Z-infinity");
  const Element p = girard_par(t, Element{kNegInf}, Element{kPosInf});
  out.require(p.raw == kPosInf, "-inf par +inf is " + show(p));
  if (out.ok) out.detail = "boolean {0}, three-chain none, Z-infinity 0, -inf par +inf = +inf";
  return out;
}

Outcome ldq_catalog() {
  Outcome out;
  TheoremConfig cfg;
  cfg.max_set = 2;
  for (const auto& entry : catalog()) {
    const LawReport r = run_theorem("LDQ", entry.name, cfg);
    out.require(theorem_holds(r), entry.name + ": " + first_failure(r));
  }
  if (out.ok) out.detail = std::to_string(catalog().size()) + " entries";
  return out;
}

Outcome girard_qrel() {
  Outcome out;
  const auto sets = standard_sets(2);
  const LawReport b = check_girard_qrel(boolean_quantale(), sets, Sampler::exhaustive());
  const LawReport t = check_girard_qrel(Quantale::tropical(), sets, Sampler::random(0, 200));
  for (const auto* r : {&b, &t})
    for (const char* law : {"girard.cyclic", "girard.dualizing"}) {
      out.require(entry_passed(*r, law), std::string(law) + ": " + first_failure(*r));
      if (const LawEntry* e = r->find(law); e != nullptr && r == &t)
        out.require(e->mode.find("count=200") != std::string::npos, "Z-infinity mode " + e->mode);
    }
  if (out.ok) out.detail = "boolean exhaustive over sets 1..2, Z-infinity 200 seeded draws";
  return out;
}

Outcome linear_adjoints() {
  Outcome out;
  const auto sets = standard_sets(2);
  std::size_t checked = 0;
  for (const auto& entry : catalog()) {
    if (entry.broken) continue;
    const Classification c = classify(entry.quantale);
    for (Element d : c.dualizers) {
      const Quantale g = girard_to_ld(make_girard(entry.quantale, d));
      if (g.is_finite()) {
        for (const auto& x : sets)
          for (const auto& y : sets)
            for (const auto& r : enumerate_relations(g, x, y)) {
              ++checked;
              if (!check_linear_adjoint(r, rel_dual(r, d)))
                out.fail(entry.name + " d=" + show(d) + ": " + relation_to_json(r).dump());
            }
        continue;
      }
      Rng rng(derive_seed(0, "acceptance.linadj." + entry.name + "." + show(d)));
      for (int i = 0; i < 200; ++i) {
        const auto& x = sets[rng.below(sets.size())];
        const auto& y = sets[rng.below(sets.size())];
        const QRelation r = sample_relation(g, x, y, rng, 10);
        ++checked;
        if (!check_linear_adjoint(r, rel_dual(r, d)))
          out.fail(entry.name + " d=" + show(d) + ": " + relation_to_json(r).dump());
      }
    }
  }
  const Quantale chain = three_chain_frame();
  const auto one = numbered_set("X", 1);
  bool orphan = false;
  for (const auto& r : enumerate_relations(chain, one, one)) orphan |= find_linear_adjoints(r).empty();
  out.require(orphan, "every 1x1 three-chain relation has a linear adjoint");
  if (out.ok)
    out.detail = std::to_string(checked) + " relations paired with their duals; three-chain 1x1 orphan found";
  return out;
}

Outcome module_theorems() {
  Outcome out;
  TheoremConfig cfg;
  std::size_t girard_runs = 0;
  std::size_t linear_runs = 0;
  for (const auto& entry : catalog()) {
    if (!entry.quantale.is_finite()) continue;
    if (!entry.broken) {
      for (Element d : classify(entry.quantale).dualizers) {
        cfg.dualizer = d;
        for (const char* id : {"GirardQMod", "GirardMonQ"}) {
          const LawReport r = run_theorem(id, entry.quantale, cfg);
          ++girard_runs;
          out.require(theorem_holds(r) && entry_passed(r, "theorem.lifted"),
                      entry.name + " " + id + " d=" + show(d) + ": " + first_failure(r));
        }
      }
      cfg.dualizer.reset();
    }
    const bool ld = classify(entry.quantale).ld;
    for (const char* id : {"LinearQMod", "LinearMonQ"}) {
      const LawReport r = run_theorem(id, entry.quantale, cfg);
      ++linear_runs;
      const std::string where = entry.name + " " + id;
      out.require(theorem_holds(r), where + " does not hold");
      if (ld) {
        out.require(entry_passed(r, "theorem.lifted"), where + ": lift fails over an LD base");
        continue;
      }
      out.require(entry_failed(r, "theorem.base") && entry_failed(r, "theorem.lifted"),
                  where + ": broken base does not fail on both sides");
      const LawEntry* back = r.find("theorem.backward");
      const bool transferred = back != nullptr && back->passed && back->witness &&
                               back->witness->contains("transfers") &&
                               !(*back->witness)["transfers"].empty();
      out.require(transferred, where + ": no transferred witness");
    }
  }
  if (out.ok)
    out.detail = std::to_string(girard_runs) + " Girard-family runs, " + std::to_string(linear_runs) +
                 " linear runs over finite entries";
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::vector<std::function<LawReport()>> runs = {
      [] { return check_girard_qrel(Quantale::tropical(), standard_sets(2), Sampler::random(42, 200)); },
      [] {
        TheoremConfig cfg;
        cfg.sampler = Sampler::random(7, 100);
        return run_theorem("LDQ", "zinf-arctic", cfg);
      },
      [] {
        TheoremConfig cfg;
        cfg.sampler = Sampler::random(3, 50);
        return run_theorem("LinearQMod", "broken-diamond", cfg);
      },
  };
  for (const auto& run : runs) {
    const std::string first = run().to_json().dump(2);
    const std::string second = run().to_json().dump(2);
    out.require(first == second, "reports differ for suite " + run().suite());
  }
  if (out.ok) out.detail = std::to_string(runs.size()) + " seeded suites repeated";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 means untimed
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "boolean compositions match the exists/forall oracle", 10, boolean_oracle},
      {2, "Z-infinity compositions match max-plus/min-plus", 5, zinf_oracle},
      {3, "residual adjunction and Z-infinity closed form", 5, residuals},
      {4, "dualizer search and Z-infinity par", 0, dualizers},
      {5, "LD equivalence over the catalog", 60, ldq_catalog},
      {6, "Girard Q-Rel cyclicity and involution", 0, girard_qrel},
      {7, "linear adjoints from duals", 0, linear_adjoints},
      {8, "module and monad theorems", 120, module_theorems},
      {9, "seeded reports are byte-identical", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
    if (c.limit_s > 0) {
      timing += " / " + std::to_string(static_cast<int>(c.limit_s)) + " s";
      if (secs >= c.limit_s && out.ok) out = {false, "over time limit"};
    }
    failed += !out.ok;
    std::printf("%s %d %s (%s): %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, timing.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
