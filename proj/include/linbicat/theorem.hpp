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

#ifndef LINBICAT_THEOREM_HPP
#define LINBICAT_THEOREM_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linbicat/law_suite.hpp"
#include "linbicat/report.hpp"

namespace linbicat {

namespace detail {

template <CellModel B>
struct BaseRun {
  LawReport report{"base"};
  std::vector<std::pair<const Law<B>*, Counterexample<B>>> failures;
};

template <CellModel B>
BaseRun<B> run_base(const B& base, std::span<const Law<B>> laws, const Sampler& sampler) {
  BaseRun<B> run;
  for (const auto& law : laws) {
    auto outcome = check_law(base, law, sampler);
    if (outcome.counterexample) {
      run.report.fail(std::string(law.id), witness_json(base, law, *outcome.counterexample),
                      outcome.mode);
      run.failures.emplace_back(&law, std::move(*outcome.counterexample));
    } else {
      run.report.pass(std::string(law.id), outcome.mode);
    }
  }
  return run;
}

/// Scoped side reports plus theorem.base, theorem.lifted, theorem.forward.
inline LawReport forward_report(std::string suite, const LawReport& base_report,
                                const LawReport& lifted_report) {
  LawReport report(std::move(suite));
  report.absorb(base_report, "base");
  report.absorb(lifted_report, "lifted");
  auto side = [&](const char* id, const LawReport& r) {
    if (const LawEntry* bad = r.first_failure()) {
      report.fail(id, Json{{"law", bad->law}, {"witness", *bad->witness}}, bad->mode);
    } else {
      report.pass(id, "exhaustive");
    }
  };
  side("theorem.base", base_report);
  side("theorem.lifted", lifted_report);
  const LawEntry* lifted_bad = lifted_report.first_failure();
  if (base_report.passed() && lifted_bad) {
    report.fail("theorem.forward", Json{{"law", lifted_bad->law}, {"witness", *lifted_bad->witness}},
                lifted_bad->mode);
  } else {
    report.pass("theorem.forward", "exhaustive");
  }
  return report;
}

}  // namespace detail

/// Checks that a sound base has a sound lift. Entries: every base law under
/// "base:", every lifted law under "lifted:", then theorem.base,
/// theorem.lifted and theorem.forward.
template <CellModel B, CellModel L>
LawReport run_implication(std::string suite, const B& base, std::span<const Law<B>> base_laws,
                          const Sampler& base_sampler, const L& lifted,
                          std::span<const Law<L>> lifted_laws, const Sampler& lifted_sampler) {
  const auto run = detail::run_base(base, base_laws, base_sampler);
  const LawReport lifted_report = run_suite<L>("lifted", lifted, lifted_laws, lifted_sampler);
  return detail::forward_report(std::move(suite), run.report, lifted_report);
}

/// Checks an iff between a base structure and a lifted one that share law
/// ids. Entries as for run_implication, then theorem.backward: every base
/// counterexample, carried over by `object_map` and `cell_map`, violates
/// the same law in the lift.
template <CellModel B, CellModel L, class ObjectMap, class CellMap>
LawReport run_biconditional(std::string suite, const B& base, std::span<const Law<B>> base_laws,
                            const Sampler& base_sampler, const L& lifted,
                            std::span<const Law<L>> lifted_laws, const Sampler& lifted_sampler,
                            ObjectMap object_map, CellMap cell_map) {
  const auto run = detail::run_base(base, base_laws, base_sampler);
  const LawReport lifted_report = run_suite<L>("lifted", lifted, lifted_laws, lifted_sampler);
  LawReport report = detail::forward_report(std::move(suite), run.report, lifted_report);

  Json transfers = Json::array();
  for (const auto& [law, cex] : run.failures) {
    const Law<L>* target = find_law_in(lifted_laws, law->id);
    Counterexample<L> moved;
    for (const auto& o : cex.objects) moved.objects.push_back(object_map(o));
    // A one-object base may use shorter chains than its lift.
    while (target && !moved.objects.empty() && moved.objects.size() < target->chain) {
      moved.objects.push_back(moved.objects.back());
    }
    for (const auto& c : cex.cells) moved.cells.push_back(cell_map(c));
    Json w{{"law", std::string(law->id)}, {"base", witness_json(base, *law, cex)}};
    if (target) w["lifted"] = witness_json(lifted, *target, moved);
    if (!target || target->holds(lifted, moved.objects, moved.cells)) {
      report.fail("theorem.backward", std::move(w), "exhaustive");
      return report;
    }
    transfers.push_back(std::move(w));
  }
  LawEntry backward{"theorem.backward", true, std::nullopt, "exhaustive"};
  if (!transfers.empty()) backward.witness = Json{{"transfers", std::move(transfers)}};
  report.add(std::move(backward));
  return report;
}

/// Every checked direction passed; a one-way theorem has no backward entry.
inline bool theorem_holds(const LawReport& report) {
  const LawEntry* forward = report.find("theorem.forward");
  const LawEntry* backward = report.find("theorem.backward");
  return forward && forward->passed && (!backward || backward->passed);
}

}  // namespace linbicat

#endif  // LINBICAT_THEOREM_HPP
