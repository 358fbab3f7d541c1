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

// Command-line front end: load structures, run law suites and
// compositions, search for dualizers and run the theorem drivers.
//
// Exit status: 0 when every check passed, 1 when a law failed (the report
// is still printed), 2 on usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linbicat/catalog.hpp"
#include "linbicat/error.hpp"
#include "linbicat/json_io.hpp"
#include "linbicat/qmod.hpp"
#include "linbicat/qrel.hpp"
#include "linbicat/quantale.hpp"
#include "linbicat/quantaloid.hpp"
#include "linbicat/theorem.hpp"
#include "linbicat/verify.hpp"

namespace {

using namespace linbicat;

constexpr int kPass = 0;
constexpr int kLawFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string sampler = "exhaustive";
  std::uint64_t seed = 0;
  std::size_t max_set = 2;
  int window = 10;
  bool json = false;
  std::string out;
};

Sampler make_sampler(const Options& o) {
  Sampler s;
  if (o.sampler == "exhaustive") {
    s = Sampler::exhaustive(o.seed);
  } else if (o.sampler.starts_with("random:")) {
    const std::string n = o.sampler.substr(7);
    std::size_t used = 0;
    unsigned long long count = 0;
    try {
      count = std::stoull(n, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != n.size() || count == 0) {
      throw CLI::ValidationError("--sampler", "expected random:N with N > 0");
    }
    s = Sampler::random(o.seed, count);
  } else {
    throw CLI::ValidationError("--sampler", "expected exhaustive or random:N");
  }
  s.window = o.window;
  return s;
}

/// A file path, or else the name of a catalog entry.
Json input_json(const std::string& arg) { return read_json_file(arg); }

bool is_file(const std::string& arg) { return std::filesystem::is_regular_file(arg); }

Quantale load_quantale(const std::string& arg) {
  if (is_file(arg)) return quantale_from_json(input_json(arg));
  for (const auto& e : catalog()) {
    if (e.name == arg) return e.quantale;
  }
  throw Error(ErrorKind::kParse, arg + ": no such file or catalog entry");
}

QuantaloidFile load_quantaloid(const std::string& arg) {
  if (is_file(arg)) {
    const Json j = input_json(arg);
    if (j.is_object() && j.contains("kind")) {
      return {FiniteQuantaloid::from_quantale(quantale_from_json(j)), std::nullopt};
    }
    return quantaloid_from_json(j);
  }
  const Quantale q = load_quantale(arg);
  if (!q.is_finite()) throw Error(ErrorKind::kSearchSpaceTooLarge, arg + ": carrier is infinite");
  return {FiniteQuantaloid::from_quantale(q), std::nullopt};
}

int emit(const LawReport& r, const Options& o) {
  if (o.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return r.passed() ? kPass : kLawFailed;
}

void write_relation(const QRelation& r, const Options& o) {
  const std::string text = relation_to_json(r).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::kParse, o.out + ": cannot write");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Law checks for quantales, Q-relations, quantaloids and enriched categories"};
  app.require_subcommand(1);
  Options opt;
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--sampler", opt.sampler, "exhaustive or random:N")->capture_default_str();
    sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sub->add_option("--window", opt.window, "Extended-integer entries range over [-W, W]")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };
  auto sets = [&](CLI::App* sub) {
    sub->add_option("--max-set", opt.max_set, "Sets of size 1..K")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "JSON report"); };

  std::string input, quantale_file, first, second, op = "tensor", theorem;
  std::vector<std::string> category_files;
  int status = kPass;

  auto* check_quantale = app.add_subcommand("check-quantale", "Tensor laws of a quantale");
  check_quantale->add_option("input", input, "Quantale file or catalog name")->required();
  sampling(check_quantale);
  json(check_quantale);
  check_quantale->callback([&] {
    const Quantale q = load_quantale(input);
    status = emit(check_quantale_laws(q, q.domain(opt.window), make_sampler(opt)), opt);
  });

  auto* check_ld = app.add_subcommand("check-ld", "Both quantale structures and distributions");
  check_ld->add_option("input", input, "Quantale file or catalog name")->required();
  sampling(check_ld);
  json(check_ld);
  check_ld->callback([&] {
    const Quantale q = load_quantale(input);
    status = emit(check_ld_laws(q, q.domain(opt.window), make_sampler(opt)), opt);
  });

  auto* find_dualizer = app.add_subcommand("find-dualizer", "Search cyclic dualizing elements");
  find_dualizer->add_option("input", input, "Quantale file or catalog name")->required();
  find_dualizer->add_option("--window", opt.window, "Candidate range for extended integers")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  json(find_dualizer);
  find_dualizer->callback([&] {
    const Quantale q = load_quantale(input);
    const auto found = find_dualizers(q, opt.window);
    if (opt.json) {
      Json names = Json::array();
      for (Element d : found) names.push_back(q.to_json(d));
      std::cout << Json{{"dualizers", names}}.dump(2) << "\n";
    } else if (found.empty()) {
      std::cout << "no cyclic dualizing element\n";
    } else {
      std::cout << "cyclic dualizing elements:";
      for (Element d : found) std::cout << " " << q.format(d);
      std::cout << "\n";
    }
  });

  auto* compose = app.add_subcommand("compose", "Compose two relations");
  compose->add_option("--op", op, "tensor or par")
      ->capture_default_str()
      ->check(CLI::IsMember({"tensor", "par"}));
  compose->add_option("--quantale", quantale_file, "Quantale file or catalog name")->required();
  compose->add_option("first", first, "Relation X -> Y")->required()->check(CLI::ExistingFile);
  compose->add_option("second", second, "Relation Y -> Z")->required()->check(CLI::ExistingFile);
  compose->add_option("--out", opt.out, "Write the result here");
  compose->callback([&] {
    const Quantale q = load_quantale(quantale_file);
    const QRelation f = relation_from_json(q, input_json(first));
    const QRelation g = relation_from_json(q, input_json(second));
    write_relation(op == "tensor" ? compose_tensor(f, g) : compose_par(f, g), opt);
  });

  auto* dual = app.add_subcommand("dual", "Girard dual of a relation");
  dual->add_option("--quantale", quantale_file, "Quantale file or catalog name")->required();
  dual->add_option("relation", first, "Relation X -> Y")->required()->check(CLI::ExistingFile);
  dual->add_option("--out", opt.out, "Write the result here");
  dual->callback([&] {
    const Quantale q = load_quantale(quantale_file);
    write_relation(rel_dual(relation_from_json(q, input_json(first))), opt);
  });

  auto* girard_qrel = app.add_subcommand("check-girard-qrel", "Dualizing family of Q-Rel");
  girard_qrel->add_option("input", input, "Quantale file or catalog name")->required();
  sampling(girard_qrel);
  sets(girard_qrel);
  json(girard_qrel);
  girard_qrel->callback([&] {
    const Quantale q = load_quantale(input);
    status = emit(check_girard_qrel(q, standard_sets(opt.max_set), make_sampler(opt)), opt);
  });

  auto* verify_qrel = app.add_subcommand("verify-qrel", "Linear bicategory laws of Q-Rel");
  verify_qrel->add_option("input", input, "Quantale file or catalog name")->required();
  sampling(verify_qrel);
  sets(verify_qrel);
  json(verify_qrel);
  verify_qrel->callback([&] {
    const Quantale q = load_quantale(input);
    status = emit(verify_qrel_laws(q, standard_sets(opt.max_set), make_sampler(opt)), opt);
  });

  auto* verify_qmod = app.add_subcommand("verify-qmod", "Laws of Q-Mod over sampled categories");
  verify_qmod->add_option("input", input, "Quantaloid or quantale file, or catalog name")
      ->required();
  verify_qmod->add_option("categories", category_files, "Category files (default: sampled)")
      ->check(CLI::ExistingFile);
  sampling(verify_qmod);
  json(verify_qmod);
  verify_qmod->callback([&] {
    const QuantaloidFile file = load_quantaloid(input);
    const FiniteQuantaloid& Q = file.quantaloid;
    std::vector<CategoryRef> categories;
    for (const auto& path : category_files) {
      categories.push_back(std::make_shared<QCategory>(category_from_json(Q, input_json(path))));
    }
    if (categories.empty()) categories = sample_categories(Q, Q.has_par(), 3, opt.seed);
    Sampler s = make_sampler(opt);
    if (s.mode == Sampler::Mode::kExhaustive) s = qmod_sampler(opt.seed);
    status = emit(check_qmod_laws(Q, categories, s), opt);
  });

  auto* verify_monq = app.add_subcommand("verify-monq", "Laws of (linear) Mon Q");
  verify_monq->add_option("input", input, "Quantaloid or quantale file, or catalog name")
      ->required();
  sampling(verify_monq);
  json(verify_monq);
  verify_monq->callback([&] {
    const QuantaloidFile file = load_quantaloid(input);
    const FiniteQuantaloid& Q = file.quantaloid;
    const Sampler s = make_sampler(opt);
    if (Q.has_par()) {
      const LinearMonQModel model(Q, enumerate_linear_monads(Q));
      const auto laws = linear_quantaloid_laws<LinearMonQModel>(true);
      status = emit(run_suite<LinearMonQModel>("linear-monq", model, laws, s), opt);
    } else {
      const MonQ mq = materialize_monq(Q);
      status = emit(check_quantaloid_laws(mq.quantaloid, s), opt);
    }
  });

  auto* run = app.add_subcommand("run-theorem", "Check a theorem on both sides");
  std::string ids;
  for (auto id : theorem_names()) ids += (ids.empty() ? "" : ", ") + std::string(id);
  run->add_option("theorem", theorem, "One of: " + ids)->required();
  run->add_option("input", input, "Quantale file or catalog name")->required();
  std::string dualizer;
  run->add_option("--dualizer", dualizer, "Candidate dualizer for the Girard and closedness theorems");
  sampling(run);
  sets(run);
  json(run);
  run->callback([&] {
    TheoremConfig cfg;
    cfg.sampler = make_sampler(opt);
    cfg.max_set = opt.max_set;
    const Quantale q = load_quantale(input);
    if (!dualizer.empty()) cfg.dualizer = q.parse(dualizer);
    const LawReport r = run_theorem(theorem, q, cfg);
    emit(r, opt);
    if (!opt.json) std::cout << (theorem_holds(r) ? "theorem holds\n" : "theorem fails\n");
    status = theorem_holds(r) ? kPass : kLawFailed;
  });

  auto* list = app.add_subcommand("catalog", "List the built-in structures");
  json(list);
  list->callback([&] {
    Json entries = Json::array();
    for (const auto& e : catalog()) {
      const Classification c = classify(e.quantale);
      Json dualizers = Json::array();
      for (Element d : c.dualizers) dualizers.push_back(e.quantale.to_json(d));
      if (!opt.json) {
        std::cout << e.name << ": " << e.summary << "\n    quantale=" << c.quantale
                  << " ld=" << c.ld << " dualizers=" << dualizers.dump() << "\n";
        continue;
      }
      Json entry{{"name", e.name},     {"summary", e.summary},  {"broken", e.broken},
                 {"quantale", c.quantale}, {"ld", c.ld}, {"dualizers", dualizers}};
      try {
        entry["structure"] = quantale_to_json(e.quantale);
      } catch (const Error&) {
        entry["structure"] = nullptr;
      }
      entries.push_back(std::move(entry));
    }
    if (opt.json) std::cout << entries.dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
