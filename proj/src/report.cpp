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

#include "linbicat/report.hpp"

#include <sstream>
#include <stdexcept>

#include "linbicat/law_registry.hpp"

namespace linbicat {

void LawReport::add(LawEntry entry) {
  if (find_law(entry.law) == nullptr) {
    throw std::logic_error("law '" + entry.law + "' is not in the registry");
  }
  if (!entry.passed && !entry.witness) {
    throw std::logic_error("failing law '" + entry.law + "' has no witness");
  }
  entries_.push_back(std::move(entry));
}

void LawReport::pass(const std::string& law, const std::string& mode) {
  add(LawEntry{law, true, std::nullopt, mode});
}

void LawReport::fail(const std::string& law, Json witness, const std::string& mode) {
  add(LawEntry{law, false, std::move(witness), mode});
}

void LawReport::absorb(const LawReport& other, const std::string& scope) {
  for (const auto& e : other.entries_) {
    LawEntry copy = e;
    copy.law = scope + ":" + e.law;
    entries_.push_back(std::move(copy));
  }
}

bool LawReport::passed() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.passed ? 0 : 1;
  return n;
}

const LawEntry* LawReport::find(std::string_view law) const {
  for (const auto& e : entries_)
    if (e.law == law) return &e;
  return nullptr;
}

const LawEntry* LawReport::first_failure() const {
  for (const auto& e : entries_)
    if (!e.passed) return &e;
  return nullptr;
}

Json LawReport::to_json() const {
  Json out;
  out["suite"] = suite_;
  Json entries = Json::array();
  for (const auto& e : entries_) {
    Json j;
    j["law"] = e.law;
    j["status"] = e.passed ? "pass" : "fail";
    j["witness"] = e.witness ? *e.witness : Json(nullptr);
    j["mode"] = e.mode;
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite_ << "\n";
  for (const auto& e : entries_) {
    os << "  " << (e.passed ? "PASS" : "FAIL") << "  " << e.law << "  [" << e.mode << "]\n";
    if (e.witness) os << "        witness: " << e.witness->dump() << "\n";
  }
  os << "summary: " << (entries_.size() - failures()) << "/" << entries_.size() << " passed\n";
  return os.str();
}

}  // namespace linbicat
