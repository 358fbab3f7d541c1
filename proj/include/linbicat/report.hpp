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

#ifndef LINBICAT_REPORT_HPP
#define LINBICAT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace linbicat {

using Json = nlohmann::ordered_json;

/// Outcome of one law over the tested fragment. A failing entry always
/// carries a witness: the named inputs that violate the law.
struct LawEntry {
  std::string law;
  bool passed = true;
  std::optional<Json> witness;
  std::string mode;
};

/// Per-law pass/fail results of one named suite.
class LawReport {
 public:
  explicit LawReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<LawEntry>& entries() const { return entries_; }

  /// Throws std::logic_error if the law id is not registered, or if a
  /// failing entry has no witness.
  void add(LawEntry entry);
  void pass(const std::string& law, const std::string& mode);
  void fail(const std::string& law, Json witness, const std::string& mode);

  /// Appends every entry of `other`, prefixing its law names with `scope:`.
  void absorb(const LawReport& other, const std::string& scope);

  bool passed() const;
  const LawEntry* find(std::string_view law) const;
  const LawEntry* first_failure() const;
  std::size_t failures() const;

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<LawEntry> entries_;
};

}  // namespace linbicat

#endif  // LINBICAT_REPORT_HPP
