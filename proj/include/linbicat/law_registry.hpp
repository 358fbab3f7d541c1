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

#ifndef LINBICAT_LAW_REGISTRY_HPP
#define LINBICAT_LAW_REGISTRY_HPP

#include <span>
#include <string_view>

namespace linbicat {

/// One named law. `group` names the structure whose definition lists it.
struct LawInfo {
  std::string_view id;
  std::string_view group;
  std::string_view statement;
};

/// Every law any suite can report, each exactly once.
std::span<const LawInfo> law_registry();

/// nullptr when `id` is not registered. Report entries may carry a
/// "scope:" prefix; it is ignored here.
const LawInfo* find_law(std::string_view id);

}  // namespace linbicat

#endif  // LINBICAT_LAW_REGISTRY_HPP
