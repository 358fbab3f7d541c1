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

#ifndef LINBICAT_JSON_IO_HPP
#define LINBICAT_JSON_IO_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "linbicat/qmod.hpp"
#include "linbicat/qrel.hpp"
#include "linbicat/quantale.hpp"
#include "linbicat/quantaloid.hpp"
#include "linbicat/report.hpp"

namespace linbicat {

// File formats. Every reader throws parse errors naming the offending
// field path, e.g. `tensor[1][0]: unknown element 'q'`; element errors keep
// their own kind.

/// Reads and parses a JSON file; syntax errors carry line and column.
Json read_json_file(const std::filesystem::path& path);

/// {"kind":"table","elements":[..],"covers":[[a,b],..],"tensor":[[..]],
///  "unit":..,"par":{"table":[[..]],"unit":..}?,"dualizer":..?}
/// or {"kind":"zinf","flavor":"tropical"|"arctic","dualizer":int?}.
Quantale quantale_from_json(const Json& j);
/// Throws shape-mismatch for extended-integer variants the format cannot
/// express.
Json quantale_to_json(const Quantale& q);

Json set_to_json(const FiniteSet& s);
FiniteSet set_from_json(const Json& j, const std::string& path = "set");

/// {"source":set,"target":set,"values":[[..],..]}, rows by source member.
QRelation relation_from_json(const Quantale& q, const Json& j);
Json relation_to_json(const QRelation& r);

/// A quantaloid file with its optional dualizing family.
struct QuantaloidFile {
  FiniteQuantaloid quantaloid;
  std::optional<Family> family;
};

/// {"objects":[..],
///  "homs":[[{"elements":[..],"covers":[[a,b],..]},..],..]      k × k,
///  "tensor":[[[..],..],..]   one matrix per triple (a,b,c), in the order
///                            (a*k + b)*k + c, rows hom(a,b), columns
///                            hom(b,c), entries in hom(a,c),
///  "identities":[..],
///  "par":{"tables":[..],"units":[..]}?,
///  "dualizing_family":[..]?}
QuantaloidFile quantaloid_from_json(const Json& j);
Json quantaloid_to_json(const FiniteQuantaloid& q, const std::optional<Family>& family = {});

/// {"quantaloid":path?,"name":..,"carrier":set,"rho":[object names],
///  "tensor":[[..]],"par":[[..]]?}; matrices are member-indexed.
QCategory category_from_json(const FiniteQuantaloid& q, const Json& j);
Json category_to_json(const FiniteQuantaloid& q, const QCategory& m);

/// {"quantaloid":path?,"source":category,"target":category,
///  "tensor":[[..]] (source × target),"par":[[..]]? (target × source)}.
/// `source` and `target` are inline category objects or paths.
QBimodule bimodule_from_json(const FiniteQuantaloid& q, const Json& j,
                             const std::filesystem::path& base_dir = {});
Json bimodule_to_json(const FiniteQuantaloid& q, const QBimodule& b);

/// A category file; its "quantaloid" path is resolved against the file's
/// directory.
struct CategoryFile {
  std::shared_ptr<const QuantaloidFile> quantaloid;
  CategoryRef category;
};
CategoryFile load_category(const std::filesystem::path& path);

}  // namespace linbicat

#endif  // LINBICAT_JSON_IO_HPP
