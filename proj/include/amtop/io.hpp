// Copyright 2026 The amtop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMTOP_IO_HPP_
#define AMTOP_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "amtop/maps.hpp"
#include "amtop/space.hpp"
#include "amtop/theorems.hpp"

namespace amtop {

using Json = nlohmann::json;

// Malformed or semantically invalid input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json subset_to_json(SubsetMask s);
SubsetMask subset_from_json(const Json& j, int n);

// {"n": 2, "opens": [[], [0], [0,1]]}, opens in increasing mask order.
Json space_to_json(const FiniteSpace& space);
// Throws InputError for malformed documents and TopologyError when the
// listed family is not a topology.
FiniteSpace space_from_json(const Json& j);

// {"domain": <space>, "codomain": <space>, "images": [1,0,2]}
Json map_to_json(const PointMap& f);
PointMap map_from_json(const Json& j);

Json counterexample_to_json(const Counterexample& cx);
Counterexample counterexample_from_json(const Json& j);

Json universe_to_json(const Universe& u);
Json report_to_json(const AuditReport& report);
AuditReport report_from_json(const Json& j);

Json structure_to_json(const StructureReport& report);

// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

Json read_json_file(const std::filesystem::path& path);
FiniteSpace read_space_file(const std::filesystem::path& path);
PointMap read_map_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// "<audit>.<shape>-<min>-<max>.json"
std::string report_file_name(AuditId id, const Universe& u);

}  // namespace amtop

#endif  // AMTOP_IO_HPP_
