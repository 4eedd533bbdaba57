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

#include "amtop/io.hpp"

#include <fstream>
#include <sstream>

namespace amtop {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::uint64_t as_count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Json subset_to_json(SubsetMask s) { return Json(s.points()); }

SubsetMask subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("a subset must be a list of point indices");
  std::vector<int> points;
  for (const auto& p : j) points.push_back(as_int(p, "point index"));
  try {
    return SubsetMask::from_points(n, points);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

Json space_to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  for (const auto& u : space.opens().members()) opens.push_back(subset_to_json(u));
  return Json{{"n", space.n()}, {"opens", opens}};
}

FiniteSpace space_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxPoints) {
    throw InputError("n = " + std::to_string(n) + " outside 0.." + std::to_string(kMaxPoints));
  }
  const Json& opens = field(j, "opens");
  if (!opens.is_array()) throw InputError("\"opens\" must be a list of subsets");
  FamilyMask family = FamilyMask::none(n);
  for (const auto& u : opens) family = family.with(subset_from_json(u, n));
  return validate_topology(n, family);
}

Json map_to_json(const PointMap& f) {
  return Json{{"domain", space_to_json(f.domain())},
              {"codomain", space_to_json(f.codomain())},
              {"images", f.images()}};
}

PointMap map_from_json(const Json& j) {
  FiniteSpace domain = space_from_json(field(j, "domain"));
  FiniteSpace codomain = space_from_json(field(j, "codomain"));
  const Json& images = field(j, "images");
  if (!images.is_array()) throw InputError("\"images\" must be a list");
  std::vector<int> table;
  for (const auto& v : images) table.push_back(as_int(v, "image"));
  try {
    return PointMap(std::move(domain), std::move(codomain), table);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

Json counterexample_to_json(const Counterexample& cx) {
  Json spaces = Json::array();
  for (const auto& s : cx.spaces) spaces.push_back(space_to_json(s));
  Json maps = Json::array();
  for (const auto& f : cx.maps) maps.push_back(map_to_json(f));
  Json subsets = Json::array();
  for (std::size_t i = 0; i < cx.subsets.size(); ++i) {
    subsets.push_back(Json{{"space", cx.subset_spaces[i]}, {"points", subset_to_json(cx.subsets[i])}});
  }
  return Json{{"spaces", spaces}, {"maps", maps}, {"subsets", subsets}, {"note", cx.note}};
}

Counterexample counterexample_from_json(const Json& j) {
  Counterexample cx;
  for (const auto& s : field(j, "spaces")) cx.spaces.push_back(space_from_json(s));
  for (const auto& f : field(j, "maps")) cx.maps.push_back(map_from_json(f));
  for (const auto& s : field(j, "subsets")) {
    const int where = as_int(field(s, "space"), "subset space index");
    if (where < 0 || static_cast<std::size_t>(where) >= cx.spaces.size()) {
      throw InputError("subset refers to a missing space");
    }
    cx.subsets.push_back(subset_from_json(field(s, "points"), cx.spaces[static_cast<std::size_t>(where)].n()));
    cx.subset_spaces.push_back(where);
  }
  const Json& note = field(j, "note");
  if (!note.is_string()) throw InputError("\"note\" must be a string");
  cx.note = note.get<std::string>();
  return cx;
}

Json universe_to_json(const Universe& u) {
  return Json{{"shape", std::string(shape_name(u.shape))},
              {"min_points", u.min_points},
              {"max_points", u.max_points}};
}

Json report_to_json(const AuditReport& report) {
  Json counterexamples = Json::array();
  for (const auto& cx : report.counterexamples) counterexamples.push_back(counterexample_to_json(cx));
  Json j{{"theorem", std::string(audit_name(report.audit))},
         {"universe", universe_to_json(report.universe)},
         {"instances_checked", report.instances_checked},
         {"hypothesis_satisfied", report.hypothesis_satisfied},
         {"conclusion_failures", report.conclusion_failures},
         {"verdict", std::string(verdict_name(report.verdict))},
         {"counterexamples", counterexamples}};
  if (!report.stats.empty()) j["stats"] = report.stats;
  return j;
}

AuditReport report_from_json(const Json& j) {
  AuditReport report;
  const Json& theorem = field(j, "theorem");
  if (!theorem.is_string()) throw InputError("\"theorem\" must be a string");
  const auto id = parse_audit_id(theorem.get<std::string>());
  if (!id) throw InputError("unknown theorem id " + theorem.get<std::string>());
  report.audit = *id;

  const Json& u = field(j, "universe");
  const std::string shape = field(u, "shape").get<std::string>();
  bool shape_known = false;
  for (auto s : {UniverseShape::kSpaces, UniverseShape::kPairs, UniverseShape::kTriples}) {
    if (shape_name(s) == shape) {
      report.universe.shape = s;
      shape_known = true;
    }
  }
  if (!shape_known) throw InputError("unknown universe shape " + shape);
  report.universe.min_points = as_int(field(u, "min_points"), "min_points");
  report.universe.max_points = as_int(field(u, "max_points"), "max_points");

  report.instances_checked = as_count(field(j, "instances_checked"), "instances_checked");
  report.hypothesis_satisfied = as_count(field(j, "hypothesis_satisfied"), "hypothesis_satisfied");
  report.conclusion_failures = as_count(field(j, "conclusion_failures"), "conclusion_failures");
  const auto verdict = parse_verdict(field(j, "verdict").get<std::string>());
  if (!verdict) throw InputError("unknown verdict");
  report.verdict = *verdict;
  for (const auto& cx : field(j, "counterexamples")) {
    report.counterexamples.push_back(counterexample_from_json(cx));
  }
  if (auto it = j.find("stats"); it != j.end()) {
    for (const auto& [key, value] : it->items()) report.stats[key] = as_count(value, "stat");
  }
  return report;
}

Json structure_to_json(const StructureReport& report) {
  Json probes = Json::array();
  for (const auto& p : report.probes) {
    Json entry{{"property", p.name},
               {"spaces_checked", p.spaces_checked},
               {"spaces_holding", p.spaces_holding},
               {"fraction_holding", p.spaces_checked == 0
                                        ? 1.0
                                        : static_cast<double>(p.spaces_holding) /
                                              static_cast<double>(p.spaces_checked)},
               {"minimal_witness", p.minimal_witness ? counterexample_to_json(*p.minimal_witness)
                                                     : Json(nullptr)}};
    probes.push_back(entry);
  }
  return Json{{"min_points", report.min_points},
              {"max_points", report.max_points},
              {"probes", probes}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

FiniteSpace read_space_file(const std::filesystem::path& path) {
  return space_from_json(read_json_file(path));
}

PointMap read_map_file(const std::filesystem::path& path) {
  return map_from_json(read_json_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string report_file_name(AuditId id, const Universe& u) {
  return std::string(audit_name(id)) + "." + u.describe() + ".json";
}

}  // namespace amtop
