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

#include <optional>

#include "amtop/enumerate.hpp"
#include "amtop/generalized.hpp"
#include "amtop/parallel.hpp"
#include "amtop/theorems.hpp"

namespace amtop {
namespace {

struct SpaceFindings {
  std::optional<Counterexample> intersection;
  std::optional<Counterexample> union_;
  std::optional<Counterexample> closure;
};

Counterexample single_space_cx(const FiniteSpace& space, SubsetMask a, SubsetMask b,
                               std::string note) {
  Counterexample cx;
  cx.spaces = {space};
  cx.subsets = {a, b};
  cx.subset_spaces = {0, 0};
  cx.note = std::move(note);
  return cx;
}

SpaceFindings probe(const FiniteSpace& space) {
  const SpaceProfile profile(space);
  SpaceFindings out;
  if (auto pair = find_intersection_violation(profile.family(SetClass::kAlphaMClosed))) {
    out.intersection = single_space_cx(space, pair->first, pair->second,
                                       "intersection-not-alpha-m-closed");
  }
  if (auto pair = find_union_violation(profile.family(SetClass::kAlphaMOpen))) {
    out.union_ = single_space_cx(space, pair->first, pair->second, "union-not-alpha-m-open");
  }
  for (const auto& a : enumerate_subsets(space)) {
    const SubsetMask closure = profile.alpha_m_closure(a);
    if (!profile.is(SetClass::kAlphaMClosed, closure)) {
      out.closure = single_space_cx(space, a, closure, "closure-not-alpha-m-closed");
      break;
    }
  }
  return out;
}

void tally(StructureProbe& p, const std::optional<Counterexample>& failure) {
  ++p.spaces_checked;
  if (!failure) {
    ++p.spaces_holding;
  } else if (!p.minimal_witness) {
    p.minimal_witness = failure;
  }
}

}  // namespace

StructureReport measure_family_structure(int min_points, int max_points, const RunOptions& options,
                                         EnumerationBound bound) {
  const auto spaces = enumerate_spaces(min_points, max_points, bound);
  const auto findings = map_chunks<SpaceFindings>(
      spaces.size(), options.jobs, [&](std::size_t i) { return probe(spaces[i]); });

  StructureReport report;
  report.min_points = min_points;
  report.max_points = max_points;
  report.probes = {{"alpha_m_closed_intersection_closed", 0, 0, std::nullopt},
                   {"alpha_m_open_union_closed", 0, 0, std::nullopt},
                   {"alpha_m_closure_is_alpha_m_closed", 0, 0, std::nullopt}};
  // Spaces are in (point count, catalog) order, so the first failure seen is
  // the minimal one.
  for (const auto& f : findings) {
    tally(report.probes[0], f.intersection);
    tally(report.probes[1], f.union_);
    tally(report.probes[2], f.closure);
  }
  return report;
}

}  // namespace amtop
