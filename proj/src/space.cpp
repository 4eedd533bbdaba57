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

#include "amtop/space.hpp"

#include <sstream>

#include "amtop/subset.hpp"

namespace amtop {

SubsetMask SubsetMask::from_points(int n, const std::vector<int>& points) {
  MaskBits bits = 0;
  for (int p : points) {
    if (p < 0 || p >= n) {
      throw std::out_of_range("point index " + std::to_string(p) + " out of range for " +
                              std::to_string(n) + "-point space");
    }
    bits |= MaskBits{1} << p;
  }
  return SubsetMask(bits, n);
}

std::vector<int> SubsetMask::points() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int p : points()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

FamilyMask FamilyMask::from_subsets(int n, const std::vector<SubsetMask>& members) {
  FamilyMask f = none(n);
  for (const auto& s : members) {
    if (s.n() != n) throw std::invalid_argument("subset belongs to a different point count");
    f = f.with(s);
  }
  return f;
}

std::vector<SubsetMask> FamilyMask::members() const {
  std::vector<SubsetMask> out;
  for (MaskBits k = 0; k < width(); ++k) {
    if (contains(k)) out.emplace_back(k, n_);
  }
  return out;
}

const char* to_string(TopologyAxiom axiom) {
  switch (axiom) {
    case TopologyAxiom::kMissingEmpty: return "MissingEmpty";
    case TopologyAxiom::kMissingWhole: return "MissingWhole";
    case TopologyAxiom::kNotUnionClosed: return "NotUnionClosed";
    case TopologyAxiom::kNotIntersectionClosed: return "NotIntersectionClosed";
  }
  return "?";
}

std::string TopologyViolation::describe() const {
  std::ostringstream os;
  os << to_string(axiom);
  if (first && second) os << "(" << first->to_string() << ", " << second->to_string() << ")";
  return os.str();
}

TopologyError::TopologyError(TopologyViolation violation)
    : std::invalid_argument("not a topology: " + violation.describe()),
      violation_(std::move(violation)) {}

std::optional<TopologyViolation> check_topology(int n, FamilyMask family) {
  if (family.n() != n) throw std::invalid_argument("family width does not match 2^n");
  const SubsetMask whole = SubsetMask::whole(n);
  if (!family.contains(SubsetMask::empty(n))) {
    return TopologyViolation{TopologyAxiom::kMissingEmpty, std::nullopt, std::nullopt};
  }
  if (!family.contains(whole)) {
    return TopologyViolation{TopologyAxiom::kMissingWhole, std::nullopt, std::nullopt};
  }
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) {
        return TopologyViolation{TopologyAxiom::kNotUnionClosed, members[i], members[j]};
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] & members[j])) {
        return TopologyViolation{TopologyAxiom::kNotIntersectionClosed, members[i], members[j]};
      }
    }
  }
  return std::nullopt;
}

FiniteSpace validate_topology(int n, FamilyMask family) {
  if (auto violation = check_topology(n, family)) throw TopologyError(*violation);
  return FiniteSpace(family);
}

FiniteSpace::FiniteSpace(FamilyMask opens) : n_(opens.n()), opens_(opens) {
  const auto members = opens_.members();
  for (MaskBits a = 0; a < subset_count(n_); ++a) {
    MaskBits acc = 0;
    for (const auto& u : members) {
      if ((u.bits() & ~a) == 0) acc |= u.bits();
    }
    interior_[a] = acc;
  }
}

FiniteSpace FiniteSpace::discrete(int n) { return validate_topology(n, FamilyMask::powerset(n)); }

FiniteSpace FiniteSpace::indiscrete(int n) {
  return validate_topology(
      n, FamilyMask::none(n).with(SubsetMask::empty(n)).with(SubsetMask::whole(n)));
}

FiniteSpace FiniteSpace::sierpinski() {
  return validate_topology(2, FamilyMask::from_subsets(
                                  2, {SubsetMask(0b00, 2), SubsetMask(0b01, 2), SubsetMask(0b11, 2)}));
}

FamilyMask FiniteSpace::closeds() const {
  FamilyMask out = FamilyMask::none(n_);
  for (const auto& u : opens_.members()) out = out.with(u.complement());
  return out;
}

std::vector<SubsetMask> enumerate_subsets(const FiniteSpace& space) {
  std::vector<SubsetMask> out;
  out.reserve(subset_count(space.n()));
  for (MaskBits k = 0; k < subset_count(space.n()); ++k) out.emplace_back(k, space.n());
  return out;
}

}  // namespace amtop
