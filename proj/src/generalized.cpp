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

#include "amtop/generalized.hpp"

#include <cassert>

#include "amtop/operators.hpp"

namespace amtop {

std::string_view flag_name(SetClass c) {
  switch (c) {
    case SetClass::kOpen: return "open";
    case SetClass::kClosed: return "closed";
    case SetClass::kPreopen: return "preopen";
    case SetClass::kPreclosed: return "preclosed";
    case SetClass::kSemiopen: return "semiopen";
    case SetClass::kSemiclosed: return "semiclosed";
    case SetClass::kAlphaOpen: return "alpha-open";
    case SetClass::kAlphaClosed: return "alpha-closed";
    case SetClass::kBetaOpen: return "beta-open";
    case SetClass::kBetaClosed: return "beta-closed";
    case SetClass::kGClosed: return "g-closed";
    case SetClass::kAlphaMClosed: return "alpha-m-closed";
    case SetClass::kAlphaMOpen: return "alpha-m-open";
  }
  return "?";
}

std::string_view json_key(SetClass c) {
  switch (c) {
    case SetClass::kOpen: return "open";
    case SetClass::kClosed: return "closed";
    case SetClass::kPreopen: return "preopen";
    case SetClass::kPreclosed: return "preclosed";
    case SetClass::kSemiopen: return "semiopen";
    case SetClass::kSemiclosed: return "semiclosed";
    case SetClass::kAlphaOpen: return "alpha_open";
    case SetClass::kAlphaClosed: return "alpha_closed";
    case SetClass::kBetaOpen: return "beta_open";
    case SetClass::kBetaClosed: return "beta_closed";
    case SetClass::kGClosed: return "g_closed";
    case SetClass::kAlphaMClosed: return "alpha_m_closed";
    case SetClass::kAlphaMOpen: return "alpha_m_open";
  }
  return "?";
}

std::optional<SetClass> parse_set_class(std::string_view name) {
  for (SetClass c : kAllSetClasses) {
    if (flag_name(c) == name || json_key(c) == name) return c;
  }
  return std::nullopt;
}

bool is_preopen(const FiniteSpace& s, SubsetMask a) {
  return a.is_subset_of(s.interior(s.closure(a)));
}
bool is_preclosed(const FiniteSpace& s, SubsetMask a) {
  return s.closure(s.interior(a)).is_subset_of(a);
}
bool is_semiopen(const FiniteSpace& s, SubsetMask a) {
  return a.is_subset_of(s.closure(s.interior(a)));
}
bool is_semiclosed(const FiniteSpace& s, SubsetMask a) {
  return s.interior(s.closure(a)).is_subset_of(a);
}
bool is_alpha_open(const FiniteSpace& s, SubsetMask a) {
  return a.is_subset_of(s.interior(s.closure(s.interior(a))));
}
bool is_alpha_closed(const FiniteSpace& s, SubsetMask a) {
  return s.closure(s.interior(s.closure(a))).is_subset_of(a);
}
bool is_beta_open(const FiniteSpace& s, SubsetMask a) {
  return a.is_subset_of(s.closure(s.interior(s.closure(a))));
}
bool is_beta_closed(const FiniteSpace& s, SubsetMask a) {
  return s.interior(s.closure(s.interior(a))).is_subset_of(a);
}

SubsetMask alpha_kernel(const FiniteSpace& s, SubsetMask a) {
  SubsetMask kernel = s.whole();
  for (const auto& u : enumerate_subsets(s)) {
    if (a.is_subset_of(u) && is_alpha_open(s, u)) kernel = kernel & u;
  }
  return kernel;
}

bool is_alpha_m_closed_by_supersets(const FiniteSpace& s, SubsetMask a) {
  const SubsetMask core = s.interior(s.closure(a));
  for (const auto& u : enumerate_subsets(s)) {
    if (a.is_subset_of(u) && is_alpha_open(s, u) && !core.is_subset_of(u)) return false;
  }
  return true;
}

bool is_alpha_m_closed(const FiniteSpace& s, SubsetMask a) {
  const bool verdict = s.interior(s.closure(a)).is_subset_of(alpha_kernel(s, a));
  assert(verdict == is_alpha_m_closed_by_supersets(s, a));
  return verdict;
}

bool is_alpha_m_open(const FiniteSpace& s, SubsetMask a) {
  return is_alpha_m_closed(s, a.complement());
}

bool is_g_closed(const FiniteSpace& s, SubsetMask a) {
  const SubsetMask cl = s.closure(a);
  for (const auto& u : s.opens().members()) {
    if (a.is_subset_of(u) && !cl.is_subset_of(u)) return false;
  }
  return true;
}

bool classify(const FiniteSpace& s, SubsetMask a, SetClass c) {
  switch (c) {
    case SetClass::kOpen: return s.is_open(a);
    case SetClass::kClosed: return s.is_closed(a);
    case SetClass::kPreopen: return is_preopen(s, a);
    case SetClass::kPreclosed: return is_preclosed(s, a);
    case SetClass::kSemiopen: return is_semiopen(s, a);
    case SetClass::kSemiclosed: return is_semiclosed(s, a);
    case SetClass::kAlphaOpen: return is_alpha_open(s, a);
    case SetClass::kAlphaClosed: return is_alpha_closed(s, a);
    case SetClass::kBetaOpen: return is_beta_open(s, a);
    case SetClass::kBetaClosed: return is_beta_closed(s, a);
    case SetClass::kGClosed: return is_g_closed(s, a);
    case SetClass::kAlphaMClosed: return is_alpha_m_closed(s, a);
    case SetClass::kAlphaMOpen: return is_alpha_m_open(s, a);
  }
  return false;
}

FamilyMask family_of(const FiniteSpace& s, SetClass c) {
  FamilyMask out = FamilyMask::none(s.n());
  for (const auto& a : enumerate_subsets(s)) {
    if (classify(s, a, c)) out = out.with(a);
  }
  return out;
}

bool is_t_half(const FiniteSpace& s) {
  return family_of(s, SetClass::kGClosed).is_subfamily_of(s.closeds());
}

std::optional<SetPair> find_union_violation(FamilyMask family) {
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) return SetPair{members[i], members[j]};
    }
  }
  return std::nullopt;
}

std::optional<SetPair> find_intersection_violation(FamilyMask family) {
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] & members[j])) return SetPair{members[i], members[j]};
    }
  }
  return std::nullopt;
}

UnionClosure is_family_union_closed(const FiniteSpace& s, SetClass c) {
  auto witness = find_union_violation(family_of(s, c));
  return UnionClosure{!witness.has_value(), witness};
}

SpaceProfile::SpaceProfile(FiniteSpace space) : space_(std::move(space)) {
  for (SetClass c : kAllSetClasses) {
    families_[static_cast<std::size_t>(c)] = family_of(space_, c);
  }
  const FamilyMask am_open = family(SetClass::kAlphaMOpen);
  const FamilyMask am_closed = family(SetClass::kAlphaMClosed);
  for (const auto& a : enumerate_subsets(space_)) {
    alpha_m_interior_[a.bits()] = union_of_members_within(am_open, a).bits();
    alpha_m_closure_[a.bits()] = intersection_of_members_containing(am_closed, a).bits();
  }
}

}  // namespace amtop
