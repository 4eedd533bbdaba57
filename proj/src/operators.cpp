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

#include "amtop/operators.hpp"

#include <cassert>

namespace amtop {

SubsetMask union_of_members_within(FamilyMask family, SubsetMask a) {
  MaskBits acc = 0;
  for (MaskBits g = 0; g < family.width(); ++g) {
    if (family.contains(g) && (g & ~a.bits()) == 0) acc |= g;
  }
  return SubsetMask(acc, a.n());
}

SubsetMask intersection_of_members_containing(FamilyMask family, SubsetMask a) {
  MaskBits acc = full_bits(a.n());
  for (MaskBits f = 0; f < family.width(); ++f) {
    if (family.contains(f) && (a.bits() & ~f) == 0) acc &= f;
  }
  return SubsetMask(acc, a.n());
}

namespace {

bool has_member_between(FamilyMask family, SubsetMask lower, SubsetMask upper) {
  for (MaskBits g = 0; g < family.width(); ++g) {
    if (family.contains(g) && (lower.bits() & ~g) == 0 && (g & ~upper.bits()) == 0) return true;
  }
  return false;
}

}  // namespace

bool is_alpha_m_nbhd_of_point(const FiniteSpace& space, SubsetMask nbhd, int x) {
  return has_member_between(family_of(space, SetClass::kAlphaMOpen),
                            SubsetMask::singleton(space.n(), x), nbhd);
}

bool is_alpha_m_nbhd_of_set(const FiniteSpace& space, SubsetMask nbhd, SubsetMask a) {
  return has_member_between(family_of(space, SetClass::kAlphaMOpen), a, nbhd);
}

NbhdSystem nbhd_system(const FiniteSpace& space, int x) {
  const FamilyMask am_open = family_of(space, SetClass::kAlphaMOpen);
  const SubsetMask point = SubsetMask::singleton(space.n(), x);
  NbhdSystem system{x, {}};
  for (const auto& n : enumerate_subsets(space)) {
    if (has_member_between(am_open, point, n)) system.members.push_back(n);
  }
  return system;
}

SubsetMask alpha_m_interior(const FiniteSpace& space, SubsetMask a) {
  return union_of_members_within(family_of(space, SetClass::kAlphaMOpen), a);
}

SubsetMask alpha_m_interior_pointwise(const FiniteSpace& space, SubsetMask a) {
  MaskBits acc = 0;
  for (int x = 0; x < space.n(); ++x) {
    if (is_alpha_m_nbhd_of_point(space, a, x)) acc |= MaskBits{1} << x;
  }
  return SubsetMask(acc, space.n());
}

SubsetMask alpha_m_closure(const FiniteSpace& space, SubsetMask a) {
  const SubsetMask closure =
      intersection_of_members_containing(family_of(space, SetClass::kAlphaMClosed), a);
  assert(closure == alpha_m_interior(space, a.complement()).complement());
  return closure;
}

}  // namespace amtop
