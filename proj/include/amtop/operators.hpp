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

#ifndef AMTOP_OPERATORS_HPP_
#define AMTOP_OPERATORS_HPP_

#include <vector>

#include "amtop/generalized.hpp"
#include "amtop/space.hpp"

namespace amtop {

// Union of the members of `family` contained in `a`.
SubsetMask union_of_members_within(FamilyMask family, SubsetMask a);
// Intersection of the members of `family` containing `a` (the whole set if
// there are none).
SubsetMask intersection_of_members_containing(FamilyMask family, SubsetMask a);

// Some alpha^m-open G has x ∈ G ⊆ N.
bool is_alpha_m_nbhd_of_point(const FiniteSpace& space, SubsetMask nbhd, int x);
// Some alpha^m-open G has A ⊆ G ⊆ N.
bool is_alpha_m_nbhd_of_set(const FiniteSpace& space, SubsetMask nbhd, SubsetMask a);

// All alpha^m-neighbourhoods of one point, increasing mask order.
struct NbhdSystem {
  int point = 0;
  std::vector<SubsetMask> members;
};

NbhdSystem nbhd_system(const FiniteSpace& space, int x);

// Union of the alpha^m-open subsets of A.
SubsetMask alpha_m_interior(const FiniteSpace& space, SubsetMask a);
// The points x for which A is an alpha^m-neighbourhood of x. Always equal to
// alpha_m_interior; kept as a separate computation so the two can be
// compared.
SubsetMask alpha_m_interior_pointwise(const FiniteSpace& space, SubsetMask a);
// Intersection of the alpha^m-closed supersets of A.
SubsetMask alpha_m_closure(const FiniteSpace& space, SubsetMask a);

}  // namespace amtop

#endif  // AMTOP_OPERATORS_HPP_
