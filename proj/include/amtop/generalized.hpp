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

#ifndef AMTOP_GENERALIZED_HPP_
#define AMTOP_GENERALIZED_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "amtop/space.hpp"

namespace amtop {

enum class SetClass {
  kOpen,
  kClosed,
  kPreopen,
  kPreclosed,
  kSemiopen,
  kSemiclosed,
  kAlphaOpen,
  kAlphaClosed,
  kBetaOpen,
  kBetaClosed,
  kGClosed,
  kAlphaMClosed,
  kAlphaMOpen,
};

inline constexpr std::array kAllSetClasses = {
    SetClass::kOpen,       SetClass::kClosed,      SetClass::kPreopen,   SetClass::kPreclosed,
    SetClass::kSemiopen,   SetClass::kSemiclosed,  SetClass::kAlphaOpen, SetClass::kAlphaClosed,
    SetClass::kBetaOpen,   SetClass::kBetaClosed,  SetClass::kGClosed,   SetClass::kAlphaMClosed,
    SetClass::kAlphaMOpen,
};
inline constexpr std::size_t kSetClassCount = kAllSetClasses.size();

// Command-line spelling, e.g. "alpha-m-closed".
std::string_view flag_name(SetClass c);
// JSON key spelling, e.g. "alpha_m_closed".
std::string_view json_key(SetClass c);
std::optional<SetClass> parse_set_class(std::string_view name);

bool is_preopen(const FiniteSpace& space, SubsetMask a);
bool is_preclosed(const FiniteSpace& space, SubsetMask a);
bool is_semiopen(const FiniteSpace& space, SubsetMask a);
bool is_semiclosed(const FiniteSpace& space, SubsetMask a);
bool is_alpha_open(const FiniteSpace& space, SubsetMask a);
bool is_alpha_closed(const FiniteSpace& space, SubsetMask a);
bool is_beta_open(const FiniteSpace& space, SubsetMask a);
bool is_beta_closed(const FiniteSpace& space, SubsetMask a);

// Intersection of all alpha-open supersets of `a`.
SubsetMask alpha_kernel(const FiniteSpace& space, SubsetMask a);

// int(cl(A)) ⊆ U for every alpha-open U ⊇ A. Evaluated through the kernel
// form int(cl(A)) ⊆ alpha_kernel(A); assert-checked against the quantified
// form.
bool is_alpha_m_closed(const FiniteSpace& space, SubsetMask a);
bool is_alpha_m_open(const FiniteSpace& space, SubsetMask a);

// The quantified form of is_alpha_m_closed: loops over alpha-open supersets.
bool is_alpha_m_closed_by_supersets(const FiniteSpace& space, SubsetMask a);

// cl(A) ⊆ U whenever A ⊆ U and U is open (Levine).
bool is_g_closed(const FiniteSpace& space, SubsetMask a);

bool classify(const FiniteSpace& space, SubsetMask a, SetClass c);

// All subsets of the space belonging to class `c`.
FamilyMask family_of(const FiniteSpace& space, SetClass c);

// Every g-closed set is closed.
bool is_t_half(const FiniteSpace& space);

struct SetPair {
  SubsetMask first;
  SubsetMask second;
  bool operator==(const SetPair&) const = default;
};

// Lexicographically smallest (first < second) pair whose union (resp.
// intersection) falls outside the family.
std::optional<SetPair> find_union_violation(FamilyMask family);
std::optional<SetPair> find_intersection_violation(FamilyMask family);

struct UnionClosure {
  bool closed;
  std::optional<SetPair> witness;
};

UnionClosure is_family_union_closed(const FiniteSpace& space, SetClass c);

// Memoized families for one space. Built eagerly, immutable afterwards, so
// it can be shared read-only between workers.
class SpaceProfile {
 public:
  SpaceProfile() : SpaceProfile(FiniteSpace()) {}
  explicit SpaceProfile(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }
  int n() const { return space_.n(); }
  FamilyMask family(SetClass c) const { return families_[static_cast<std::size_t>(c)]; }
  bool is(SetClass c, SubsetMask a) const { return family(c).contains(a); }

  SubsetMask alpha_m_interior(SubsetMask a) const {
    return SubsetMask(alpha_m_interior_[a.bits()], n());
  }
  SubsetMask alpha_m_closure(SubsetMask a) const {
    return SubsetMask(alpha_m_closure_[a.bits()], n());
  }

 private:
  FiniteSpace space_;
  std::array<FamilyMask, kSetClassCount> families_{};
  std::array<MaskBits, subset_count(kMaxPoints)> alpha_m_interior_{};
  std::array<MaskBits, subset_count(kMaxPoints)> alpha_m_closure_{};
};

}  // namespace amtop

#endif  // AMTOP_GENERALIZED_HPP_
