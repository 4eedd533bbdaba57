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

#ifndef AMTOP_MAPS_HPP_
#define AMTOP_MAPS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "amtop/generalized.hpp"
#include "amtop/space.hpp"

namespace amtop {

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function between two finite spaces, given by its image table. Equality
// compares the table and both topologies.
class PointMap {
 public:
  // Throws std::out_of_range if the table has the wrong length or an entry
  // is not a codomain point.
  PointMap(FiniteSpace domain, FiniteSpace codomain, std::span<const int> images);

  static PointMap identity(const FiniteSpace& space);
  static PointMap constant(const FiniteSpace& domain, const FiniteSpace& codomain, int value);

  const FiniteSpace& domain() const { return domain_; }
  const FiniteSpace& codomain() const { return codomain_; }
  int image(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::vector<int> images() const;

  SubsetMask forward_image(SubsetMask a) const;
  SubsetMask preimage(SubsetMask b) const;

  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const PointMap& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && images_ == o.images_;
  }

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::array<std::uint8_t, kMaxPoints> images_{};
};

// g ∘ f. Throws DomainMismatch unless f's codomain equals g's domain
// (same point count and topology).
PointMap compose(const PointMap& g, const PointMap& f);

// All codomain.n^domain.n maps, image tables in lexicographic order.
std::vector<PointMap> enumerate_maps(const FiniteSpace& domain, const FiniteSpace& codomain);

// Every member of `from` (domain subsets) has its forward image in `to`.
bool images_land_in(const PointMap& f, FamilyMask from, FamilyMask to);
// Every member of `from` (codomain subsets) pulls back into `to`.
bool preimages_land_in(const PointMap& f, FamilyMask from, FamilyMask to);

bool is_continuous(const PointMap& f);
bool is_alpha_m_continuous(const PointMap& f);
bool is_alpha_m_irresolute(const PointMap& f);
bool is_alpha_irresolute(const PointMap& f);
bool is_closed_map(const PointMap& f);
bool is_open_map(const PointMap& f);
bool is_alpha_m_closed_map(const PointMap& f);
bool is_alpha_m_open_map(const PointMap& f);

// Same predicates against precomputed families of the two spaces.
bool is_continuous(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_alpha_m_continuous(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_alpha_m_irresolute(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_alpha_irresolute(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_closed_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_open_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_alpha_m_closed_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);
bool is_alpha_m_open_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod);

}  // namespace amtop

#endif  // AMTOP_MAPS_HPP_
