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

#include "amtop/maps.hpp"

#include <string>

namespace amtop {

PointMap::PointMap(FiniteSpace domain, FiniteSpace codomain, std::span<const int> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (images.size() != static_cast<std::size_t>(domain_.n())) {
    throw std::out_of_range("image table has " + std::to_string(images.size()) +
                            " entries, domain has " + std::to_string(domain_.n()) + " points");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] >= codomain_.n()) {
      throw std::out_of_range("image " + std::to_string(images[i]) + " of point " +
                              std::to_string(i) + " is not a codomain point");
    }
    images_[i] = static_cast<std::uint8_t>(images[i]);
  }
}

PointMap PointMap::identity(const FiniteSpace& space) {
  std::vector<int> table(static_cast<std::size_t>(space.n()));
  for (int i = 0; i < space.n(); ++i) table[static_cast<std::size_t>(i)] = i;
  return PointMap(space, space, table);
}

PointMap PointMap::constant(const FiniteSpace& domain, const FiniteSpace& codomain, int value) {
  std::vector<int> table(static_cast<std::size_t>(domain.n()), value);
  return PointMap(domain, codomain, table);
}

std::vector<int> PointMap::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + domain_.n());
}

SubsetMask PointMap::forward_image(SubsetMask a) const {
  MaskBits out = 0;
  for (int x = 0; x < domain_.n(); ++x) {
    if (a.contains(x)) out |= MaskBits{1} << images_[static_cast<std::size_t>(x)];
  }
  return SubsetMask(out, codomain_.n());
}

SubsetMask PointMap::preimage(SubsetMask b) const {
  MaskBits out = 0;
  for (int x = 0; x < domain_.n(); ++x) {
    if (b.contains(images_[static_cast<std::size_t>(x)])) out |= MaskBits{1} << x;
  }
  return SubsetMask(out, domain_.n());
}

bool PointMap::is_injective() const {
  MaskBits seen = 0;
  for (int x = 0; x < domain_.n(); ++x) {
    const MaskBits bit = MaskBits{1} << images_[static_cast<std::size_t>(x)];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool PointMap::is_surjective() const {
  return forward_image(domain_.whole()).is_whole();
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw DomainMismatch("cannot compose: codomain of the inner map is not the domain of the outer");
  }
  std::vector<int> table(static_cast<std::size_t>(f.domain().n()));
  for (int x = 0; x < f.domain().n(); ++x) table[static_cast<std::size_t>(x)] = g.image(f.image(x));
  return PointMap(f.domain(), g.codomain(), table);
}

std::vector<PointMap> enumerate_maps(const FiniteSpace& domain, const FiniteSpace& codomain) {
  std::vector<PointMap> out;
  const int n = domain.n();
  const int m = codomain.n();
  if (n > 0 && m == 0) return out;
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(domain, codomain, table);
    // Odometer with the last point as the fastest digit.
    int pos = n - 1;
    while (pos >= 0 && table[static_cast<std::size_t>(pos)] == m - 1) {
      table[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++table[static_cast<std::size_t>(pos)];
  }
  return out;
}

bool images_land_in(const PointMap& f, FamilyMask from, FamilyMask to) {
  for (MaskBits k = 0; k < from.width(); ++k) {
    if (from.contains(k) && !to.contains(f.forward_image(SubsetMask(k, from.n())))) return false;
  }
  return true;
}

bool preimages_land_in(const PointMap& f, FamilyMask from, FamilyMask to) {
  for (MaskBits k = 0; k < from.width(); ++k) {
    if (from.contains(k) && !to.contains(f.preimage(SubsetMask(k, from.n())))) return false;
  }
  return true;
}

bool is_continuous(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return preimages_land_in(f, cod.family(SetClass::kClosed), dom.family(SetClass::kClosed));
}
bool is_alpha_m_continuous(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return preimages_land_in(f, cod.family(SetClass::kClosed), dom.family(SetClass::kAlphaMClosed));
}
bool is_alpha_m_irresolute(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return preimages_land_in(f, cod.family(SetClass::kAlphaMClosed),
                           dom.family(SetClass::kAlphaMClosed));
}
bool is_alpha_irresolute(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return preimages_land_in(f, cod.family(SetClass::kAlphaClosed),
                           dom.family(SetClass::kAlphaClosed));
}
bool is_closed_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return images_land_in(f, dom.family(SetClass::kClosed), cod.family(SetClass::kClosed));
}
bool is_open_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return images_land_in(f, dom.family(SetClass::kOpen), cod.family(SetClass::kOpen));
}
bool is_alpha_m_closed_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return images_land_in(f, dom.family(SetClass::kClosed), cod.family(SetClass::kAlphaMClosed));
}
bool is_alpha_m_open_map(const PointMap& f, const SpaceProfile& dom, const SpaceProfile& cod) {
  return images_land_in(f, dom.family(SetClass::kOpen), cod.family(SetClass::kAlphaMOpen));
}

bool is_continuous(const PointMap& f) {
  return preimages_land_in(f, f.codomain().closeds(), f.domain().closeds());
}
bool is_alpha_m_continuous(const PointMap& f) {
  return preimages_land_in(f, f.codomain().closeds(),
                           family_of(f.domain(), SetClass::kAlphaMClosed));
}
bool is_alpha_m_irresolute(const PointMap& f) {
  return preimages_land_in(f, family_of(f.codomain(), SetClass::kAlphaMClosed),
                           family_of(f.domain(), SetClass::kAlphaMClosed));
}
bool is_alpha_irresolute(const PointMap& f) {
  return preimages_land_in(f, family_of(f.codomain(), SetClass::kAlphaClosed),
                           family_of(f.domain(), SetClass::kAlphaClosed));
}
bool is_closed_map(const PointMap& f) {
  return images_land_in(f, f.domain().closeds(), f.codomain().closeds());
}
bool is_open_map(const PointMap& f) {
  return images_land_in(f, f.domain().opens(), f.codomain().opens());
}
bool is_alpha_m_closed_map(const PointMap& f) {
  return images_land_in(f, f.domain().closeds(), family_of(f.codomain(), SetClass::kAlphaMClosed));
}
bool is_alpha_m_open_map(const PointMap& f) {
  return images_land_in(f, f.domain().opens(), family_of(f.codomain(), SetClass::kAlphaMOpen));
}

}  // namespace amtop
