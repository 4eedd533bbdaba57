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

#include "amtop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

namespace amtop {
namespace {

// Off-diagonal relation bits are packed row-major, skipping i == j.
std::array<MaskBits, kMaxPoints> decode_relation(int n, std::uint32_t code) {
  std::array<MaskBits, kMaxPoints> succ{};
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    succ[i] = MaskBits{1} << i;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> bit) & 1U) succ[i] |= MaskBits{1} << j;
      ++bit;
    }
  }
  return succ;
}

bool is_transitive(int n, const std::array<MaskBits, kMaxPoints>& succ) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (((succ[i] >> j) & 1U) && (succ[j] & ~succ[i]) != 0) return false;
    }
  }
  return true;
}

FamilyMask::Word up_closed_sets(int n, const std::array<MaskBits, kMaxPoints>& succ) {
  FamilyMask::Word family = 0;
  for (MaskBits u = 0; u < subset_count(n); ++u) {
    bool up_closed = true;
    for (int i = 0; i < n && up_closed; ++i) {
      if (((u >> i) & 1U) && (succ[i] & ~u) != 0) up_closed = false;
    }
    if (up_closed) family |= FamilyMask::Word{1} << u;
  }
  return family;
}

}  // namespace

SpaceCatalog enumerate_topologies(int n, EnumerationBound bound) {
  const int limit = bound == EnumerationBound::kAllowFivePoints ? 5 : 4;
  if (n < 0) throw std::invalid_argument("negative point count");
  if (n > limit) {
    throw EnumerationTooLarge("enumeration of " + std::to_string(n) +
                              "-point topologies exceeds the enabled bound of " +
                              std::to_string(limit));
  }
  const int relation_bits = n * (n - 1);
  std::vector<FamilyMask::Word> families;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << relation_bits); ++code) {
    const auto succ = decode_relation(n, static_cast<std::uint32_t>(code));
    if (is_transitive(n, succ)) families.push_back(up_closed_sets(n, succ));
  }
  std::sort(families.begin(), families.end());
  assert(std::adjacent_find(families.begin(), families.end()) == families.end());

  SpaceCatalog catalog;
  catalog.n = n;
  catalog.spaces.reserve(families.size());
  for (auto bits : families) catalog.spaces.push_back(validate_topology(n, FamilyMask(bits, n)));
  return catalog;
}

std::vector<FiniteSpace> enumerate_spaces(int min_points, int max_points, EnumerationBound bound) {
  std::vector<FiniteSpace> out;
  for (int n = min_points; n <= max_points; ++n) {
    auto catalog = enumerate_topologies(n, bound);
    out.insert(out.end(), catalog.spaces.begin(), catalog.spaces.end());
  }
  return out;
}

}  // namespace amtop
