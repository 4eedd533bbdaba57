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

#ifndef AMTOP_ENUMERATE_HPP_
#define AMTOP_ENUMERATE_HPP_

#include <stdexcept>
#include <vector>

#include "amtop/space.hpp"

namespace amtop {

// Every labeled topology on n points, sorted by the numeric value of the
// open-set family.
struct SpaceCatalog {
  int n = 0;
  std::vector<FiniteSpace> spaces;
};

enum class EnumerationBound {
  kDefault,       // n <= 4
  kAllowFivePoints,
};

class EnumerationTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Topologies on a finite set are in bijection with preorders on it (the open
// sets are the up-closed sets), so the catalog is built from the transitive
// reflexive relations rather than by scanning all 2^(2^n) families.
SpaceCatalog enumerate_topologies(int n, EnumerationBound bound = EnumerationBound::kDefault);

// Catalogs for min_points..max_points concatenated in point-count order.
std::vector<FiniteSpace> enumerate_spaces(int min_points, int max_points,
                                          EnumerationBound bound = EnumerationBound::kDefault);

}  // namespace amtop

#endif  // AMTOP_ENUMERATE_HPP_
