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

#ifndef AMTOP_SPACE_HPP_
#define AMTOP_SPACE_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amtop/subset.hpp"

namespace amtop {

// Which topology axiom a candidate family breaks.
enum class TopologyAxiom {
  kMissingEmpty,
  kMissingWhole,
  kNotUnionClosed,
  kNotIntersectionClosed,
};

const char* to_string(TopologyAxiom axiom);

// First violated axiom of a rejected family. For the closure axioms, `first`
// and `second` are the lexicographically smallest offending pair.
struct TopologyViolation {
  TopologyAxiom axiom;
  std::optional<SubsetMask> first;
  std::optional<SubsetMask> second;

  std::string describe() const;
  bool operator==(const TopologyViolation&) const = default;
};

class TopologyError : public std::invalid_argument {
 public:
  explicit TopologyError(TopologyViolation violation);
  const TopologyViolation& violation() const { return violation_; }

 private:
  TopologyViolation violation_;
};

// A topology on {0, ..., n-1}. Immutable; the interior of every subset is
// tabulated at construction so interior/closure are single lookups.
class FiniteSpace {
 public:
  FiniteSpace() : FiniteSpace(FamilyMask(1, 0)) {}

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  // Two points, opens {∅, {0}, X}.
  static FiniteSpace sierpinski();

  int n() const { return n_; }
  const FamilyMask& opens() const { return opens_; }
  FamilyMask closeds() const;

  SubsetMask whole() const { return SubsetMask::whole(n_); }
  SubsetMask empty() const { return SubsetMask::empty(n_); }

  bool is_open(SubsetMask a) const { return opens_.contains(a); }
  bool is_closed(SubsetMask a) const { return opens_.contains(a.complement()); }

  SubsetMask interior(SubsetMask a) const { return SubsetMask(interior_[a.bits()], n_); }
  SubsetMask closure(SubsetMask a) const { return interior(a.complement()).complement(); }

  bool operator==(const FiniteSpace& o) const { return opens_ == o.opens_; }
  auto operator<=>(const FiniteSpace& o) const { return opens_ <=> o.opens_; }

 private:
  friend FiniteSpace validate_topology(int n, FamilyMask family);
  explicit FiniteSpace(FamilyMask opens);

  int n_;
  FamilyMask opens_;
  std::array<MaskBits, subset_count(kMaxPoints)> interior_{};
};

// Empty optional iff `family` is a topology on n points.
std::optional<TopologyViolation> check_topology(int n, FamilyMask family);

// Throws TopologyError naming the first violated axiom.
FiniteSpace validate_topology(int n, FamilyMask family);

// Free-function spellings of the classical operators.
inline SubsetMask interior(const FiniteSpace& space, SubsetMask a) { return space.interior(a); }
inline SubsetMask closure(const FiniteSpace& space, SubsetMask a) { return space.closure(a); }

// All 2^n subsets in increasing mask order.
std::vector<SubsetMask> enumerate_subsets(const FiniteSpace& space);

}  // namespace amtop

#endif  // AMTOP_SPACE_HPP_
