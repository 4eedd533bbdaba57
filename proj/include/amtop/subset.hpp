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

#ifndef AMTOP_SUBSET_HPP_
#define AMTOP_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amtop {

// Largest point count any type in this library accepts. 2^5 subsets fit one
// 32-bit family word.
inline constexpr int kMaxPoints = 5;

// Raw bit pattern of a subset (bit i set <=> point i is a member).
using MaskBits = std::uint32_t;

constexpr MaskBits full_bits(int n) {
  return n >= 32 ? ~MaskBits{0} : ((MaskBits{1} << n) - 1);
}

constexpr std::uint32_t subset_count(int n) { return std::uint32_t{1} << n; }

// A subset of the point set {0, ..., n-1} of some finite space.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr SubsetMask(MaskBits bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxPoints) throw std::out_of_range("point count out of range");
    if ((bits & ~full_bits(n)) != 0) {
      throw std::out_of_range("subset has points outside the space");
    }
  }

  static constexpr SubsetMask empty(int n) { return SubsetMask(0, n); }
  static constexpr SubsetMask whole(int n) { return SubsetMask(full_bits(n), n); }
  static constexpr SubsetMask singleton(int n, int point) {
    if (point < 0 || point >= n) throw std::out_of_range("point index out of range");
    return SubsetMask(MaskBits{1} << point, n);
  }
  static SubsetMask from_points(int n, const std::vector<int>& points);

  constexpr MaskBits bits() const { return bits_; }
  constexpr int n() const { return n_; }

  constexpr bool contains(int point) const {
    return point >= 0 && point < n_ && ((bits_ >> point) & 1U) != 0;
  }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_whole() const { return bits_ == full_bits(n_); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }

  constexpr SubsetMask complement() const {
    return SubsetMask(~bits_ & full_bits(n_), n_);
  }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_, n_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_, n_); }
  constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_, n_); }

  std::vector<int> points() const;
  // "{0,2}" style rendering for diagnostics.
  std::string to_string() const;

  constexpr bool operator==(const SubsetMask&) const = default;
  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  MaskBits bits_ = 0;
  int n_ = 0;
};

// A family of subsets of an n-point set: bit k set <=> the subset with mask k
// belongs to the family. Width is exactly 2^n bits.
class FamilyMask {
 public:
  using Word = std::uint32_t;

  constexpr FamilyMask() = default;
  constexpr FamilyMask(Word bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxPoints) throw std::out_of_range("point count out of range");
    if ((bits & ~width_bits(n)) != 0) throw std::out_of_range("family wider than 2^n");
  }

  static constexpr FamilyMask none(int n) { return FamilyMask(0, n); }
  static constexpr FamilyMask powerset(int n) { return FamilyMask(width_bits(n), n); }
  static FamilyMask from_subsets(int n, const std::vector<SubsetMask>& members);

  constexpr Word bits() const { return bits_; }
  constexpr int n() const { return n_; }
  constexpr std::uint32_t width() const { return subset_count(n_); }

  constexpr bool contains(MaskBits k) const { return ((bits_ >> k) & 1U) != 0; }
  constexpr bool contains(SubsetMask s) const { return contains(s.bits()); }
  constexpr FamilyMask with(SubsetMask s) const {
    return FamilyMask(bits_ | (Word{1} << s.bits()), n_);
  }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool is_subfamily_of(FamilyMask o) const { return (bits_ & ~o.bits_) == 0; }

  // Members in increasing mask order.
  std::vector<SubsetMask> members() const;

  constexpr bool operator==(const FamilyMask&) const = default;
  constexpr auto operator<=>(const FamilyMask&) const = default;

 private:
  static constexpr Word width_bits(int n) {
    return n >= kMaxPoints ? ~Word{0} : ((Word{1} << (1U << n)) - 1);
  }

  Word bits_ = 0;
  int n_ = 0;
};

}  // namespace amtop

#endif  // AMTOP_SUBSET_HPP_
