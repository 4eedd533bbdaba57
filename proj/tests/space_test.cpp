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

#include <algorithm>

#include <gtest/gtest.h>

#include "amtop/oracle.hpp"
#include "amtop/space.hpp"
#include "test_util.hpp"

namespace amtop {
namespace {

using testing::family;
using testing::set;
using testing::space;

TEST(SubsetMask, BasicOperations) {
  const SubsetMask a = set(3, {0, 2});
  EXPECT_EQ(a.bits(), 0b101U);
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(a.complement(), set(3, {1}));
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_EQ(a | set(3, {1}), SubsetMask::whole(3));
  EXPECT_EQ(a & set(3, {1, 2}), set(3, {2}));
  EXPECT_EQ(a.minus(set(3, {2})), set(3, {0}));
  EXPECT_EQ(a.to_string(), "{0,2}");
  EXPECT_EQ(SubsetMask::empty(2).to_string(), "{}");
  EXPECT_TRUE(set(3, {2}).is_subset_of(a));
  EXPECT_FALSE(a.contains(1));
  EXPECT_FALSE(a.contains(7));
}

TEST(SubsetMask, RejectsOutOfRange) {
  EXPECT_THROW(SubsetMask(0b100, 2), std::out_of_range);
  EXPECT_THROW(SubsetMask(0, 6), std::out_of_range);
  EXPECT_THROW(SubsetMask::singleton(2, 2), std::out_of_range);
  EXPECT_THROW(set(2, {3}), std::out_of_range);
}

TEST(FamilyMask, Members) {
  const FamilyMask f = family(2, {{}, {1}, {0, 1}});
  EXPECT_EQ(f.count(), 3);
  EXPECT_TRUE(f.contains(set(2, {1})));
  EXPECT_FALSE(f.contains(set(2, {0})));
  EXPECT_EQ(f.members(), (std::vector<SubsetMask>{set(2, {}), set(2, {1}), set(2, {0, 1})}));
  EXPECT_EQ(FamilyMask::powerset(2).count(), 4);
  EXPECT_EQ(FamilyMask::powerset(5).count(), 32);
}

TEST(ValidateTopology, AcceptsSmallTopologies) {
  EXPECT_NO_THROW(space(1, {{}, {0}}));
  EXPECT_NO_THROW(space(0, {{}}));
  EXPECT_EQ(space(2, {{}, {0}, {0, 1}}), FiniteSpace::sierpinski());
  EXPECT_EQ(space(2, {{}, {0}, {1}, {0, 1}}), FiniteSpace::discrete(2));
  EXPECT_EQ(space(3, {{}, {0, 1, 2}}), FiniteSpace::indiscrete(3));
}

TEST(ValidateTopology, MissingWhole) {
  try {
    validate_topology(2, family(2, {{}, {0}, {1}}));
    FAIL() << "expected TopologyError";
  } catch (const TopologyError& e) {
    EXPECT_EQ(e.violation().axiom, TopologyAxiom::kMissingWhole);
    EXPECT_NE(std::string(e.what()).find("MissingWhole"), std::string::npos);
  }
}

TEST(ValidateTopology, MissingEmpty) {
  const auto v = check_topology(2, family(2, {{0, 1}, {0}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, TopologyAxiom::kMissingEmpty);
}

TEST(ValidateTopology, UnionWitnessIsSmallestPair) {
  const auto v = check_topology(3, family(3, {{}, {0}, {1}, {2}, {0, 1, 2}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, TopologyAxiom::kNotUnionClosed);
  EXPECT_EQ(v->first, set(3, {0}));
  EXPECT_EQ(v->second, set(3, {1}));
  EXPECT_EQ(v->describe(), "NotUnionClosed({0}, {1})");
}

TEST(ValidateTopology, IntersectionWitness) {
  const auto v = check_topology(3, family(3, {{}, {0, 1}, {1, 2}, {0, 1, 2}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, TopologyAxiom::kNotIntersectionClosed);
  EXPECT_EQ(v->first, set(3, {0, 1}));
  EXPECT_EQ(v->second, set(3, {1, 2}));
}

TEST(ValidateTopology, WidthMismatch) {
  EXPECT_THROW(check_topology(3, family(2, {{}, {0, 1}})), std::invalid_argument);
}

TEST(ValidateTopology, AgreesWithBruteForceOnAllFamiliesOfThreePoints) {
  const auto census = oracle::oracle_enumerate_topologies(3);
  std::size_t accepted = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 8); ++bits) {
    const FamilyMask f(static_cast<FamilyMask::Word>(bits), 3);
    const bool ok = !check_topology(3, f).has_value();
    const bool expected = std::binary_search(census.families.begin(), census.families.end(),
                                             static_cast<std::uint32_t>(bits));
    EXPECT_EQ(ok, expected) << bits;
    accepted += ok;
  }
  EXPECT_EQ(accepted, 29U);
}

TEST(InteriorClosure, Examples) {
  const FiniteSpace s = FiniteSpace::sierpinski();
  EXPECT_EQ(s.interior(set(2, {1})), set(2, {}));
  EXPECT_EQ(s.interior(set(2, {0})), set(2, {0}));
  EXPECT_EQ(s.closure(set(2, {0})), set(2, {0, 1}));
  EXPECT_EQ(s.closure(set(2, {1})), set(2, {1}));
  EXPECT_EQ(closure(s, set(2, {})), set(2, {}));
  const FiniteSpace i = FiniteSpace::indiscrete(3);
  EXPECT_EQ(i.closure(set(3, {2})), SubsetMask::whole(3));
  EXPECT_EQ(interior(i, set(3, {0, 1})), SubsetMask::empty(3));
}

TEST(InteriorClosure, KuratowskiPropertiesOnEverySmallSpace) {
  for (const auto& s : testing::spaces_up_to(3)) {
    const auto naive = oracle::from_space(s);
    for (const auto& a : enumerate_subsets(s)) {
      const SubsetMask in = s.interior(a), cl = s.closure(a);
      EXPECT_TRUE(in.is_subset_of(a));
      EXPECT_TRUE(a.is_subset_of(cl));
      EXPECT_EQ(s.interior(in), in);
      EXPECT_EQ(s.closure(cl), cl);
      EXPECT_TRUE(s.is_open(in));
      EXPECT_TRUE(s.is_closed(cl));
      EXPECT_EQ(cl, s.interior(a.complement()).complement());
      EXPECT_EQ(in.bits(), oracle::oracle_interior(naive, a.bits()));
      EXPECT_EQ(cl.bits(), oracle::oracle_closure(naive, a.bits()));
      for (const auto& b : enumerate_subsets(s)) {
        if (a.is_subset_of(b)) {
          EXPECT_TRUE(in.is_subset_of(s.interior(b)));
          EXPECT_TRUE(cl.is_subset_of(s.closure(b)));
        }
      }
    }
  }
}

TEST(EnumerateSubsets, MaskOrder) {
  const auto subsets = enumerate_subsets(FiniteSpace::discrete(2));
  ASSERT_EQ(subsets.size(), 4U);
  EXPECT_EQ(subsets[0], set(2, {}));
  EXPECT_EQ(subsets[1], set(2, {0}));
  EXPECT_EQ(subsets[2], set(2, {1}));
  EXPECT_EQ(subsets[3], set(2, {0, 1}));
  EXPECT_EQ(enumerate_subsets(FiniteSpace()).size(), 1U);
}

TEST(FiniteSpace, ClosedsAreComplementsOfOpens) {
  for (const auto& s : testing::spaces_up_to(3)) {
    for (const auto& u : s.opens().members()) EXPECT_TRUE(s.closeds().contains(u.complement()));
    EXPECT_EQ(s.closeds().count(), s.opens().count());
  }
}

}  // namespace
}  // namespace amtop
