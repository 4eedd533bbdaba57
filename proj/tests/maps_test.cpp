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

#include <random>

#include <gtest/gtest.h>

#include "amtop/maps.hpp"
#include "amtop/oracle.hpp"
#include "test_util.hpp"

namespace amtop {
namespace {

using testing::set;

const FiniteSpace kSierpinski = FiniteSpace::sierpinski();
const FiniteSpace kIndiscrete2 = FiniteSpace::indiscrete(2);
const FiniteSpace kDiscrete2 = FiniteSpace::discrete(2);

PointMap map(const FiniteSpace& x, const FiniteSpace& y, std::vector<int> images) {
  return PointMap(x, y, images);
}

TEST(PointMap, Construction) {
  EXPECT_THROW(map(kDiscrete2, kDiscrete2, {0}), std::out_of_range);
  EXPECT_THROW(map(kDiscrete2, kDiscrete2, {0, 2}), std::out_of_range);
  EXPECT_THROW(map(kDiscrete2, kDiscrete2, {-1, 0}), std::out_of_range);
  const PointMap f = map(kDiscrete2, kSierpinski, {1, 0});
  EXPECT_EQ(f.image(0), 1);
  EXPECT_EQ(f.images(), (std::vector<int>{1, 0}));
  EXPECT_TRUE(f.is_injective());
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(PointMap::constant(kDiscrete2, kDiscrete2, 0).is_surjective());
}

TEST(PointMap, EqualityIncludesTopologies) {
  EXPECT_EQ(map(kDiscrete2, kSierpinski, {0, 1}), map(kDiscrete2, kSierpinski, {0, 1}));
  EXPECT_FALSE(map(kDiscrete2, kSierpinski, {0, 1}) == map(kDiscrete2, kIndiscrete2, {0, 1}));
}

TEST(Images, Examples) {
  const PointMap id = PointMap::identity(FiniteSpace::discrete(3));
  for (const auto& a : enumerate_subsets(id.domain())) EXPECT_EQ(id.forward_image(a), a);
  const PointMap c = PointMap::constant(FiniteSpace::indiscrete(3), kDiscrete2, 1);
  for (const auto& a : enumerate_subsets(c.domain())) {
    if (!a.is_empty()) EXPECT_EQ(c.forward_image(a), set(2, {1}));
  }
  EXPECT_EQ(map(kDiscrete2, kDiscrete2, {1, 1}).preimage(set(2, {0})), set(2, {}));
}

TEST(Predicates, Continuity) {
  for (const auto& s : testing::spaces_up_to(3)) {
    const PointMap id = PointMap::identity(s);
    EXPECT_TRUE(is_continuous(id));
    EXPECT_TRUE(is_alpha_m_irresolute(id));
    EXPECT_TRUE(is_alpha_irresolute(id));
    EXPECT_TRUE(is_closed_map(id));
    EXPECT_TRUE(is_open_map(id));
    EXPECT_TRUE(is_alpha_m_closed_map(id));
    EXPECT_TRUE(is_alpha_m_open_map(id));
  }
  EXPECT_TRUE(is_continuous(map(kSierpinski, kIndiscrete2, {1, 0})));
  EXPECT_FALSE(is_continuous(map(kIndiscrete2, kSierpinski, {0, 1})));
}

TEST(Predicates, AlphaMContinuity) {
  EXPECT_TRUE(is_alpha_m_continuous(PointMap::identity(FiniteSpace::discrete(3))));
  EXPECT_TRUE(is_alpha_m_continuous(map(kSierpinski, FiniteSpace::indiscrete(3), {2, 0})));
  EXPECT_FALSE(is_alpha_m_continuous(map(kSierpinski, kDiscrete2, {0, 1})));
}

TEST(Predicates, Irresolute) {
  for (const auto& m : enumerate_maps(FiniteSpace::discrete(3), FiniteSpace::indiscrete(2))) {
    EXPECT_TRUE(is_alpha_m_irresolute(m));
  }
  EXPECT_FALSE(is_alpha_m_irresolute(map(kSierpinski, kDiscrete2, {0, 1})));
  for (const auto& x : testing::spaces_up_to(3)) {
    for (const auto& y : enumerate_topologies(2).spaces) {
      for (int v = 0; v < 2; ++v) {
        if (x.n() > 0) EXPECT_TRUE(is_alpha_irresolute(PointMap::constant(x, y, v)));
      }
    }
  }
  EXPECT_FALSE(is_alpha_irresolute(map(kIndiscrete2, kSierpinski, {0, 1})));
}

TEST(Predicates, OpenAndClosedMaps) {
  EXPECT_TRUE(is_closed_map(PointMap::constant(kSierpinski, kDiscrete2, 1)));
  EXPECT_TRUE(is_open_map(PointMap::constant(kSierpinski, kDiscrete2, 0)));
  EXPECT_FALSE(is_closed_map(map(kSierpinski, kIndiscrete2, {0, 1})));
  EXPECT_FALSE(oracle::oracle_map_property(oracle::from_space(kSierpinski),
                                           oracle::from_space(kIndiscrete2), {0, 1}, "closed_map"));
  for (const auto& x : testing::spaces_up_to(3)) {
    for (const auto& m : enumerate_maps(x, FiniteSpace::indiscrete(3))) {
      EXPECT_TRUE(is_alpha_m_closed_map(m));
      EXPECT_TRUE(is_alpha_m_open_map(m));
    }
  }
  EXPECT_TRUE(is_alpha_m_closed_map(map(kIndiscrete2, kSierpinski, {0, 1})));
}

TEST(Predicates, AgreeWithOracle) {
  const std::vector<std::string> names = {"continuous", "alpha_m_continuous", "alpha_m_irresolute",
                                          "alpha_irresolute", "closed_map", "open_map",
                                          "alpha_m_closed_map", "alpha_m_open_map",
                                          "injective", "surjective"};
  for (const auto& x : enumerate_spaces(0, 2)) {
    for (const auto& y : enumerate_spaces(0, 3)) {
      const auto nx = oracle::from_space(x), ny = oracle::from_space(y);
      for (const auto& f : enumerate_maps(x, y)) {
        const std::vector<bool> engine = {
            is_continuous(f),    is_alpha_m_continuous(f), is_alpha_m_irresolute(f),
            is_alpha_irresolute(f), is_closed_map(f),      is_open_map(f),
            is_alpha_m_closed_map(f), is_alpha_m_open_map(f), f.is_injective(), f.is_surjective()};
        for (std::size_t i = 0; i < names.size(); ++i) {
          EXPECT_EQ(engine[i], oracle::oracle_map_property(nx, ny, f.images(), names[i])) << names[i];
        }
      }
    }
  }
}

TEST(Predicates, ProfileOverloadsMatch) {
  for (const auto& x : enumerate_spaces(0, 2)) {
    const SpaceProfile px(x);
    for (const auto& y : enumerate_spaces(0, 2)) {
      const SpaceProfile py(y);
      for (const auto& f : enumerate_maps(x, y)) {
        EXPECT_EQ(is_continuous(f), is_continuous(f, px, py));
        EXPECT_EQ(is_alpha_m_continuous(f), is_alpha_m_continuous(f, px, py));
        EXPECT_EQ(is_alpha_m_irresolute(f), is_alpha_m_irresolute(f, px, py));
        EXPECT_EQ(is_alpha_irresolute(f), is_alpha_irresolute(f, px, py));
        EXPECT_EQ(is_closed_map(f), is_closed_map(f, px, py));
        EXPECT_EQ(is_open_map(f), is_open_map(f, px, py));
        EXPECT_EQ(is_alpha_m_closed_map(f), is_alpha_m_closed_map(f, px, py));
        EXPECT_EQ(is_alpha_m_open_map(f), is_alpha_m_open_map(f, px, py));
      }
    }
  }
}

TEST(Compose, Examples) {
  const PointMap f = map(kDiscrete2, kDiscrete2, {0, 1});
  const PointMap g = map(kDiscrete2, kDiscrete2, {1, 1});
  EXPECT_EQ(compose(g, f).images(), (std::vector<int>{1, 1}));
  const PointMap h = map(kSierpinski, kDiscrete2, {1, 0});
  EXPECT_EQ(compose(PointMap::identity(kDiscrete2), h), h);
  EXPECT_EQ(compose(h, PointMap::identity(kSierpinski)), h);
}

TEST(Compose, DomainMismatch) {
  const PointMap f = map(kDiscrete2, kSierpinski, {0, 1});
  const PointMap g = map(kDiscrete2, kDiscrete2, {0, 1});
  EXPECT_THROW(compose(g, f), DomainMismatch);
  EXPECT_THROW(compose(PointMap::identity(FiniteSpace::discrete(3)), f), DomainMismatch);
}

TEST(EnumerateMaps, CountsAndOrder) {
  EXPECT_EQ(enumerate_maps(FiniteSpace::discrete(1), FiniteSpace::discrete(1)).size(), 1U);
  EXPECT_EQ(enumerate_maps(kDiscrete2, kSierpinski).size(), 4U);
  const auto maps = enumerate_maps(FiniteSpace::discrete(3), kDiscrete2);
  ASSERT_EQ(maps.size(), 8U);
  for (std::size_t i = 1; i < maps.size(); ++i) EXPECT_LT(maps[i - 1].images(), maps[i].images());
  EXPECT_EQ(maps.front().images(), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(maps.back().images(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(enumerate_maps(FiniteSpace(), kDiscrete2).size(), 1U);
  EXPECT_TRUE(enumerate_maps(kDiscrete2, FiniteSpace()).empty());
}

TEST(Properties, GaloisAndBooleanPreimage) {
  for (const auto& x : enumerate_spaces(0, 3)) {
    for (const auto& y : enumerate_spaces(0, 2)) {
      for (const auto& f : enumerate_maps(x, y)) {
        EXPECT_EQ(f.forward_image(x.empty()), y.empty());
        EXPECT_EQ(f.preimage(y.whole()), x.whole());
        for (const auto& a : enumerate_subsets(x)) {
          EXPECT_TRUE(a.is_subset_of(f.preimage(f.forward_image(a))));
        }
        for (const auto& b : enumerate_subsets(y)) {
          EXPECT_TRUE(f.forward_image(f.preimage(b)).is_subset_of(b));
          EXPECT_EQ(f.preimage(b.complement()), f.preimage(b).complement());
          for (const auto& c : enumerate_subsets(y)) {
            EXPECT_EQ(f.preimage(b | c), f.preimage(b) | f.preimage(c));
            EXPECT_EQ(f.preimage(b & c), f.preimage(b) & f.preimage(c));
          }
        }
      }
    }
  }
}

TEST(Properties, ContinuityImplications) {
  for (const auto& x : testing::spaces_up_to(3)) {
    const SpaceProfile px(x);
    for (const auto& y : testing::spaces_up_to(3)) {
      const SpaceProfile py(y);
      for (const auto& f : enumerate_maps(x, y)) {
        const bool am_cont = is_alpha_m_continuous(f, px, py);
        if (is_continuous(f, px, py)) EXPECT_TRUE(am_cont);
        if (is_alpha_m_irresolute(f, px, py)) EXPECT_TRUE(am_cont);
        if (is_closed_map(f, px, py)) EXPECT_TRUE(is_alpha_m_closed_map(f, px, py));
        if (is_open_map(f, px, py)) EXPECT_TRUE(is_alpha_m_open_map(f, px, py));
      }
    }
  }
}

TEST(Properties, ComposeAssociativeOnRandomChains) {
  const auto spaces = testing::spaces_up_to(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, spaces.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<FiniteSpace, 4> s;
    for (auto& e : s) {
      do e = spaces[pick(rng)]; while (e.n() == 0);
    }
    std::vector<PointMap> chain;
    for (int i = 0; i < 3; ++i) {
      const auto all = enumerate_maps(s[i], s[i + 1]);
      chain.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    }
    const PointMap left = compose(chain[2], compose(chain[1], chain[0]));
    const PointMap right = compose(compose(chain[2], chain[1]), chain[0]);
    EXPECT_EQ(left, right);
    for (const auto& c : enumerate_subsets(s[3])) {
      EXPECT_EQ(left.preimage(c), chain[0].preimage(chain[1].preimage(chain[2].preimage(c))));
    }
  }
}

}  // namespace
}  // namespace amtop
