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

#include <gtest/gtest.h>

#include "amtop/io.hpp"
#include "amtop/oracle.hpp"
#include "amtop/theorems.hpp"
#include "test_util.hpp"

namespace amtop {
namespace {

using testing::set;

Universe pairs(int lo, int hi) { return Universe{UniverseShape::kPairs, lo, hi}; }

TEST(Registry, NamesRoundTrip) {
  EXPECT_EQ(kAllAudits.size(), 13U);
  for (AuditId id : kAllAudits) EXPECT_EQ(parse_audit_id(audit_name(id)), id);
  EXPECT_EQ(audit_name(AuditId::kThm3_7), "thm-3-7");
  EXPECT_FALSE(parse_audit_id("thm-9-9"));
  for (Verdict v : {Verdict::kVerified, Verdict::kRefuted, Verdict::kVacuouslyTrue}) {
    EXPECT_EQ(parse_verdict(verdict_name(v)), v);
  }
  EXPECT_EQ(shape_of(AuditId::kCor3_3), UniverseShape::kTriples);
  EXPECT_EQ(shape_of(AuditId::kProp3_8), UniverseShape::kSpaces);
  EXPECT_EQ(pairs(0, 3).describe(), "pairs-0-3");
}

TEST(Verdict, Rules) {
  EXPECT_EQ(verdict_for(0, 0), Verdict::kVacuouslyTrue);
  EXPECT_EQ(verdict_for(5, 0), Verdict::kVerified);
  EXPECT_EQ(verdict_for(5, 1), Verdict::kRefuted);
}

TEST(Universe, Limits) {
  EXPECT_THROW(run_audit(AuditId::kThm3_1, pairs(0, 4)), UniverseTooLarge);
  EXPECT_THROW(run_audit(AuditId::kCor3_3, Universe{UniverseShape::kTriples, 0, 4}), UniverseTooLarge);
  EXPECT_THROW(run_audit(AuditId::kThm3_7, Universe{UniverseShape::kSpaces, 0, 5}), UniverseTooLarge);
  EXPECT_THROW(run_audit(AuditId::kThm3_1, Universe{UniverseShape::kSpaces, 0, 2}),
               std::invalid_argument);
  EXPECT_THROW(run_audit(AuditId::kThm3_1, pairs(3, 2)), std::invalid_argument);
}

TEST(Thm31, OnePointUniverse) {
  const auto r = run_audit(AuditId::kThm3_1, pairs(1, 1));
  EXPECT_EQ(r.instances_checked, 1U);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
}

TEST(Thm31, TwoPointUniverse) {
  const auto r = run_audit(AuditId::kThm3_1, pairs(2, 2));
  EXPECT_EQ(r.instances_checked, 64U);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Thm31, ThreePointUniverse) {
  const auto r = run_audit(AuditId::kThm3_1, pairs(3, 3), RunOptions{0, 10});
  EXPECT_EQ(r.instances_checked, 29U * 29U * 27U);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
}

TEST(Prop32, RefutedWithSmallestWitness) {
  const auto r = run_audit(AuditId::kProp3_2, pairs(0, 3), RunOptions{0, 10});
  EXPECT_EQ(r.verdict, Verdict::kRefuted);
  ASSERT_FALSE(r.counterexamples.empty());
  const auto& cx = r.counterexamples.front();
  const FiniteSpace x = testing::space(3, {{}, {0}, {0, 1, 2}});
  EXPECT_EQ(cx.spaces, (std::vector<FiniteSpace>{x, FiniteSpace::sierpinski()}));
  EXPECT_EQ(cx.maps.front().images(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(cx.subsets, (std::vector<SubsetMask>{set(3, {1}), set(2, {0})}));
  EXPECT_EQ(cx.note, "image-not-alpha-m-closed");
  EXPECT_EQ(run_audit(AuditId::kProp3_2, pairs(0, 2)).verdict, Verdict::kVerified);
}

TEST(Prop32, IdentityMapsNeverFail) {
  for (const auto& x : testing::spaces_up_to(3)) {
    const PointMap id = PointMap::identity(x);
    for (const auto& a : enumerate_subsets(x)) EXPECT_EQ(id.forward_image(a), a);
  }
}

TEST(Composition, ThreePointTriplesRefuteCor33Only) {
  const Universe u{UniverseShape::kTriples, 0, 3};
  const RunOptions opts{0, 10};
  EXPECT_EQ(run_audit(AuditId::kCor3_3, u, opts).verdict, Verdict::kRefuted);
  EXPECT_EQ(run_audit(AuditId::kProp3_4, u, opts).verdict, Verdict::kVerified);
  EXPECT_EQ(run_audit(AuditId::kThm3_5a, u, opts).verdict, Verdict::kVerified);
  EXPECT_EQ(run_audit(AuditId::kThm3_5b, u, opts).verdict, Verdict::kVerified);
}

TEST(Composition, TwoPointTriplesCount) {
  const auto r = run_audit(AuditId::kCor3_3, Universe{UniverseShape::kTriples, 2, 2});
  EXPECT_EQ(r.instances_checked, 4U * 4U * 4U * 4U * 4U);
}

TEST(SpaceAudits, Counts) {
  const Universe u{UniverseShape::kSpaces, 0, 3};
  const auto p38 = run_audit(AuditId::kProp3_8, u);
  EXPECT_EQ(p38.instances_checked, 1U + 2U + 16U + 29U * 8U);
  EXPECT_EQ(p38.verdict, Verdict::kVerified);
  const auto any = run_audit(AuditId::kThm3_7AnySet, u);
  EXPECT_EQ(any.instances_checked, 1U * 2U * 1U + 4U * 4U * 2U + 29U * 8U * 3U);
  EXPECT_EQ(any.hypothesis_satisfied, any.instances_checked);
  const auto t37 = run_audit(AuditId::kThm3_7, u);
  EXPECT_LT(t37.hypothesis_satisfied, t37.instances_checked);
  EXPECT_EQ(t37.verdict, Verdict::kVerified);
}

TEST(Thm39, StatsPresentAndZero) {
  const auto r = run_audit(AuditId::kThm3_9, pairs(0, 3), RunOptions{0, 10});
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  for (const char* key : {"a_implies_b_fails", "a_implies_c_fails", "b_implies_a_fails",
                          "b_implies_c_fails", "c_implies_a_fails", "c_implies_b_fails",
                          "codomain_spaces_failing_hypothesis"}) {
    ASSERT_TRUE(r.stats.contains(key)) << key;
    EXPECT_EQ(r.stats.at(key), 0U) << key;
  }
}

TEST(RunAll, DefaultRegistry) {
  const auto reports = run_all();
  ASSERT_EQ(reports.size(), 13U);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].audit, kAllAudits[i]);
    const auto& r = reports[i];
    EXPECT_EQ(r.verdict == Verdict::kRefuted, r.conclusion_failures > 0);
    EXPECT_EQ(r.verdict == Verdict::kVacuouslyTrue, r.hypothesis_satisfied == 0);
    EXPECT_LE(r.hypothesis_satisfied, r.instances_checked);
    EXPECT_LE(r.conclusion_failures, r.hypothesis_satisfied);
    EXPECT_EQ(r.verdict == Verdict::kRefuted, r.audit == AuditId::kProp3_2) << audit_name(r.audit);
  }
}

TEST(RunAll, EmptySpaceOnly) {
  for (const auto& r : run_all(AuditConfig{0, 0, 0, 0})) {
    EXPECT_NE(r.verdict, Verdict::kRefuted) << audit_name(r.audit);
    EXPECT_TRUE(r.counterexamples.empty());
  }
}

TEST(Determinism, SerialAndParallelReportsAreIdentical) {
  const AuditConfig config{};
  const auto serial = run_all(config, RunOptions{1, 10});
  for (int jobs : {0, 2, 4}) {
    const auto parallel = run_all(config, RunOptions{jobs, 10});
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(dump_canonical(report_to_json(serial[i])), dump_canonical(report_to_json(parallel[i])))
          << audit_name(serial[i].audit) << " jobs=" << jobs;
    }
  }
}

TEST(Counterexamples, CapAndOrdering) {
  const auto capped = run_audit(AuditId::kProp3_2, pairs(0, 3), RunOptions{1, 1});
  EXPECT_EQ(capped.counterexamples.size(), 1U);
  const auto none = run_audit(AuditId::kProp3_2, pairs(0, 3), RunOptions{1, 0});
  EXPECT_TRUE(none.counterexamples.empty());
  EXPECT_EQ(none.conclusion_failures, capped.conclusion_failures);
  const auto full = run_audit(AuditId::kProp3_2, pairs(0, 3), RunOptions{1, 50});
  EXPECT_EQ(full.counterexamples.size(), 50U);
  for (std::size_t i = 1; i < full.counterexamples.size(); ++i) {
    EXPECT_LE(full.counterexamples[i - 1].total_points(), full.counterexamples[i].total_points());
  }
}

TEST(Counterexamples, ReplaySoundness) {
  std::vector<std::pair<AuditId, Counterexample>> all;
  for (const auto& r : run_all(AuditConfig{}, RunOptions{0, 25})) {
    for (const auto& cx : r.counterexamples) all.emplace_back(r.audit, cx);
  }
  const auto triples = run_audit(AuditId::kCor3_3, Universe{UniverseShape::kTriples, 0, 3},
                                 RunOptions{0, 25});
  for (const auto& cx : triples.counterexamples) all.emplace_back(AuditId::kCor3_3, cx);
  ASSERT_GE(all.size(), 50U);
  for (const auto& [id, cx] : all) {
    EXPECT_TRUE(replay_counterexample(id, cx)) << audit_name(id) << " " << cx.note;
    EXPECT_TRUE(replay_counterexample(id, counterexample_from_json(counterexample_to_json(cx))));
  }
}

TEST(Counterexamples, ReplayRejectsTamperedWitnesses) {
  const auto r = run_audit(AuditId::kProp3_2, pairs(0, 3), RunOptions{1, 10});
  for (const auto& cx : r.counterexamples) {
    Counterexample wrong_note = cx;
    wrong_note.note = "something-else";
    EXPECT_FALSE(replay_counterexample(AuditId::kProp3_2, wrong_note));
    Counterexample wrong_image = cx;
    wrong_image.subsets[1] = wrong_image.subsets[1].complement();
    EXPECT_FALSE(replay_counterexample(AuditId::kProp3_2, wrong_image));
    Counterexample truncated = cx;
    truncated.maps.clear();
    EXPECT_FALSE(replay_counterexample(AuditId::kProp3_2, truncated));
    EXPECT_FALSE(replay_counterexample(AuditId::kThm3_1, cx));
  }
}

TEST(Monotonicity, LargerUniversesKeepFailures) {
  for (AuditId id : kAllAudits) {
    const UniverseShape shape = shape_of(id);
    const auto small = run_audit(id, Universe{shape, 0, 2}, RunOptions{0, 10});
    const auto large = run_audit(id, Universe{shape, 0, 3}, RunOptions{0, 10});
    EXPECT_LE(small.instances_checked, large.instances_checked) << audit_name(id);
    EXPECT_LE(small.hypothesis_satisfied, large.hypothesis_satisfied) << audit_name(id);
    EXPECT_LE(small.conclusion_failures, large.conclusion_failures) << audit_name(id);
    if (small.verdict == Verdict::kRefuted) EXPECT_EQ(large.verdict, Verdict::kRefuted);
  }
}

TEST(CrossOracle, TwoPointUniversesAgreeWithLiteralEvaluator) {
  const AuditConfig config{0, 2, 2, 2};
  for (AuditId id : kAllAudits) {
    const Universe u = config.universe_for(id);
    const auto engine = run_audit(id, u);
    const auto slow = oracle::oracle_audit(id, u);
    EXPECT_EQ(engine.instances_checked, slow.instances_checked) << audit_name(id);
    EXPECT_EQ(engine.hypothesis_satisfied, slow.hypothesis_satisfied) << audit_name(id);
    EXPECT_EQ(engine.conclusion_failures, slow.conclusion_failures) << audit_name(id);
    EXPECT_EQ(engine.verdict, slow.verdict) << audit_name(id);
  }
}

TEST(CrossOracle, ThreePointMapAuditsAgree) {
  for (AuditId id : {AuditId::kProp3_2, AuditId::kCor3_10, AuditId::kThm3_1Construction}) {
    const auto engine = run_audit(id, pairs(0, 3), RunOptions{0, 10});
    const auto slow = oracle::oracle_audit(id, pairs(0, 3));
    EXPECT_EQ(engine.hypothesis_satisfied, slow.hypothesis_satisfied) << audit_name(id);
    EXPECT_EQ(engine.conclusion_failures, slow.conclusion_failures) << audit_name(id);
  }
}

TEST(Measure, Probes) {
  const auto small = measure_family_structure(0, 3);
  ASSERT_EQ(small.probes.size(), 3U);
  for (const auto& p : small.probes) {
    EXPECT_EQ(p.spaces_checked, 35U);
    EXPECT_EQ(p.spaces_holding, 35U);
    EXPECT_FALSE(p.minimal_witness);
  }
  EXPECT_EQ(small.probes[0].name, "alpha_m_closed_intersection_closed");
  EXPECT_THROW(measure_family_structure(0, 5), EnumerationTooLarge);
}

TEST(Measure, DiscreteAndIndiscreteHold) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : {FiniteSpace::discrete(n), FiniteSpace::indiscrete(n)}) {
      EXPECT_EQ(family_of(s, SetClass::kAlphaMClosed), FamilyMask::powerset(n));
      EXPECT_FALSE(find_intersection_violation(family_of(s, SetClass::kAlphaMClosed)));
      EXPECT_FALSE(find_union_violation(family_of(s, SetClass::kAlphaMOpen)));
    }
  }
}

}  // namespace
}  // namespace amtop
