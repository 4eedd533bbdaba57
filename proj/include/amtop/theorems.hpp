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

#ifndef AMTOP_THEOREMS_HPP_
#define AMTOP_THEOREMS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amtop/enumerate.hpp"
#include "amtop/maps.hpp"
#include "amtop/space.hpp"

namespace amtop {

// One registered audit. The first ten are the published statements; the
// remaining three are variants with a hypothesis dropped or added, or a
// check of an intermediate construction used inside a proof.
enum class AuditId {
  kThm3_1,
  kProp3_2,
  kCor3_3,
  kProp3_4,
  kThm3_5a,
  kThm3_5b,
  kThm3_7,
  kProp3_8,
  kThm3_9,
  kCor3_10,
  // The set V = (f(U^c))^c is alpha^m-open, contains S, and pulls back into U.
  kThm3_1Construction,
  // kThm3_7 without requiring A to be alpha^m-closed.
  kThm3_7AnySet,
  // kCor3_10 restricted to codomains whose alpha^m-open sets are union-closed.
  kCor3_10UnionClosed,
};

inline constexpr std::array kAllAudits = {
    AuditId::kThm3_1,  AuditId::kProp3_2, AuditId::kCor3_3,  AuditId::kProp3_4,
    AuditId::kThm3_5a, AuditId::kThm3_5b, AuditId::kThm3_7,  AuditId::kProp3_8,
    AuditId::kThm3_9,  AuditId::kCor3_10, AuditId::kThm3_1Construction,
    AuditId::kThm3_7AnySet, AuditId::kCor3_10UnionClosed,
};

// "thm-3-1", "cor-3-10-union-closed", ...
std::string_view audit_name(AuditId id);
std::optional<AuditId> parse_audit_id(std::string_view name);

// What one instance ranges over: a single space, a map X -> Y, or a pair of
// composable maps X -> Y -> Z.
enum class UniverseShape { kSpaces, kPairs, kTriples };

std::string_view shape_name(UniverseShape shape);
UniverseShape shape_of(AuditId id);

// Every space with min_points..max_points points, in catalog order; pairs
// and triples range over the same space list independently for each slot.
struct Universe {
  UniverseShape shape = UniverseShape::kPairs;
  int min_points = 0;
  int max_points = 3;

  std::string describe() const;
  bool operator==(const Universe&) const = default;
};

class UniverseTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Largest max_points accepted per shape.
int universe_limit(UniverseShape shape);

struct AuditConfig {
  int min_points = 0;
  int space_max_points = 3;
  int pair_max_points = 3;
  int triple_max_points = 2;

  Universe universe_for(AuditId id) const;
};

struct RunOptions {
  // 1 = serial reference loop; 0 = OpenMP default thread count.
  int jobs = 1;
  std::size_t counterexample_cap = 10;
};

enum class Verdict { kVerified, kRefuted, kVacuouslyTrue };

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

// A fully materialized failing instance. `subset_spaces[i]` is the index into
// `spaces` of the space `subsets[i]` lives in.
struct Counterexample {
  std::vector<FiniteSpace> spaces;
  std::vector<PointMap> maps;
  std::vector<SubsetMask> subsets;
  std::vector<int> subset_spaces;
  std::string note;

  int total_points() const;
  bool operator==(const Counterexample&) const = default;
};

struct AuditReport {
  AuditId audit = AuditId::kThm3_1;
  Universe universe;
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_satisfied = 0;
  std::uint64_t conclusion_failures = 0;
  Verdict verdict = Verdict::kVacuouslyTrue;
  std::vector<Counterexample> counterexamples;
  // Audit-specific counters, e.g. how many codomains fail a hypothesis.
  std::map<std::string, std::uint64_t> stats;

  bool operator==(const AuditReport&) const = default;
};

Verdict verdict_for(std::uint64_t hypothesis_satisfied, std::uint64_t conclusion_failures);

// Throws UniverseTooLarge if universe.max_points exceeds universe_limit, and
// std::invalid_argument if the shape does not match the audit.
AuditReport run_audit(AuditId id, const Universe& universe, const RunOptions& options = {});

// Every audit in kAllAudits order.
std::vector<AuditReport> run_all(const AuditConfig& config = {}, const RunOptions& options = {});

// Re-evaluates the failure a counterexample records, using only the public
// single-instance predicates. True iff the failure reproduces.
bool replay_counterexample(AuditId id, const Counterexample& cx);

// Empirical probes on the alpha^m families of every space up to max_points.
struct StructureProbe {
  std::string name;
  std::uint64_t spaces_checked = 0;
  std::uint64_t spaces_holding = 0;
  std::optional<Counterexample> minimal_witness;
};

struct StructureReport {
  int min_points = 0;
  int max_points = 4;
  std::vector<StructureProbe> probes;
};

// Probes, in order: alpha^m-closed family intersection-closed, alpha^m-open
// family union-closed, C_{alpha^m}(A) alpha^m-closed for every A.
// Five-point spaces need EnumerationBound::kAllowFivePoints.
StructureReport measure_family_structure(int min_points = 0, int max_points = 4,
                                         const RunOptions& options = {},
                                         EnumerationBound bound = EnumerationBound::kDefault);

}  // namespace amtop

#endif  // AMTOP_THEOREMS_HPP_
