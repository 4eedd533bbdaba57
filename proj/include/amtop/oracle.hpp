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

#ifndef AMTOP_ORACLE_HPP_
#define AMTOP_ORACLE_HPP_

// Deliberately naive reference evaluators. Nothing here calls into the
// engine's operators, tables or families: every predicate is a literal loop
// over subsets and open sets. Only the plain value types (FiniteSpace for
// input, SetClass and AuditId as tags) are shared.

#include <cstdint>
#include <string_view>
#include <vector>

#include "amtop/generalized.hpp"
#include "amtop/space.hpp"
#include "amtop/theorems.hpp"

namespace amtop::oracle {

struct NaiveSpace {
  int n = 0;
  std::vector<unsigned> opens;  // open sets as bit patterns, any order
};

NaiveSpace from_space(const FiniteSpace& space);

struct Census {
  int n = 0;
  // Family bit patterns of every topology found, in increasing order.
  std::vector<std::uint32_t> families;
};

// Scans all 2^(2^n) families of subsets. n <= 4.
Census oracle_enumerate_topologies(int n);

unsigned oracle_interior(const NaiveSpace& s, unsigned a);
unsigned oracle_closure(const NaiveSpace& s, unsigned a);
bool oracle_classify(const NaiveSpace& s, unsigned a, SetClass c);
unsigned oracle_alpha_m_interior(const NaiveSpace& s, unsigned a);
unsigned oracle_alpha_m_closure(const NaiveSpace& s, unsigned a);
unsigned oracle_alpha_kernel(const NaiveSpace& s, unsigned a);

// Map-class predicate by name: "continuous", "alpha_m_continuous",
// "alpha_m_irresolute", "alpha_irresolute", "closed_map", "open_map",
// "alpha_m_closed_map", "alpha_m_open_map", "injective", "surjective".
bool oracle_map_property(const NaiveSpace& domain, const NaiveSpace& codomain,
                         const std::vector<int>& images, std::string_view property);

// Counts produced by the slow evaluator for one audit.
struct OracleTally {
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_satisfied = 0;
  std::uint64_t conclusion_failures = 0;
  Verdict verdict = Verdict::kVacuouslyTrue;
};

// Same instance universe and hypothesis split as run_audit, evaluated by
// direct quantification. Intended for universes of at most 2 points.
OracleTally oracle_audit(AuditId id, const Universe& universe);

}  // namespace amtop::oracle

#endif  // AMTOP_ORACLE_HPP_
