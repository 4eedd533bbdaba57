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

#include "amtop/theorems.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "amtop/enumerate.hpp"
#include "amtop/generalized.hpp"
#include "amtop/operators.hpp"
#include "amtop/parallel.hpp"

namespace amtop {

std::string_view audit_name(AuditId id) {
  switch (id) {
    case AuditId::kThm3_1: return "thm-3-1";
    case AuditId::kProp3_2: return "prop-3-2";
    case AuditId::kCor3_3: return "cor-3-3";
    case AuditId::kProp3_4: return "prop-3-4";
    case AuditId::kThm3_5a: return "thm-3-5a";
    case AuditId::kThm3_5b: return "thm-3-5b";
    case AuditId::kThm3_7: return "thm-3-7";
    case AuditId::kProp3_8: return "prop-3-8";
    case AuditId::kThm3_9: return "thm-3-9";
    case AuditId::kCor3_10: return "cor-3-10";
    case AuditId::kThm3_1Construction: return "thm-3-1-construction";
    case AuditId::kThm3_7AnySet: return "thm-3-7-any-set";
    case AuditId::kCor3_10UnionClosed: return "cor-3-10-union-closed";
  }
  return "?";
}

std::optional<AuditId> parse_audit_id(std::string_view name) {
  for (AuditId id : kAllAudits) {
    if (audit_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view shape_name(UniverseShape shape) {
  switch (shape) {
    case UniverseShape::kSpaces: return "spaces";
    case UniverseShape::kPairs: return "pairs";
    case UniverseShape::kTriples: return "triples";
  }
  return "?";
}

UniverseShape shape_of(AuditId id) {
  switch (id) {
    case AuditId::kThm3_7:
    case AuditId::kThm3_7AnySet:
    case AuditId::kProp3_8:
      return UniverseShape::kSpaces;
    case AuditId::kCor3_3:
    case AuditId::kProp3_4:
    case AuditId::kThm3_5a:
    case AuditId::kThm3_5b:
      return UniverseShape::kTriples;
    default:
      return UniverseShape::kPairs;
  }
}

std::string Universe::describe() const {
  return std::string(shape_name(shape)) + "-" + std::to_string(min_points) + "-" +
         std::to_string(max_points);
}

int universe_limit(UniverseShape shape) {
  return shape == UniverseShape::kSpaces ? 4 : 3;
}

Universe AuditConfig::universe_for(AuditId id) const {
  const UniverseShape shape = shape_of(id);
  switch (shape) {
    case UniverseShape::kSpaces: return {shape, min_points, space_max_points};
    case UniverseShape::kPairs: return {shape, min_points, pair_max_points};
    case UniverseShape::kTriples: return {shape, min_points, triple_max_points};
  }
  return {};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "Verified";
    case Verdict::kRefuted: return "Refuted";
    case Verdict::kVacuouslyTrue: return "VacuouslyTrue";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::kVerified, Verdict::kRefuted, Verdict::kVacuouslyTrue}) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

Verdict verdict_for(std::uint64_t hypothesis_satisfied, std::uint64_t conclusion_failures) {
  if (conclusion_failures > 0) return Verdict::kRefuted;
  if (hypothesis_satisfied == 0) return Verdict::kVacuouslyTrue;
  return Verdict::kVerified;
}

int Counterexample::total_points() const {
  int total = 0;
  for (const auto& s : spaces) total += s.n();
  return total;
}

namespace {

using Placed = std::pair<SubsetMask, int>;

Counterexample make_cx(std::vector<FiniteSpace> spaces, std::vector<PointMap> maps,
                       std::initializer_list<Placed> subsets, std::string note) {
  Counterexample cx;
  cx.spaces = std::move(spaces);
  cx.maps = std::move(maps);
  for (const auto& [s, where] : subsets) {
    cx.subsets.push_back(s);
    cx.subset_spaces.push_back(where);
  }
  cx.note = std::move(note);
  return cx;
}

// Per-chunk accumulator. Chunks are merged in index order afterwards.
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t hypothesis = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> witnesses;
  std::map<std::string, std::uint64_t> stats;

  template <class Make>
  void fail(std::size_t cap, Make&& make) {
    ++failures;
    if (witnesses.size() < cap) witnesses.push_back(make());
  }
};

std::vector<MaskBits> members(FamilyMask family) {
  std::vector<MaskBits> out;
  for (MaskBits k = 0; k < family.width(); ++k) {
    if (family.contains(k)) out.push_back(k);
  }
  return out;
}

bool within(MaskBits a, MaskBits b) { return (a & ~b) == 0; }

// ---------------------------------------------------------------------------
// Map audits (X -> Y)

struct PairContext {
  const SpaceProfile& x;
  const SpaceProfile& y;
  bool codomain_union_closed;
  std::size_t cap;
};

std::optional<SetPair> first_cover_gap(const PointMap& f, const SpaceProfile& x,
                                       const SpaceProfile& y) {
  const auto opens = members(x.family(SetClass::kOpen));
  const auto am_open = members(y.family(SetClass::kAlphaMOpen));
  for (MaskBits s = 0; s < subset_count(y.n()); ++s) {
    const MaskBits pre = f.preimage(SubsetMask(s, y.n())).bits();
    for (MaskBits u : opens) {
      if (!within(pre, u)) continue;
      bool covered = false;
      for (MaskBits v : am_open) {
        if (within(s, v) && within(f.preimage(SubsetMask(v, y.n())).bits(), u)) {
          covered = true;
          break;
        }
      }
      if (!covered) return SetPair{SubsetMask(s, y.n()), SubsetMask(u, x.n())};
    }
  }
  return std::nullopt;
}

// First member of `from` whose image misses `to`.
std::optional<SubsetMask> first_image_outside(const PointMap& f, FamilyMask from, FamilyMask to) {
  for (MaskBits k : members(from)) {
    const SubsetMask a(k, from.n());
    if (!to.contains(f.forward_image(a))) return a;
  }
  return std::nullopt;
}

void audit_thm_3_1(const PairContext& c, const PointMap& f, Tally& t) {
  ++t.instances;
  ++t.hypothesis;
  const bool closed_map = is_alpha_m_closed_map(f, c.x, c.y);
  const auto gap = first_cover_gap(f, c.x, c.y);
  if (closed_map && gap) {
    t.fail(c.cap, [&] {
      return make_cx({c.x.space(), c.y.space()}, {f}, {{gap->first, 1}, {gap->second, 0}},
                     "closed-map-without-cover");
    });
  } else if (!closed_map && !gap) {
    const auto bad = first_image_outside(f, c.x.family(SetClass::kClosed),
                                         c.y.family(SetClass::kAlphaMClosed));
    t.fail(c.cap, [&] {
      return make_cx({c.x.space(), c.y.space()}, {f}, {{*bad, 0}, {f.forward_image(*bad), 1}},
                     "cover-without-closed-map");
    });
  }
}

void audit_thm_3_1_construction(const PairContext& c, const PointMap& f, Tally& t) {
  ++t.instances;
  if (!is_alpha_m_closed_map(f, c.x, c.y)) return;
  ++t.hypothesis;
  const FamilyMask am_open = c.y.family(SetClass::kAlphaMOpen);
  for (MaskBits s = 0; s < subset_count(c.y.n()); ++s) {
    const SubsetMask target(s, c.y.n());
    const SubsetMask pre = f.preimage(target);
    for (MaskBits u : members(c.x.family(SetClass::kOpen))) {
      const SubsetMask open(u, c.x.n());
      if (!pre.is_subset_of(open)) continue;
      const SubsetMask v = f.forward_image(open.complement()).complement();
      if (!am_open.contains(v) || !target.is_subset_of(v) || !f.preimage(v).is_subset_of(open)) {
        t.fail(c.cap, [&] {
          return make_cx({c.x.space(), c.y.space()}, {f}, {{target, 1}, {open, 0}, {v, 1}},
                         "construction-fails");
        });
        return;
      }
    }
  }
}

void audit_prop_3_2(const PairContext& c, const PointMap& f, Tally& t) {
  const bool map_hypothesis = is_alpha_irresolute(f, c.x, c.y) && is_alpha_m_closed_map(f, c.x, c.y);
  for (MaskBits a = 0; a < subset_count(c.x.n()); ++a) {
    ++t.instances;
    const SubsetMask set(a, c.x.n());
    if (!map_hypothesis || !c.x.is(SetClass::kAlphaMClosed, set)) continue;
    ++t.hypothesis;
    const SubsetMask image = f.forward_image(set);
    if (!c.y.is(SetClass::kAlphaMClosed, image)) {
      t.fail(c.cap, [&] {
        return make_cx({c.x.space(), c.y.space()}, {f}, {{set, 0}, {image, 1}},
                       "image-not-alpha-m-closed");
      });
    }
  }
}

const char* const kImplicationKeys[] = {"a_implies_b_fails", "a_implies_c_fails",
                                        "b_implies_a_fails", "b_implies_c_fails",
                                        "c_implies_a_fails", "c_implies_b_fails"};

void audit_thm_3_9(const PairContext& c, const PointMap& f, Tally& t) {
  ++t.instances;
  if (!c.codomain_union_closed) return;
  ++t.hypothesis;
  const bool a = is_alpha_m_open_map(f, c.x, c.y);

  std::optional<SubsetMask> b_gap;
  for (MaskBits k = 0; k < subset_count(c.x.n()) && !b_gap; ++k) {
    const SubsetMask set(k, c.x.n());
    const SubsetMask lhs = f.forward_image(c.x.space().interior(set));
    if (!lhs.is_subset_of(c.y.alpha_m_interior(f.forward_image(set)))) b_gap = set;
  }
  const bool b = !b_gap;

  // U is a neighbourhood of x iff x ∈ int(U); f(U) contains an alpha^m-nbhd
  // of f(x) iff f(x) ∈ I_{alpha^m}(f(U)).
  std::optional<std::pair<SubsetMask, int>> c_gap;
  for (MaskBits k = 0; k < subset_count(c.x.n()) && !c_gap; ++k) {
    const SubsetMask u(k, c.x.n());
    const SubsetMask core = c.x.space().interior(u);
    const SubsetMask reach = c.y.alpha_m_interior(f.forward_image(u));
    for (int p = 0; p < c.x.n(); ++p) {
      if (core.contains(p) && !reach.contains(f.image(p))) {
        c_gap = std::make_pair(u, p);
        break;
      }
    }
  }
  const bool cc = !c_gap;

  const bool fails[] = {a && !b, a && !cc, b && !a, b && !cc, cc && !a, cc && !b};
  for (std::size_t i = 0; i < 6; ++i) {
    if (fails[i]) ++t.stats[kImplicationKeys[i]];
  }
  if (a == b && b == cc) return;
  t.fail(c.cap, [&] {
    Counterexample cx = make_cx({c.x.space(), c.y.space()}, {f}, {},
                                std::string("a=") + (a ? "1" : "0") + " b=" + (b ? "1" : "0") +
                                    " c=" + (cc ? "1" : "0"));
    if (b_gap) {
      cx.subsets.push_back(*b_gap);
      cx.subset_spaces.push_back(0);
    }
    if (c_gap) {
      cx.subsets.push_back(c_gap->first);
      cx.subset_spaces.push_back(0);
      cx.subsets.push_back(SubsetMask::singleton(c.x.n(), c_gap->second));
      cx.subset_spaces.push_back(0);
    }
    return cx;
  });
}

void audit_cor_3_10(const PairContext& c, const PointMap& f, Tally& t, bool require_union_closed) {
  ++t.instances;
  if (require_union_closed && !c.codomain_union_closed) return;
  ++t.hypothesis;
  const bool open_map = is_alpha_m_open_map(f, c.x, c.y);
  std::optional<SubsetMask> gap;
  for (MaskBits k = 0; k < subset_count(c.y.n()) && !gap; ++k) {
    const SubsetMask b(k, c.y.n());
    if (!f.preimage(c.y.alpha_m_closure(b)).is_subset_of(c.x.space().closure(f.preimage(b)))) {
      gap = b;
    }
  }
  if (open_map && gap) {
    t.fail(c.cap, [&] {
      return make_cx({c.x.space(), c.y.space()}, {f}, {{*gap, 1}},
                     "open-map-without-closure-bound");
    });
  } else if (!open_map && !gap) {
    const auto bad = first_image_outside(f, c.x.family(SetClass::kOpen),
                                         c.y.family(SetClass::kAlphaMOpen));
    t.fail(c.cap, [&] {
      return make_cx({c.x.space(), c.y.space()}, {f}, {{*bad, 0}, {f.forward_image(*bad), 1}},
                     "closure-bound-without-open-map");
    });
  }
}

Tally run_pair_chunk(AuditId id, const PairContext& c) {
  Tally t;
  if (id == AuditId::kThm3_9) {
    for (const char* key : kImplicationKeys) t.stats[key] = 0;
  }
  for (const PointMap& f : enumerate_maps(c.x.space(), c.y.space())) {
    switch (id) {
      case AuditId::kThm3_1: audit_thm_3_1(c, f, t); break;
      case AuditId::kThm3_1Construction: audit_thm_3_1_construction(c, f, t); break;
      case AuditId::kProp3_2: audit_prop_3_2(c, f, t); break;
      case AuditId::kThm3_9: audit_thm_3_9(c, f, t); break;
      case AuditId::kCor3_10: audit_cor_3_10(c, f, t, false); break;
      case AuditId::kCor3_10UnionClosed: audit_cor_3_10(c, f, t, true); break;
      default: break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Composition audits (X -> Y -> Z)

struct InnerFacts {
  const PointMap* map;
  bool alpha_m_closed;
  bool closed;
  bool continuous;
  bool surjective;
  std::vector<MaskBits> closed_images;  // f(F) for each closed F of X, ascending F
};

struct OuterFacts {
  const PointMap* map;
  bool alpha_m_closed;
  bool alpha_irresolute;
  bool alpha_m_irresolute;
  bool injective;
  std::array<MaskBits, subset_count(kMaxPoints)> image{};  // g(B) for every B ⊆ Y
};

Tally run_triple_chunk(AuditId id, const SpaceProfile& x, const SpaceProfile& y,
                       const SpaceProfile& z, std::size_t cap) {
  Tally t;
  const auto inner_maps = enumerate_maps(x.space(), y.space());
  const auto outer_maps = enumerate_maps(y.space(), z.space());
  const auto x_closed = members(x.family(SetClass::kClosed));
  const FamilyMask z_am_closed = z.family(SetClass::kAlphaMClosed);

  std::vector<InnerFacts> inner;
  inner.reserve(inner_maps.size());
  for (const auto& f : inner_maps) {
    InnerFacts facts{&f, is_alpha_m_closed_map(f, x, y), is_closed_map(f, x, y),
                     is_continuous(f, x, y), f.is_surjective(), {}};
    for (MaskBits k : x_closed) facts.closed_images.push_back(f.forward_image(SubsetMask(k, x.n())).bits());
    inner.push_back(std::move(facts));
  }
  std::vector<OuterFacts> outer;
  outer.reserve(outer_maps.size());
  for (const auto& g : outer_maps) {
    OuterFacts facts{&g, is_alpha_m_closed_map(g, y, z), is_alpha_irresolute(g, y, z),
                     is_alpha_m_irresolute(g, y, z), g.is_injective(), {}};
    for (MaskBits k = 0; k < subset_count(y.n()); ++k) {
      facts.image[k] = g.forward_image(SubsetMask(k, y.n())).bits();
    }
    outer.push_back(facts);
  }

  for (const auto& f : inner) {
    for (const auto& g : outer) {
      ++t.instances;
      // Index into x_closed of the first closed F with g(f(F)) not alpha^m-closed.
      std::optional<std::size_t> composite_gap;
      for (std::size_t i = 0; i < x_closed.size(); ++i) {
        if (!z_am_closed.contains(g.image[f.closed_images[i]])) {
          composite_gap = i;
          break;
        }
      }
      const bool composite_closed = !composite_gap;

      auto composite_cx = [&] {
        const SubsetMask set(x_closed[*composite_gap], x.n());
        const SubsetMask image(g.image[f.closed_images[*composite_gap]], z.n());
        return make_cx({x.space(), y.space(), z.space()}, {*f.map, *g.map}, {{set, 0}, {image, 2}},
                       "composite-not-alpha-m-closed");
      };

      switch (id) {
        case AuditId::kCor3_3:
          if (!(f.alpha_m_closed && g.alpha_m_closed && g.alpha_irresolute)) break;
          ++t.hypothesis;
          if (!composite_closed) t.fail(cap, composite_cx);
          break;
        case AuditId::kProp3_4:
          if (!(f.closed && g.alpha_m_closed)) break;
          ++t.hypothesis;
          if (!composite_closed) t.fail(cap, composite_cx);
          break;
        case AuditId::kThm3_5a:
          if (!(composite_closed && f.continuous && f.surjective)) break;
          ++t.hypothesis;
          if (!g.alpha_m_closed) {
            t.fail(cap, [&] {
              const auto bad = *first_image_outside(*g.map, y.family(SetClass::kClosed),
                                                    z.family(SetClass::kAlphaMClosed));
              return make_cx({x.space(), y.space(), z.space()}, {*f.map, *g.map},
                             {{bad, 1}, {g.map->forward_image(bad), 2}},
                             "outer-not-alpha-m-closed");
            });
          }
          break;
        case AuditId::kThm3_5b:
          if (!(composite_closed && g.alpha_m_irresolute && g.injective)) break;
          ++t.hypothesis;
          if (!f.alpha_m_closed) {
            t.fail(cap, [&] {
              const auto bad = *first_image_outside(*f.map, x.family(SetClass::kClosed),
                                                    y.family(SetClass::kAlphaMClosed));
              return make_cx({x.space(), y.space(), z.space()}, {*f.map, *g.map},
                             {{bad, 0}, {f.map->forward_image(bad), 1}},
                             "inner-not-alpha-m-closed");
            });
          }
          break;
        default:
          break;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Single-space audits

Tally run_space_chunk(AuditId id, const SpaceProfile& x, std::size_t cap) {
  Tally t;
  const int n = x.n();
  if (id == AuditId::kProp3_8) {
    for (const auto& a : enumerate_subsets(x.space())) {
      ++t.instances;
      ++t.hypothesis;
      const SubsetMask by_union = alpha_m_interior(x.space(), a);
      const SubsetMask by_points = alpha_m_interior_pointwise(x.space(), a);
      if (by_union != by_points) {
        t.fail(cap, [&] {
          return make_cx({x.space()}, {}, {{a, 0}, {by_union, 0}, {by_points, 0}},
                         "interior-forms-differ");
        });
      }
    }
    return t;
  }

  const bool any_set = id == AuditId::kThm3_7AnySet;
  std::vector<NbhdSystem> systems;
  for (int p = 0; p < n; ++p) systems.push_back(nbhd_system(x.space(), p));
  for (const auto& a : enumerate_subsets(x.space())) {
    for (int p = 0; p < n; ++p) {
      ++t.instances;
      if (!any_set && !x.is(SetClass::kAlphaMClosed, a)) continue;
      ++t.hypothesis;
      const bool in_closure = x.alpha_m_closure(a).contains(p);
      std::optional<SubsetMask> disjoint;
      for (const auto& nbhd : systems[static_cast<std::size_t>(p)].members) {
        if (!nbhd.intersects(a)) {
          disjoint = nbhd;
          break;
        }
      }
      const SubsetMask point = SubsetMask::singleton(n, p);
      if (in_closure && disjoint) {
        t.fail(cap, [&] {
          return make_cx({x.space()}, {}, {{a, 0}, {point, 0}, {*disjoint, 0}},
                         "closure-point-with-disjoint-nbhd");
        });
      } else if (!in_closure && !disjoint) {
        t.fail(cap, [&] {
          return make_cx({x.space()}, {}, {{a, 0}, {point, 0}}, "nbhds-meet-outside-closure");
        });
      }
    }
  }
  return t;
}

std::vector<SpaceProfile> build_profiles(const Universe& u, int jobs) {
  const auto spaces = enumerate_spaces(u.min_points, u.max_points);
  return map_chunks<SpaceProfile>(spaces.size(), jobs,
                                  [&](std::size_t i) { return SpaceProfile(spaces[i]); });
}

AuditReport merge(AuditId id, const Universe& u, std::vector<Tally>&& chunks, std::size_t cap) {
  AuditReport report;
  report.audit = id;
  report.universe = u;
  for (auto& chunk : chunks) {
    report.instances_checked += chunk.instances;
    report.hypothesis_satisfied += chunk.hypothesis;
    report.conclusion_failures += chunk.failures;
    for (auto& w : chunk.witnesses) report.counterexamples.push_back(std::move(w));
    for (const auto& [key, value] : chunk.stats) report.stats[key] += value;
  }
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     return a.total_points() < b.total_points();
                   });
  if (report.counterexamples.size() > cap) report.counterexamples.resize(cap);
  report.verdict = verdict_for(report.hypothesis_satisfied, report.conclusion_failures);
  return report;
}

void check_universe(AuditId id, const Universe& u) {
  if (u.shape != shape_of(id)) {
    throw std::invalid_argument(std::string(audit_name(id)) + " ranges over " +
                                std::string(shape_name(shape_of(id))) + ", not " +
                                std::string(shape_name(u.shape)));
  }
  if (u.min_points < 0 || u.min_points > u.max_points) {
    throw std::invalid_argument("universe point bounds are empty or negative");
  }
  if (u.max_points > universe_limit(u.shape)) {
    throw UniverseTooLarge(std::string(audit_name(id)) + ": " + u.describe() +
                           " exceeds the limit of " + std::to_string(universe_limit(u.shape)) +
                           " points");
  }
}

}  // namespace

AuditReport run_audit(AuditId id, const Universe& u, const RunOptions& options) {
  check_universe(id, u);
  const auto profiles = build_profiles(u, options.jobs);
  const std::size_t count = profiles.size();
  const std::size_t cap = options.counterexample_cap;

  std::vector<Tally> chunks;
  std::map<std::string, std::uint64_t> universe_stats;
  switch (u.shape) {
    case UniverseShape::kSpaces:
      chunks = map_chunks<Tally>(count, options.jobs, [&](std::size_t i) {
        return run_space_chunk(id, profiles[i], cap);
      });
      break;
    case UniverseShape::kPairs: {
      std::vector<char> union_closed(count);
      std::uint64_t failing = 0;
      for (std::size_t i = 0; i < count; ++i) {
        union_closed[i] = !find_union_violation(profiles[i].family(SetClass::kAlphaMOpen));
        if (!union_closed[i]) ++failing;
      }
      if (id == AuditId::kThm3_9 || id == AuditId::kCor3_10UnionClosed) {
        universe_stats["codomain_spaces_failing_hypothesis"] = failing;
      }
      chunks = map_chunks<Tally>(count * count, options.jobs, [&](std::size_t k) {
        const std::size_t xi = k / count;
        const std::size_t yi = k % count;
        return run_pair_chunk(id, PairContext{profiles[xi], profiles[yi],
                                              union_closed[yi] != 0, cap});
      });
      break;
    }
    case UniverseShape::kTriples:
      chunks = map_chunks<Tally>(count * count * count, options.jobs, [&](std::size_t k) {
        const std::size_t xi = k / (count * count);
        const std::size_t yi = (k / count) % count;
        const std::size_t zi = k % count;
        return run_triple_chunk(id, profiles[xi], profiles[yi], profiles[zi], cap);
      });
      break;
  }
  AuditReport report = merge(id, u, std::move(chunks), cap);
  for (const auto& [key, value] : universe_stats) report.stats[key] = value;
  return report;
}

std::vector<AuditReport> run_all(const AuditConfig& config, const RunOptions& options) {
  std::vector<AuditReport> reports;
  for (AuditId id : kAllAudits) reports.push_back(run_audit(id, config.universe_for(id), options));
  return reports;
}

}  // namespace amtop
