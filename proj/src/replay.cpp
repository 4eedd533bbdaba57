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

#include <cstdio>

#include "amtop/generalized.hpp"
#include "amtop/maps.hpp"
#include "amtop/operators.hpp"
#include "amtop/theorems.hpp"

namespace amtop {
namespace {

bool well_formed(const Counterexample& cx, std::size_t spaces, std::size_t maps,
                 std::size_t min_subsets) {
  if (cx.spaces.size() != spaces || cx.maps.size() != maps) return false;
  if (cx.subsets.size() < min_subsets || cx.subsets.size() != cx.subset_spaces.size()) return false;
  for (std::size_t i = 0; i < cx.subsets.size(); ++i) {
    const int where = cx.subset_spaces[i];
    if (where < 0 || static_cast<std::size_t>(where) >= spaces) return false;
    if (cx.subsets[i].n() != cx.spaces[static_cast<std::size_t>(where)].n()) return false;
  }
  for (std::size_t i = 0; i < maps; ++i) {
    if (!(cx.maps[i].domain() == cx.spaces[i]) || !(cx.maps[i].codomain() == cx.spaces[i + 1])) {
      return false;
    }
  }
  return true;
}

bool bound_holds(const PointMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  for (const auto& b : enumerate_subsets(y)) {
    if (!f.preimage(alpha_m_closure(y, b)).is_subset_of(x.closure(f.preimage(b)))) return false;
  }
  return true;
}

bool cover_holds(const PointMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  for (const auto& s : enumerate_subsets(y)) {
    for (const auto& u : enumerate_subsets(x)) {
      if (!x.is_open(u) || !f.preimage(s).is_subset_of(u)) continue;
      bool found = false;
      for (const auto& v : enumerate_subsets(y)) {
        if (is_alpha_m_open(y, v) && s.is_subset_of(v) && f.preimage(v).is_subset_of(u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool union_closed_alpha_m_open(const FiniteSpace& y) {
  return is_family_union_closed(y, SetClass::kAlphaMOpen).closed;
}

bool replay_map_audit(AuditId id, const Counterexample& cx) {
  if (!well_formed(cx, 2, 1, 0)) return false;
  const FiniteSpace& x = cx.spaces[0];
  const FiniteSpace& y = cx.spaces[1];
  const PointMap& f = cx.maps[0];
  const auto& sub = cx.subsets;

  switch (id) {
    case AuditId::kThm3_1:
      if (cx.note == "closed-map-without-cover") {
        if (sub.size() != 2) return false;
        const SubsetMask s = sub[0], u = sub[1];
        if (!is_alpha_m_closed_map(f) || !x.is_open(u) || !f.preimage(s).is_subset_of(u)) return false;
        for (const auto& v : enumerate_subsets(y)) {
          if (is_alpha_m_open(y, v) && s.is_subset_of(v) && f.preimage(v).is_subset_of(u)) return false;
        }
        return true;
      }
      if (cx.note == "cover-without-closed-map") {
        if (sub.size() != 2) return false;
        return x.is_closed(sub[0]) && sub[1] == f.forward_image(sub[0]) &&
               !is_alpha_m_closed(y, sub[1]) && cover_holds(f);
      }
      return false;

    case AuditId::kThm3_1Construction: {
      if (cx.note != "construction-fails" || sub.size() != 3) return false;
      const SubsetMask s = sub[0], u = sub[1], v = sub[2];
      if (!is_alpha_m_closed_map(f) || !x.is_open(u) || !f.preimage(s).is_subset_of(u)) return false;
      if (v != f.forward_image(u.complement()).complement()) return false;
      return !(is_alpha_m_open(y, v) && s.is_subset_of(v) && f.preimage(v).is_subset_of(u));
    }

    case AuditId::kProp3_2:
      if (cx.note != "image-not-alpha-m-closed" || sub.size() != 2) return false;
      return is_alpha_irresolute(f) && is_alpha_m_closed_map(f) && is_alpha_m_closed(x, sub[0]) &&
             sub[1] == f.forward_image(sub[0]) && !is_alpha_m_closed(y, sub[1]);

    case AuditId::kThm3_9: {
      if (!union_closed_alpha_m_open(y)) return false;
      int na = -1, nb = -1, nc = -1;
      if (std::sscanf(cx.note.c_str(), "a=%d b=%d c=%d", &na, &nb, &nc) != 3) return false;
      const bool a = is_alpha_m_open_map(f);
      bool b = true;
      for (const auto& set : enumerate_subsets(x)) {
        if (!f.forward_image(x.interior(set)).is_subset_of(alpha_m_interior(y, f.forward_image(set)))) {
          b = false;
        }
      }
      bool c = true;
      for (const auto& u : enumerate_subsets(x)) {
        for (int p = 0; p < x.n(); ++p) {
          if (!x.interior(u).contains(p)) continue;
          bool found = false;
          for (const auto& w : nbhd_system(y, f.image(p)).members) {
            if (w.is_subset_of(f.forward_image(u))) found = true;
          }
          if (!found) c = false;
        }
      }
      if (na != a || nb != b || nc != c || (a == b && b == c)) return false;
      std::size_t next = 0;
      if (!b) {
        if (sub.size() <= next) return false;
        const SubsetMask set = sub[next++];
        if (f.forward_image(x.interior(set)).is_subset_of(alpha_m_interior(y, f.forward_image(set)))) {
          return false;
        }
      }
      if (!c) {
        if (sub.size() < next + 2 || sub[next + 1].size() != 1) return false;
        const SubsetMask u = sub[next];
        const int p = sub[next + 1].points().front();
        if (!x.interior(u).contains(p)) return false;
        if (is_alpha_m_nbhd_of_point(y, f.forward_image(u), f.image(p))) return false;
      }
      return true;
    }

    case AuditId::kCor3_10:
    case AuditId::kCor3_10UnionClosed:
      if (id == AuditId::kCor3_10UnionClosed && !union_closed_alpha_m_open(y)) return false;
      if (cx.note == "open-map-without-closure-bound") {
        if (sub.size() != 1) return false;
        const SubsetMask b = sub[0];
        return is_alpha_m_open_map(f) &&
               !f.preimage(alpha_m_closure(y, b)).is_subset_of(x.closure(f.preimage(b)));
      }
      if (cx.note == "closure-bound-without-open-map") {
        if (sub.size() != 2) return false;
        return x.is_open(sub[0]) && sub[1] == f.forward_image(sub[0]) &&
               !is_alpha_m_open(y, sub[1]) && bound_holds(f);
      }
      return false;

    default:
      return false;
  }
}

bool replay_composition_audit(AuditId id, const Counterexample& cx) {
  if (!well_formed(cx, 3, 2, 2)) return false;
  const FiniteSpace& x = cx.spaces[0];
  const FiniteSpace& y = cx.spaces[1];
  const FiniteSpace& z = cx.spaces[2];
  const PointMap& f = cx.maps[0];
  const PointMap& g = cx.maps[1];
  const PointMap h = compose(g, f);
  const auto& sub = cx.subsets;

  switch (id) {
    case AuditId::kCor3_3:
    case AuditId::kProp3_4: {
      const bool hypothesis =
          id == AuditId::kCor3_3
              ? is_alpha_m_closed_map(f) && is_alpha_m_closed_map(g) && is_alpha_irresolute(g)
              : is_closed_map(f) && is_alpha_m_closed_map(g);
      return hypothesis && cx.note == "composite-not-alpha-m-closed" && x.is_closed(sub[0]) &&
             sub[1] == h.forward_image(sub[0]) && !is_alpha_m_closed(z, sub[1]) &&
             !is_alpha_m_closed_map(h);
    }
    case AuditId::kThm3_5a:
      return is_alpha_m_closed_map(h) && is_continuous(f) && f.is_surjective() &&
             cx.note == "outer-not-alpha-m-closed" && y.is_closed(sub[0]) &&
             sub[1] == g.forward_image(sub[0]) && !is_alpha_m_closed(z, sub[1]);
    case AuditId::kThm3_5b:
      return is_alpha_m_closed_map(h) && is_alpha_m_irresolute(g) && g.is_injective() &&
             cx.note == "inner-not-alpha-m-closed" && x.is_closed(sub[0]) &&
             sub[1] == f.forward_image(sub[0]) && !is_alpha_m_closed(y, sub[1]);
    default:
      return false;
  }
}

bool replay_space_audit(AuditId id, const Counterexample& cx) {
  if (!well_formed(cx, 1, 0, 1)) return false;
  const FiniteSpace& x = cx.spaces[0];
  const SubsetMask a = cx.subsets[0];
  if (id == AuditId::kProp3_8) {
    return cx.note == "interior-forms-differ" &&
           alpha_m_interior(x, a) != alpha_m_interior_pointwise(x, a);
  }
  if (cx.subsets.size() < 2 || cx.subsets[1].size() != 1) return false;
  if (id == AuditId::kThm3_7 && !is_alpha_m_closed(x, a)) return false;
  const int p = cx.subsets[1].points().front();
  const bool in_closure = alpha_m_closure(x, a).contains(p);
  if (cx.note == "closure-point-with-disjoint-nbhd") {
    if (cx.subsets.size() != 3) return false;
    const SubsetMask nbhd = cx.subsets[2];
    return in_closure && is_alpha_m_nbhd_of_point(x, nbhd, p) && !nbhd.intersects(a);
  }
  if (cx.note == "nbhds-meet-outside-closure") {
    if (in_closure) return false;
    for (const auto& nbhd : nbhd_system(x, p).members) {
      if (!nbhd.intersects(a)) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

bool replay_counterexample(AuditId id, const Counterexample& cx) {
  try {
    switch (shape_of(id)) {
      case UniverseShape::kSpaces: return replay_space_audit(id, cx);
      case UniverseShape::kPairs: return replay_map_audit(id, cx);
      case UniverseShape::kTriples: return replay_composition_audit(id, cx);
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace amtop
