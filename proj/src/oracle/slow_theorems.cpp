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

#include <stdexcept>
#include <vector>

#include "amtop/oracle.hpp"

namespace amtop::oracle {
namespace {

unsigned all(int n) { return (1U << n) - 1U; }
bool subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

struct NaiveMap {
  const NaiveSpace* from;
  const NaiveSpace* to;
  std::vector<int> images;
};

unsigned image(const NaiveMap& f, unsigned a) {
  unsigned out = 0;
  for (int x = 0; x < f.from->n; ++x) {
    if ((a >> x) & 1U) out |= 1U << f.images[static_cast<std::size_t>(x)];
  }
  return out;
}

unsigned preimage(const NaiveMap& f, unsigned b) {
  unsigned out = 0;
  for (int x = 0; x < f.from->n; ++x) {
    if ((b >> f.images[static_cast<std::size_t>(x)]) & 1U) out |= 1U << x;
  }
  return out;
}

bool is(const NaiveSpace& s, unsigned a, SetClass c) { return oracle_classify(s, a, c); }

// Every `from_class` subset of the domain maps onto a `to_class` subset.
bool images_in(const NaiveMap& f, SetClass from_class, SetClass to_class) {
  for (unsigned a = 0; a <= all(f.from->n); ++a) {
    if (is(*f.from, a, from_class) && !is(*f.to, image(f, a), to_class)) return false;
  }
  return true;
}

// Every `from_class` subset of the codomain pulls back to a `to_class` subset.
bool preimages_in(const NaiveMap& f, SetClass from_class, SetClass to_class) {
  for (unsigned b = 0; b <= all(f.to->n); ++b) {
    if (is(*f.to, b, from_class) && !is(*f.from, preimage(f, b), to_class)) return false;
  }
  return true;
}

bool injective(const NaiveMap& f) {
  for (int x = 0; x < f.from->n; ++x) {
    for (int y = x + 1; y < f.from->n; ++y) {
      if (f.images[static_cast<std::size_t>(x)] == f.images[static_cast<std::size_t>(y)]) return false;
    }
  }
  return true;
}

bool surjective(const NaiveMap& f) { return image(f, all(f.from->n)) == all(f.to->n); }

NaiveMap compose(const NaiveMap& g, const NaiveMap& f) {
  NaiveMap h{f.from, g.to, {}};
  for (int x = 0; x < f.from->n; ++x) {
    h.images.push_back(g.images[static_cast<std::size_t>(f.images[static_cast<std::size_t>(x)])]);
  }
  return h;
}

std::vector<NaiveMap> all_maps(const NaiveSpace& from, const NaiveSpace& to) {
  std::vector<NaiveMap> out;
  std::size_t total = 1;
  for (int i = 0; i < from.n; ++i) total *= static_cast<std::size_t>(to.n);
  for (std::size_t code = 0; code < total; ++code) {
    NaiveMap f{&from, &to, std::vector<int>(static_cast<std::size_t>(from.n))};
    std::size_t rest = code;
    for (int i = from.n - 1; i >= 0; --i) {
      f.images[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(to.n));
      rest /= static_cast<std::size_t>(to.n);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool alpha_m_open_union_closed(const NaiveSpace& s) {
  for (unsigned a = 0; a <= all(s.n); ++a) {
    for (unsigned b = 0; b <= all(s.n); ++b) {
      if (is(s, a, SetClass::kAlphaMOpen) && is(s, b, SetClass::kAlphaMOpen) &&
          !is(s, a | b, SetClass::kAlphaMOpen)) {
        return false;
      }
    }
  }
  return true;
}

// N is an alpha^m-neighbourhood of the point set `inner`.
bool alpha_m_nbhd(const NaiveSpace& s, unsigned nbhd, unsigned inner) {
  for (unsigned g = 0; g <= all(s.n); ++g) {
    if (subset(inner, g) && subset(g, nbhd) && is(s, g, SetClass::kAlphaMOpen)) return true;
  }
  return false;
}

bool closed_map_cover(const NaiveMap& f) {
  const NaiveSpace& x = *f.from;
  const NaiveSpace& y = *f.to;
  for (unsigned s = 0; s <= all(y.n); ++s) {
    for (unsigned u = 0; u <= all(x.n); ++u) {
      if (!is(x, u, SetClass::kOpen) || !subset(preimage(f, s), u)) continue;
      bool found = false;
      for (unsigned v = 0; v <= all(y.n); ++v) {
        if (is(y, v, SetClass::kAlphaMOpen) && subset(s, v) && subset(preimage(f, v), u)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

struct Counts {
  std::uint64_t instances = 0;
  std::uint64_t hypothesis = 0;
  std::uint64_t failures = 0;

  void add(bool hypothesis_holds, bool conclusion_holds) {
    ++instances;
    if (!hypothesis_holds) return;
    ++hypothesis;
    if (!conclusion_holds) ++failures;
  }
};

void audit_map(AuditId id, const NaiveMap& f, Counts& c) {
  const NaiveSpace& x = *f.from;
  const NaiveSpace& y = *f.to;
  switch (id) {
    case AuditId::kThm3_1: {
      const bool closed_map = images_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
      c.add(true, closed_map == closed_map_cover(f));
      break;
    }
    case AuditId::kThm3_1Construction: {
      const bool closed_map = images_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
      bool ok = true;
      for (unsigned s = 0; s <= all(y.n); ++s) {
        for (unsigned u = 0; u <= all(x.n); ++u) {
          if (!is(x, u, SetClass::kOpen) || !subset(preimage(f, s), u)) continue;
          const unsigned v = all(y.n) & ~image(f, all(x.n) & ~u);
          if (!is(y, v, SetClass::kAlphaMOpen) || !subset(s, v) || !subset(preimage(f, v), u)) ok = false;
        }
      }
      c.add(closed_map, ok);
      break;
    }
    case AuditId::kProp3_2: {
      const bool map_ok = preimages_in(f, SetClass::kAlphaClosed, SetClass::kAlphaClosed) &&
                          images_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
      for (unsigned a = 0; a <= all(x.n); ++a) {
        c.add(map_ok && is(x, a, SetClass::kAlphaMClosed), is(y, image(f, a), SetClass::kAlphaMClosed));
      }
      break;
    }
    case AuditId::kThm3_9: {
      const bool a = images_in(f, SetClass::kOpen, SetClass::kAlphaMOpen);
      bool b = true;
      for (unsigned set = 0; set <= all(x.n); ++set) {
        if (!subset(image(f, oracle_interior(x, set)), oracle_alpha_m_interior(y, image(f, set)))) b = false;
      }
      bool cc = true;
      for (int p = 0; p < x.n; ++p) {
        for (unsigned u = 0; u <= all(x.n); ++u) {
          bool nbhd = false;
          for (unsigned g = 0; g <= all(x.n); ++g) {
            if (is(x, g, SetClass::kOpen) && ((g >> p) & 1U) && subset(g, u)) nbhd = true;
          }
          if (!nbhd) continue;
          bool found = false;
          const unsigned fx = 1U << f.images[static_cast<std::size_t>(p)];
          for (unsigned w = 0; w <= all(y.n); ++w) {
            if (alpha_m_nbhd(y, w, fx) && subset(w, image(f, u))) found = true;
          }
          if (!found) cc = false;
        }
      }
      c.add(alpha_m_open_union_closed(y), a == b && b == cc);
      break;
    }
    case AuditId::kCor3_10:
    case AuditId::kCor3_10UnionClosed: {
      const bool a = images_in(f, SetClass::kOpen, SetClass::kAlphaMOpen);
      bool bound = true;
      for (unsigned b = 0; b <= all(y.n); ++b) {
        if (!subset(preimage(f, oracle_alpha_m_closure(y, b)), oracle_closure(x, preimage(f, b)))) {
          bound = false;
        }
      }
      const bool hypothesis = id == AuditId::kCor3_10 || alpha_m_open_union_closed(y);
      c.add(hypothesis, a == bound);
      break;
    }
    default:
      throw std::invalid_argument("not a map audit");
  }
}

void audit_composition(AuditId id, const NaiveMap& f, const NaiveMap& g, Counts& c) {
  const NaiveMap h = compose(g, f);
  const bool h_closed = images_in(h, SetClass::kClosed, SetClass::kAlphaMClosed);
  const bool f_am_closed = images_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
  const bool g_am_closed = images_in(g, SetClass::kClosed, SetClass::kAlphaMClosed);
  switch (id) {
    case AuditId::kCor3_3:
      c.add(f_am_closed && g_am_closed && preimages_in(g, SetClass::kAlphaClosed, SetClass::kAlphaClosed),
            h_closed);
      break;
    case AuditId::kProp3_4:
      c.add(images_in(f, SetClass::kClosed, SetClass::kClosed) && g_am_closed, h_closed);
      break;
    case AuditId::kThm3_5a:
      c.add(h_closed && preimages_in(f, SetClass::kClosed, SetClass::kClosed) && surjective(f),
            g_am_closed);
      break;
    case AuditId::kThm3_5b:
      c.add(h_closed && preimages_in(g, SetClass::kAlphaMClosed, SetClass::kAlphaMClosed) &&
                injective(g),
            f_am_closed);
      break;
    default:
      throw std::invalid_argument("not a composition audit");
  }
}

void audit_space(AuditId id, const NaiveSpace& s, Counts& c) {
  for (unsigned a = 0; a <= all(s.n); ++a) {
    if (id == AuditId::kProp3_8) {
      unsigned pointwise = 0;
      for (int p = 0; p < s.n; ++p) {
        if (alpha_m_nbhd(s, a, 1U << p)) pointwise |= 1U << p;
      }
      c.add(true, pointwise == oracle_alpha_m_interior(s, a));
      continue;
    }
    for (int p = 0; p < s.n; ++p) {
      const bool lhs = ((oracle_alpha_m_closure(s, a) >> p) & 1U) != 0;
      bool rhs = true;
      for (unsigned nbhd = 0; nbhd <= all(s.n); ++nbhd) {
        if (alpha_m_nbhd(s, nbhd, 1U << p) && (nbhd & a) == 0) rhs = false;
      }
      const bool hypothesis = id == AuditId::kThm3_7AnySet || is(s, a, SetClass::kAlphaMClosed);
      c.add(hypothesis, lhs == rhs);
    }
  }
}

}  // namespace

bool oracle_map_property(const NaiveSpace& domain, const NaiveSpace& codomain,
                         const std::vector<int>& images, std::string_view property) {
  const NaiveMap f{&domain, &codomain, images};
  if (property == "continuous") return preimages_in(f, SetClass::kClosed, SetClass::kClosed);
  if (property == "alpha_m_continuous") return preimages_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
  if (property == "alpha_m_irresolute") {
    return preimages_in(f, SetClass::kAlphaMClosed, SetClass::kAlphaMClosed);
  }
  if (property == "alpha_irresolute") return preimages_in(f, SetClass::kAlphaClosed, SetClass::kAlphaClosed);
  if (property == "closed_map") return images_in(f, SetClass::kClosed, SetClass::kClosed);
  if (property == "open_map") return images_in(f, SetClass::kOpen, SetClass::kOpen);
  if (property == "alpha_m_closed_map") return images_in(f, SetClass::kClosed, SetClass::kAlphaMClosed);
  if (property == "alpha_m_open_map") return images_in(f, SetClass::kOpen, SetClass::kAlphaMOpen);
  if (property == "injective") return injective(f);
  if (property == "surjective") return surjective(f);
  throw std::invalid_argument("unknown map property");
}

OracleTally oracle_audit(AuditId id, const Universe& universe) {
  std::vector<NaiveSpace> spaces;
  for (int n = universe.min_points; n <= universe.max_points; ++n) {
    for (std::uint32_t family : oracle_enumerate_topologies(n).families) {
      NaiveSpace s{n, {}};
      for (unsigned k = 0; k < (1U << n); ++k) {
        if ((family >> k) & 1U) s.opens.push_back(k);
      }
      spaces.push_back(std::move(s));
    }
  }

  Counts counts;
  switch (shape_of(id)) {
    case UniverseShape::kSpaces:
      for (const auto& s : spaces) audit_space(id, s, counts);
      break;
    case UniverseShape::kPairs:
      for (const auto& x : spaces) {
        for (const auto& y : spaces) {
          for (const auto& f : all_maps(x, y)) audit_map(id, f, counts);
        }
      }
      break;
    case UniverseShape::kTriples:
      for (const auto& x : spaces) {
        for (const auto& y : spaces) {
          for (const auto& z : spaces) {
            const auto inner = all_maps(x, y);
            const auto outer = all_maps(y, z);
            for (const auto& f : inner) {
              for (const auto& g : outer) audit_composition(id, f, g, counts);
            }
          }
        }
      }
      break;
  }
  return OracleTally{counts.instances, counts.hypothesis, counts.failures,
                     verdict_for(counts.hypothesis, counts.failures)};
}

}  // namespace amtop::oracle
