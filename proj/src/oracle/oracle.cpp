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

#include "amtop/oracle.hpp"

#include <stdexcept>

namespace amtop::oracle {

namespace {

unsigned all(int n) { return (1U << n) - 1U; }
bool subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

bool is_open(const NaiveSpace& s, unsigned a) {
  for (unsigned u : s.opens) {
    if (u == a) return true;
  }
  return false;
}

bool is_closed(const NaiveSpace& s, unsigned a) { return is_open(s, all(s.n) & ~a); }

bool alpha_open(const NaiveSpace& s, unsigned a) {
  return subset(a, oracle_interior(s, oracle_closure(s, oracle_interior(s, a))));
}

bool alpha_m_closed(const NaiveSpace& s, unsigned a) {
  const unsigned core = oracle_interior(s, oracle_closure(s, a));
  for (unsigned u = 0; u <= all(s.n); ++u) {
    if (subset(a, u) && alpha_open(s, u) && !subset(core, u)) return false;
  }
  return true;
}

bool g_closed(const NaiveSpace& s, unsigned a) {
  for (unsigned u : s.opens) {
    if (subset(a, u) && !subset(oracle_closure(s, a), u)) return false;
  }
  return true;
}

}  // namespace

NaiveSpace from_space(const FiniteSpace& space) {
  NaiveSpace s;
  s.n = space.n();
  for (unsigned k = 0; k < (1U << space.n()); ++k) {
    if ((space.opens().bits() >> k) & 1U) s.opens.push_back(k);
  }
  return s;
}

Census oracle_enumerate_topologies(int n) {
  if (n < 0 || n > 4) throw std::out_of_range("oracle census supports 0..4 points");
  Census census;
  census.n = n;
  const unsigned subsets = 1U << n;
  const std::uint64_t candidates = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < candidates; ++fam) {
    auto has = [&](unsigned k) { return ((fam >> k) & 1U) != 0; };
    if (!has(0) || !has(all(n))) continue;
    bool ok = true;
    for (unsigned a = 0; a < subsets && ok; ++a) {
      for (unsigned b = 0; b < subsets && ok; ++b) {
        if (has(a) && has(b) && (!has(a | b) || !has(a & b))) ok = false;
      }
    }
    if (ok) census.families.push_back(static_cast<std::uint32_t>(fam));
  }
  return census;
}

unsigned oracle_interior(const NaiveSpace& s, unsigned a) {
  unsigned out = 0;
  for (unsigned u : s.opens) {
    if (subset(u, a)) out |= u;
  }
  return out;
}

unsigned oracle_closure(const NaiveSpace& s, unsigned a) {
  unsigned out = all(s.n);
  for (unsigned u : s.opens) {
    const unsigned closed = all(s.n) & ~u;
    if (subset(a, closed)) out &= closed;
  }
  return out;
}

bool oracle_classify(const NaiveSpace& s, unsigned a, SetClass c) {
  const unsigned x = all(s.n);
  const unsigned comp = x & ~a;
  auto in = [&](unsigned v) { return oracle_interior(s, v); };
  auto cl = [&](unsigned v) { return oracle_closure(s, v); };
  switch (c) {
    case SetClass::kOpen: return is_open(s, a);
    case SetClass::kClosed: return is_closed(s, a);
    case SetClass::kPreopen: return subset(a, in(cl(a)));
    case SetClass::kPreclosed: return subset(cl(in(a)), a);
    case SetClass::kSemiopen: return subset(a, cl(in(a)));
    case SetClass::kSemiclosed: return subset(in(cl(a)), a);
    case SetClass::kAlphaOpen: return alpha_open(s, a);
    case SetClass::kAlphaClosed: return subset(cl(in(cl(a))), a);
    case SetClass::kBetaOpen: return subset(a, cl(in(cl(a))));
    case SetClass::kBetaClosed: return subset(in(cl(in(a))), a);
    case SetClass::kGClosed: return g_closed(s, a);
    case SetClass::kAlphaMClosed: return alpha_m_closed(s, a);
    case SetClass::kAlphaMOpen: return alpha_m_closed(s, comp);
  }
  return false;
}

unsigned oracle_alpha_m_interior(const NaiveSpace& s, unsigned a) {
  unsigned out = 0;
  for (unsigned g = 0; g <= all(s.n); ++g) {
    if (subset(g, a) && oracle_classify(s, g, SetClass::kAlphaMOpen)) out |= g;
  }
  return out;
}

unsigned oracle_alpha_m_closure(const NaiveSpace& s, unsigned a) {
  unsigned out = all(s.n);
  for (unsigned f = 0; f <= all(s.n); ++f) {
    if (subset(a, f) && oracle_classify(s, f, SetClass::kAlphaMClosed)) out &= f;
  }
  return out;
}

unsigned oracle_alpha_kernel(const NaiveSpace& s, unsigned a) {
  unsigned out = all(s.n);
  for (unsigned u = 0; u <= all(s.n); ++u) {
    if (subset(a, u) && alpha_open(s, u)) out &= u;
  }
  return out;
}

}  // namespace amtop::oracle
