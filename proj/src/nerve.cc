// Copyright 2026 The xmodloop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xmodloop/nerve.h"

#include <algorithm>

namespace xmod {

bool is_simplex2(const CrossedModule& x, const Simplex2& s) {
  const FiniteGroup& p = x.p();
  return x.boundary(s.m) == p.add(p.add(p.neg(s.c), s.a), s.b);
}

bool is_simplex3(const CrossedModule& x, const Simplex3& s) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_simplex2(x, faces3(s, i))) return false;
  }
  const FiniteGroup& m = x.m();
  const Elem closure =
      m.add(m.add(m.add(x.act(s.m3, s.f), m.neg(s.m0)), m.neg(s.m2)), s.m1);
  return closure == m.zero();
}

std::vector<Simplex2> nerve_k2(const CrossedModule& x) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  // fibres of delta
  std::vector<std::vector<Elem>> preimage(p.order());
  for (Elem e = 0; e < m.order(); ++e) preimage[x.boundary(e)].push_back(e);

  std::vector<Simplex2> out;
  out.reserve(m.order() * p.order() * p.order());
  for (Elem a = 0; a < p.order(); ++a) {
    for (Elem b = 0; b < p.order(); ++b) {
      const Elem ab = p.add(a, b);
      for (Elem c = 0; c < p.order(); ++c) {
        for (Elem e : preimage[p.add(p.neg(c), ab)]) out.push_back({e, c, a, b});
      }
    }
  }
  return out;
}

std::vector<Simplex3> nerve_k3(const CrossedModule& x) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  std::vector<Simplex3> out;
  // The spine a, b, f and the elements m3, m0, m2 determine the simplex:
  // c = a + b - delta(m3), e = b + f - delta(m0), d = a + e - delta(m2),
  // and closure gives m1 = m2 + m0 - (m3)^f.
  for (Elem a = 0; a < p.order(); ++a) {
    for (Elem b = 0; b < p.order(); ++b) {
      for (Elem f = 0; f < p.order(); ++f) {
        for (Elem m3 = 0; m3 < m.order(); ++m3) {
          const Elem c = p.add(p.add(a, b), p.neg(x.boundary(m3)));
          for (Elem m0 = 0; m0 < m.order(); ++m0) {
            const Elem e = p.add(p.add(b, f), p.neg(x.boundary(m0)));
            for (Elem m2 = 0; m2 < m.order(); ++m2) {
              const Elem d = p.add(p.add(a, e), p.neg(x.boundary(m2)));
              const Elem m1 = m.add(m.add(m2, m0), m.neg(x.act(m3, f)));
              Simplex3 s{a, b, c, d, e, f, m0, m1, m2, m3};
              if (!is_simplex3(x, s)) {
                throw Error(ErrorKind::kInternalInvariantBroken,
                            "solved 3-simplex fails its face equations");
              }
              out.push_back(s);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t k2_count_formula(const CrossedModule& x) {
  const std::size_t expected = x.m().order() * x.p().order() * x.p().order();
  const std::size_t actual = nerve_k2(x).size();
  if (actual != expected) {
    throw Error(ErrorKind::kCountMismatch,
                "|K2| = " + std::to_string(actual) + " but |M||P|^2 = " +
                    std::to_string(expected));
  }
  return expected;
}

Simplex2 faces3(const Simplex3& s, std::size_t i) {
  switch (i) {
    case 0: return {s.m0, s.e, s.b, s.f};
    case 1: return {s.m1, s.d, s.c, s.f};
    case 2: return {s.m2, s.d, s.a, s.e};
    case 3: return {s.m3, s.c, s.a, s.b};
  }
  throw Error(ErrorKind::kIndexOutOfRange,
              "face " + std::to_string(i) + " of a 3-simplex");
}

}  // namespace xmod
