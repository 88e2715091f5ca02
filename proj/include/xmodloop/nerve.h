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

#ifndef XMODLOOP_NERVE_H_
#define XMODLOOP_NERVE_H_

#include <cstddef>
#include <vector>

#include "xmodloop/xmod.h"

namespace xmod {

// A 2-simplex (m; c, a, b) on vertices 0, 1, 2 with edges a: 0->1, b: 1->2,
// c: 0->2 and delta(m) = -c + a + b.
struct Simplex2 {
  Elem m;
  Elem c;
  Elem a;
  Elem b;

  auto operator<=>(const Simplex2&) const = default;
};

// A 3-simplex on vertices 0..3 with edges a: 0->1, b: 1->2, c: 0->2,
// d: 0->3, e: 1->3, f: 2->3 and face elements m0..m3, where face i is
// opposite vertex i. Requires
//   delta(m0) = -e + b + f    delta(m1) = -d + c + f
//   delta(m2) = -d + a + e    delta(m3) = -c + a + b
// and the closure rule (m3)^f - m0 - m2 + m1 = 0.
struct Simplex3 {
  Elem a, b, c, d, e, f;
  Elem m0, m1, m2, m3;

  auto operator<=>(const Simplex3&) const = default;
};

bool is_simplex2(const CrossedModule& x, const Simplex2& s);
bool is_simplex3(const CrossedModule& x, const Simplex3& s);

// Lexicographic in (a, b, c, m) by canonical element order.
std::vector<Simplex2> nerve_k2(const CrossedModule& x);

// Sorted lexicographically in (a, b, c, d, e, f, m0, m1, m2, m3).
std::vector<Simplex3> nerve_k3(const CrossedModule& x);

// |M| * |P|^2, checked against nerve_k2; throws CountMismatch.
std::size_t k2_count_formula(const CrossedModule& x);

// Face opposite vertex i; throws IndexOutOfRange for i > 3.
Simplex2 faces3(const Simplex3& s, std::size_t i);

}  // namespace xmod

#endif  // XMODLOOP_NERVE_H_
