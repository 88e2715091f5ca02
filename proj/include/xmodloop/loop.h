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

#ifndef XMODLOOP_LOOP_H_
#define XMODLOOP_LOOP_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "xmodloop/group.h"
#include "xmodloop/groupoid.h"
#include "xmodloop/xmod.h"

namespace xmod {

// Classes of P under b ~ a iff b = p + a + delta(m) - p for some p, m.
// Cross-checked against the conjugacy classes of Cok delta; throws
// InternalInvariantBroken on disagreement.
Partition components(const CrossedModule& x);

// The loop crossed module L[a] = (delta_a: M -> P(a)) at a base point a.
struct LoopData {
  Elem base;
  // P(a) = {(m, p) : delta(m) = [a, p]}, elements named "(m|p)" and ordered
  // lexicographically in (m, p), composed by (n,q) + (m,p) = (m + n^p, q + p).
  FiniteGroup pa;
  std::vector<std::pair<Elem, Elem>> pairs;  // element i of pa is pairs[i]
  Homomorphism delta_a;                      // m -> (-m^a + m, delta(m))
  GroupAction action;                        // n^(m,p) = n^p
};

LoopData loop_data(const CrossedModule& x, Elem a);

FiniteGroup group_pa(const CrossedModule& x, Elem a);
// Throws CodomainViolation if some delta(-m^a + m) != [a, delta(m)].
Homomorphism delta_a(const CrossedModule& x, Elem a);
// Validated through check_axioms.
CrossedModule loop_xmod_at(const CrossedModule& x, Elem a);

// A morphism (m, p, a) of L: from p + a + delta(m) - p to a.
struct LoopTriple {
  Elem m;
  Elem p;
  Elem a;
};

// Morphisms of L are ordered lexicographically in (m, p, a).
Mor loop_morphism_index(const CrossedModule& x, const LoopTriple& t);
LoopTriple loop_triple(const CrossedModule& x, Mor index);

// L over the groupoid with objects P: morphisms (m, p, a) named "(m|p|a)",
// (n,q,b) + (m,p,a) = (m + n^p, q + p, a) when b = p + a + delta(m) - p,
// fibres M(a) = {(m, a)} named "(m|a)" with boundary (-m^a + m, delta(m), a),
// and (n,b)^(m,p,a) = (n^p, a).
GroupoidXMod loop_gpd_xmod(const CrossedModule& x);

// theta: restrict_to_object(L, a) -> L[a], (m,p,a) -> (m,p), (m,a) -> m.
// Verified to be an isomorphism; both sides as one-object GroupoidXMods.
GXModMorphism theta(const CrossedModule& x, Elem a);

struct LoopHomotopy {
  FiniteGroup pi1;  // Cok delta_a
  FiniteGroup pi2;  // Ker delta_a, named by elements of M
  Subgroup kernel;  // Ker delta_a as a subgroup of M
};

// Also asserts Ker delta_a = {k in Ker delta : k^a = k} elementwise.
LoopHomotopy pi_loop(const CrossedModule& x, Elem a);

}  // namespace xmod

#endif  // XMODLOOP_LOOP_H_
