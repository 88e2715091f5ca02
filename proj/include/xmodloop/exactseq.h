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

#ifndef XMODLOOP_EXACTSEQ_H_
#define XMODLOOP_EXACTSEQ_H_

#include <cstddef>
#include <string>
#include <vector>

#include "xmodloop/group.h"
#include "xmodloop/groupoid.h"
#include "xmodloop/loop.h"
#include "xmodloop/xmod.h"

namespace xmod {

// psi: L -> M with psi0(a) = *, psi1(m,p,a) = p, psi2(n,a) = n, and its
// fibre F: objects P, morphisms (m,0,a), trivial dimension-2 part (0,a).
struct FibrationData {
  GXModMorphism psi;
  GroupoidXMod fibre;
};

// Throws InternalInvariantBroken unless is_fibration(psi) is empty.
FibrationData fibration_psi(const CrossedModule& x);

// {k in Ker delta : k^a = k}; independence from the representative of the
// class of a in Cok delta is asserted.
Subgroup fixed_points(const CrossedModule& x, Elem a);

// pi / Im(k -> -k^a + k)
FiniteGroup coinvariants(const CrossedModule& x, Elem a);

struct NodeCheck {
  std::string node;
  bool exact;
  std::string detail;
};

// 0 -> pi^a -> pi --d--> pi --j--> pi1(LX, a) --q--> C_a(G) -> 1
//
// The third term is pi1 of the fibre at a. pi1(LX, a) is computed through
// the groupoid route: the vertex group of L at a modulo the boundary of
// M(a), with j(k) the class of (k, 0, a) and q induced by psi1.
struct ExactSequence {
  Elem base;
  FiniteGroup fixed;       // pi^a
  FiniteGroup pi;          // pi2 of the base
  FiniteGroup fibre_pi1;   // pi1(F, a), equal to pi
  FiniteGroup loop_pi1;    // pi1(LX, a)
  FiniteGroup centralizer; // C_a(G)
  Homomorphism inclusion;
  Homomorphism boundary;   // k -> -k^a + k
  Homomorphism j;
  Homomorphism q;
  FiniteGroup coinvariants;     // pi / Im boundary
  Homomorphism induced;         // coinvariants -> loop_pi1
  std::vector<NodeCheck> nodes;

  bool exact() const;
};

// Throws ExactnessFailure naming the node and a witness.
ExactSequence exact_sequence(const CrossedModule& x, Elem a);

// Number of orbits of pi0(F) under conjugation by P.
std::size_t pi0_tail_orbit_count(const CrossedModule& x);

// Requires delta = 0 (throws PreconditionFailed). Checks pi1(L, a) is
// isomorphic to (M/[a,M]) x| C_a(P) and that P(a) is M x| C_a(P)
// elementwise.
Report example1_check(const CrossedModule& x, Elem a,
                      std::size_t max_order = kDefaultMaxOrder);

// Requires a central in P (throws PreconditionFailed). Checks P(a) is
// pi x| P elementwise and that (pi x| P) / Im delta_a is isomorphic to
// pi1(L, a).
Report example2_check(const CrossedModule& x, Elem a,
                      std::size_t max_order = kDefaultMaxOrder);

}  // namespace xmod

#endif  // XMODLOOP_EXACTSEQ_H_
