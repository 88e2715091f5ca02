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

#ifndef XMODLOOP_XMOD_H_
#define XMODLOOP_XMOD_H_

#include <vector>

#include "xmodloop/error.h"
#include "xmodloop/group.h"

namespace xmod {

// Unvalidated crossed-module data over already-validated groups.
struct XModData {
  FiniteGroup m;
  FiniteGroup p;
  std::vector<Elem> delta;  // delta[m] in P
  Table action;             // action[p][m] = m^p
};

// Crossed module of groups delta: M -> P with a right action of P on M
// satisfying
//   CM1  delta(m^p) = -p + delta(m) + p
//   CM2  -n + m + n = m^{delta(n)}
class CrossedModule {
 public:
  // Throws the first violation found by check_axioms.
  static CrossedModule make(const XModData& data);

  const FiniteGroup& m() const { return delta_.source(); }
  const FiniteGroup& p() const { return delta_.target(); }
  const Homomorphism& delta() const { return delta_; }
  const GroupAction& action() const { return action_; }

  Elem boundary(Elem x) const { return delta_(x); }
  // x^q
  Elem act(Elem x, Elem q) const { return action_.apply(x, q); }

  XModData data() const;

 private:
  CrossedModule(Homomorphism delta, GroupAction action)
      : delta_(std::move(delta)), action_(std::move(action)) {}

  Homomorphism delta_;
  GroupAction action_;
};

CrossedModule make_xmod(const FiniteGroup& m, const FiniteGroup& p,
                        std::vector<Elem> delta, Table action);

// Exhaustive: homomorphism, action laws, CM1 over M x P, CM2 over M x M.
Report check_axioms(const XModData& data);

struct HomotopyData {
  FiniteGroup pi1;           // Cok delta = P / Im delta
  FiniteGroup pi2;           // Ker delta, on its own elements
  GroupAction g_action;      // pi1 acting on pi2 through representatives
  Homomorphism projection;   // P -> pi1
  Homomorphism inclusion;    // pi2 -> M
};

// Throws InternalInvariantBroken if Im delta is not normal, Ker delta is not
// central, or the induced action depends on the coset representative.
HomotopyData homotopy(const CrossedModule& x);

}  // namespace xmod

#endif  // XMODLOOP_XMOD_H_
