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

#include "xmodloop/fixtures.h"

namespace xmod::fixtures {

namespace {

Table trivial_table(const FiniteGroup& actor, const FiniteGroup& space) {
  return GroupAction::trivial(actor, space).table();
}

}  // namespace

CrossedModule triv() {
  const FiniteGroup one = trivial_group();
  return make_xmod(one, one, {0}, {{0}});
}

CrossedModule conj_s3() {
  const FiniteGroup m = trivial_group();
  const FiniteGroup p = symmetric_group(3);
  return make_xmod(m, p, {p.zero()}, trivial_table(p, m));
}

CrossedModule inc24() {
  const FiniteGroup m = cyclic_group(2);
  const FiniteGroup p = cyclic_group(4);
  return make_xmod(m, p, {p.index("0"), p.index("2")}, trivial_table(p, m));
}

CrossedModule mod32() {
  const FiniteGroup m = cyclic_group(3);
  const FiniteGroup p = cyclic_group(2);
  Table action(2, std::vector<Elem>(3));
  for (Elem x = 0; x < 3; ++x) {
    action[0][x] = x;
    action[1][x] = m.neg(x);
  }
  return make_xmod(m, p, {0, 0, 0}, std::move(action));
}

CrossedModule inn3() {
  const FiniteGroup m = cyclic_group(3);
  const FiniteGroup p = symmetric_group(3);
  const std::vector<Elem> delta{p.zero(), p.index("(123)"), p.index("(132)")};
  Table action(p.order(), std::vector<Elem>(3));
  for (Elem q = 0; q < p.order(); ++q) {
    for (Elem x = 0; x < 3; ++x) {
      const Elem conjugated = p.conj(delta[x], q);
      for (Elem y = 0; y < 3; ++y) {
        if (delta[y] == conjugated) action[q][x] = y;
      }
    }
  }
  return make_xmod(m, p, delta, std::move(action));
}

std::vector<Named> standard() {
  return {{"TRIV", triv()},
          {"CONJ", conj_s3()},
          {"INC24", inc24()},
          {"MOD32", mod32()},
          {"INN3", inn3()}};
}

}  // namespace xmod::fixtures
