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

#ifndef XMODLOOP_FIXTURES_H_
#define XMODLOOP_FIXTURES_H_

#include <string>
#include <vector>

#include "xmodloop/xmod.h"

namespace xmod::fixtures {

// 1 -> 1
CrossedModule triv();
// 1 -> S3
CrossedModule conj_s3();
// C2 -> C4, 1 -> 2, trivial action
CrossedModule inc24();
// 0: C3 -> C2, the generator of C2 acting by inversion
CrossedModule mod32();
// C3 -> S3 onto A3, conjugation action
CrossedModule inn3();

struct Named {
  std::string name;
  CrossedModule xmod;
};

// TRIV, CONJ, INC24, MOD32, INN3 in that order.
std::vector<Named> standard();

}  // namespace xmod::fixtures

#endif  // XMODLOOP_FIXTURES_H_
