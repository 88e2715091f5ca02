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

#include <gtest/gtest.h>

#include "oracles.h"
#include "xmodloop/error.h"
#include "xmodloop/fixtures.h"
#include "xmodloop/groupoid.h"
#include "xmodloop/loop.h"

namespace xmod {
namespace {

// C2 x indiscrete{x, y}: morphism (g, s -> t) has index 4g + 2s + t.
FiniteGroupoid connected_two_object() {
  GroupoidData d;
  d.objects = {"x", "y"};
  const std::size_t n = 8;
  d.compose.assign(n, std::vector<Mor>(n, kUndefined));
  for (Mor i = 0; i < n; ++i) {
    const std::size_t g = i / 4, s = (i / 2) % 2, t = i % 2;
    d.morphisms.push_back("(" + std::to_string(g) + "|" + d.objects[s] + d.objects[t] + ")");
    d.source.push_back(s);
    d.target.push_back(t);
  }
  for (Mor i = 0; i < n; ++i) {
    for (Mor j = 0; j < n; ++j) {
      if (i % 2 != (j / 2) % 2) continue;
      d.compose[i][j] = ((i / 4 + j / 4) % 2) * 4 + ((i / 2) % 2) * 2 + j % 2;
    }
  }
  return FiniteGroupoid::make(d);
}

GroupoidXMod discrete_fibres(const FiniteGroupoid& g) {
  GXModData d{g, {}, {}, {}};
  for (Obj x = 0; x < g.object_count(); ++x) {
    d.fibres.push_back(trivial_group());
    d.boundary.push_back({g.identity(x)});
  }
  d.action.assign(g.morphism_count(), std::vector<Elem>{0});
  return GroupoidXMod::make(d);
}

TEST(Groupoid, FromGroupVertexGroup) {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroupoid g = FiniteGroupoid::from_group(s3);
  EXPECT_EQ(g.object_count(), 1u);
  EXPECT_EQ(vertex_group(g, 0).table(), s3.table());
  EXPECT_EQ(pi0(g).classes.size(), 1u);
}

TEST(Groupoid, DisjointUnion) {
  GroupoidData d;
  d.objects = {"x", "y"};
  d.morphisms = {"0x", "1x", "0y", "1y", "2y"};
  d.source = {0, 0, 1, 1, 1};
  d.target = d.source;
  d.compose.assign(5, std::vector<Mor>(5, kUndefined));
  for (Mor i = 0; i < 2; ++i)
    for (Mor j = 0; j < 2; ++j) d.compose[i][j] = (i + j) % 2;
  for (Mor i = 0; i < 3; ++i)
    for (Mor j = 0; j < 3; ++j) d.compose[2 + i][2 + j] = 2 + (i + j) % 3;
  const FiniteGroupoid g = FiniteGroupoid::make(d);
  EXPECT_EQ(vertex_group(g, 0).order(), 2u);
  EXPECT_EQ(vertex_group(g, 1).order(), 3u);
  const Partition p = pi0(g);
  ASSERT_EQ(p.classes.size(), 2u);
  EXPECT_NE(p.class_of[0], p.class_of[1]);
}

TEST(Groupoid, ConnectedTwoObject) {
  const FiniteGroupoid g = connected_two_object();
  EXPECT_EQ(pi0(g).classes.size(), 1u);
  EXPECT_EQ(vertex_morphisms(g, 1).size(), 2u);
  EXPECT_EQ(g.neg(1), 2u);
  EXPECT_EQ(g.add(1, 2), 0u);  // (0|xy) + (0|yx)
  EXPECT_EQ(g.add(1, 1), kUndefined);
  EXPECT_EQ(g.object_index("y"), 1u);
}

TEST(Groupoid, InvalidDataRejected) {
  GroupoidData d;
  d.objects = {"x"};
  d.morphisms = {"e", "f"};
  d.source = {0, 0};
  d.target = {0, 0};
  d.compose = {{0, 1}, {1, 1}};  // f has no inverse
  EXPECT_FALSE(check_groupoid(d).empty());
  try {
    FiniteGroupoid::make(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidGroupoid);
  }
  d.compose = {{0, 1}, {1, 0}};
  d.target = {0, 1};  // object 1 does not exist
  EXPECT_FALSE(check_groupoid(d).empty());
}

TEST(Groupoid, UnknownObject) {
  const FiniteGroupoid g = FiniteGroupoid::from_group(cyclic_group(2));
  try {
    g.object_index("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownObject);
  }
  const GroupoidXMod gx = GroupoidXMod::from_xmod(fixtures::inc24());
  try {
    pi1_at(gx, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownObject);
  }
}

TEST(Pi0, LoopOfConjHasThreeComponents) {
  const Partition p = pi0(loop_gpd_xmod(fixtures::conj_s3()));
  EXPECT_EQ(p.classes.size(), 3u);
}

TEST(Pi0, SingleObject) {
  EXPECT_EQ(pi0(GroupoidXMod::from_xmod(fixtures::mod32())).classes.size(), 1u);
}

TEST(OneObject, ReducesToHomotopy) {
  for (const auto& f : fixtures::standard()) {
    const GroupoidXMod gx = GroupoidXMod::from_xmod(f.xmod);
    const HomotopyData h = homotopy(f.xmod);
    EXPECT_EQ(pi1_at(gx, 0).table(), h.pi1.table()) << f.name;
    EXPECT_EQ(pi2_at(gx, 0).order(), h.pi2.order()) << f.name;
    const CrossedModule r = restrict_to_object(gx, 0);
    EXPECT_EQ(r.p().table(), f.xmod.p().table()) << f.name;
    EXPECT_EQ(r.m().table(), f.xmod.m().table()) << f.name;
    EXPECT_EQ(r.delta().map(), f.xmod.delta().map()) << f.name;
    EXPECT_EQ(r.action().table(), f.xmod.action().table()) << f.name;
  }
}

TEST(Restrict, Inc24AtZero) {
  const CrossedModule x = fixtures::inc24();
  const CrossedModule r = restrict_to_object(loop_gpd_xmod(x), 0);
  EXPECT_EQ(r.p().order(), oracle::loop_vertex_count(x, 0));
  EXPECT_EQ(r.p().order(), 4u);
  EXPECT_EQ(r.m().order(), 2u);
  EXPECT_TRUE(check_axioms(r.data()).empty());
}

TEST(Restrict, Mod32AtZero) {
  const CrossedModule x = fixtures::mod32();
  const CrossedModule r = restrict_to_object(loop_gpd_xmod(x), 0);
  EXPECT_EQ(r.p().order(), oracle::loop_vertex_count(x, 0));
  EXPECT_EQ(r.p().order(), 6u);
  EXPECT_TRUE(are_isomorphic(r.m(), cyclic_group(3)).has_value());
}

TEST(LoopHomotopyAt, Mod32Generator) {
  EXPECT_EQ(pi2_at(loop_gpd_xmod(fixtures::mod32()), 1).order(), 1u);
}

TEST(LoopHomotopyAt, Inc24One) {
  const FiniteGroup g = pi1_at(loop_gpd_xmod(fixtures::inc24()), 1);
  EXPECT_TRUE(are_isomorphic(g, cyclic_group(2)).has_value());
}

TEST(LoopHomotopyAt, ConstantOnComponents) {
  for (const auto& f : fixtures::standard()) {
    const GroupoidXMod l = loop_gpd_xmod(f.xmod);
    const Partition p = pi0(l);
    for (const auto& cls : p.classes) {
      for (Obj a : cls) {
        EXPECT_TRUE(are_isomorphic(pi1_at(l, a), pi1_at(l, cls.front())).has_value())
            << f.name;
        EXPECT_TRUE(are_isomorphic(pi2_at(l, a), pi2_at(l, cls.front())).has_value())
            << f.name;
      }
    }
  }
}

TEST(Fibration, IdentityIsFibration) {
  for (const auto& f : fixtures::standard()) {
    const GroupoidXMod gx = loop_gpd_xmod(f.xmod);
    EXPECT_TRUE(is_fibration(identity_morphism(gx)).empty()) << f.name;
    EXPECT_TRUE(check_isomorphism(identity_morphism(gx)).empty()) << f.name;
  }
}

TEST(Fibration, VertexGroupInclusionIsNot) {
  const FiniteGroupoid big = connected_two_object();
  const FiniteGroupoid small = FiniteGroupoid::from_group(cyclic_group(2));
  const GXModMorphism inc{discrete_fibres(small), discrete_fibres(big), {0}, {0, 4}, {{0}}};
  EXPECT_TRUE(check_morphism(inc).empty());
  const Report r = is_fibration(inc);
  ASSERT_FALSE(r.empty());
  EXPECT_FALSE(r[0].witness.empty());
}

TEST(Fibration, DisconnectedTargetIsFibration) {
  // into a disconnected groupoid the star at x is the vertex group itself
  GroupoidData d;
  d.objects = {"x", "y"};
  d.morphisms = {"0x", "1x", "0y"};
  d.source = {0, 0, 1};
  d.target = d.source;
  d.compose = {{0, 1, kUndefined}, {1, 0, kUndefined}, {kUndefined, kUndefined, 2}};
  const FiniteGroupoid big = FiniteGroupoid::make(d);
  const FiniteGroupoid small = FiniteGroupoid::from_group(cyclic_group(2));
  const GXModMorphism inc{discrete_fibres(small), discrete_fibres(big), {0}, {0, 1}, {{0}}};
  EXPECT_TRUE(is_fibration(inc).empty());
}

TEST(Morphism, BrokenMapRejected) {
  const GroupoidXMod gx = loop_gpd_xmod(fixtures::inc24());
  GXModMorphism id = identity_morphism(gx);
  std::swap(id.morphisms[0], id.morphisms[1]);
  EXPECT_FALSE(check_morphism(id).empty());
  EXPECT_FALSE(check_isomorphism(id).empty());
}

TEST(GXMod, BrokenActionRejected) {
  const GroupoidXMod gx = loop_gpd_xmod(fixtures::mod32());
  GXModData d = gx.data();
  // m^p for the generator of M under the (0|1|0) morphism
  const Mor p = loop_morphism_index(fixtures::mod32(), {0, 1, 0});
  d.action[p][1] = 1;
  EXPECT_FALSE(check_gx(d).empty());
}

}  // namespace
}  // namespace xmod
