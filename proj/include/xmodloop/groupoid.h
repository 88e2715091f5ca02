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

#ifndef XMODLOOP_GROUPOID_H_
#define XMODLOOP_GROUPOID_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmodloop/error.h"
#include "xmodloop/group.h"
#include "xmodloop/xmod.h"

namespace xmod {

using Obj = std::size_t;
using Mor = std::size_t;

inline constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

// Extensional groupoid data. compose[p][q] = p + q for p: x -> y, q: y -> z,
// and kUndefined whenever target(p) != source(q).
struct GroupoidData {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<Obj> source;
  std::vector<Obj> target;
  Table compose;
};

Report check_groupoid(const GroupoidData& data);

class FiniteGroupoid {
 public:
  // Throws InvalidGroupoid.
  static FiniteGroupoid make(GroupoidData data);
  // One object whose vertex group is `g`.
  static FiniteGroupoid from_group(const FiniteGroup& g,
                                   std::string object = "*");

  std::size_t object_count() const { return rep_->data.objects.size(); }
  std::size_t morphism_count() const { return rep_->data.morphisms.size(); }
  const std::string& object_name(Obj x) const { return rep_->data.objects.at(x); }
  const std::string& morphism_name(Mor p) const {
    return rep_->data.morphisms.at(p);
  }
  Obj source(Mor p) const { return rep_->data.source[p]; }
  Obj target(Mor p) const { return rep_->data.target[p]; }
  bool composable(Mor p, Mor q) const { return target(p) == source(q); }
  // Undefined (kUndefined) unless composable.
  Mor add(Mor p, Mor q) const { return rep_->data.compose[p][q]; }
  Mor neg(Mor p) const { return rep_->inverse[p]; }
  Mor identity(Obj x) const { return rep_->identity[x]; }
  // -p + q + p, for q a vertex morphism at source(p).
  Mor conj(Mor q, Mor p) const { return add(add(neg(p), q), p); }

  Obj object_index(std::string_view name) const;  // throws UnknownObject
  void require_object(Obj x) const;
  const GroupoidData& data() const { return rep_->data; }

 private:
  struct Rep {
    GroupoidData data;
    std::vector<Mor> identity;
    std::vector<Mor> inverse;
  };
  explicit FiniteGroupoid(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// Morphisms x -> x in canonical order.
std::vector<Mor> vertex_morphisms(const FiniteGroupoid& g, Obj x);
// Named by the morphisms' names; element i is vertex_morphisms(g, x)[i].
FiniteGroup vertex_group(const FiniteGroupoid& g, Obj x);

struct Partition {
  // Each class sorted in canonical order; classes ordered by least member,
  // which is the class representative.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;

  std::size_t representative(std::size_t cls) const { return classes[cls].front(); }
};

Partition pi0(const FiniteGroupoid& g);

struct GXModData {
  FiniteGroupoid base;
  std::vector<FiniteGroup> fibres;         // M(x)
  std::vector<std::vector<Mor>> boundary;  // boundary[x][m], a loop at x
  Table action;  // action[p][m] = m^p, m in M(source p), result in M(target p)
};

// Checks the bundle shape, that boundaries are homomorphisms into vertex
// groups, the action laws, and CM1/CM2 wherever defined.
Report check_gx(const GXModData& data);

// Crossed module over a groupoid.
class GroupoidXMod {
 public:
  // Throws InvalidGroupoidXMod or the first axiom violation.
  static GroupoidXMod make(GXModData data);
  static GroupoidXMod from_xmod(const CrossedModule& x, std::string object = "*");

  const FiniteGroupoid& base() const { return data_.base; }
  const FiniteGroup& fibre(Obj x) const { return data_.fibres.at(x); }
  Mor boundary(Obj x, Elem m) const { return data_.boundary[x][m]; }
  // m^p for m in M(source p)
  Elem act(Elem m, Mor p) const { return data_.action[p][m]; }
  const GXModData& data() const { return data_; }

 private:
  explicit GroupoidXMod(GXModData data) : data_(std::move(data)) {}

  GXModData data_;
};

Partition pi0(const GroupoidXMod& gx);

// The crossed module of groups over one object: M(x) -> vertex group at x.
CrossedModule restrict_to_object(const GroupoidXMod& gx, Obj x);
FiniteGroup pi1_at(const GroupoidXMod& gx, Obj x);
FiniteGroup pi2_at(const GroupoidXMod& gx, Obj x);

struct GXModMorphism {
  GroupoidXMod source;
  GroupoidXMod target;
  std::vector<Obj> objects;              // f0
  std::vector<Mor> morphisms;            // f1
  std::vector<std::vector<Elem>> fibres;  // f2 at each source object
};

// Compatibility with source, target, composition, boundary and action, and
// each fibre map a group homomorphism.
Report check_morphism(const GXModMorphism& f);

// Morphism laws, star-surjectivity of (f1, f0) on stars by source, and
// surjectivity of every fibre map.
Report is_fibration(const GXModMorphism& f);

// Morphism laws plus bijectivity in every dimension.
Report check_isomorphism(const GXModMorphism& f);

GXModMorphism identity_morphism(const GroupoidXMod& gx);

}  // namespace xmod

#endif  // XMODLOOP_GROUPOID_H_
