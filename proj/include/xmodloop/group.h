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

#ifndef XMODLOOP_GROUP_H_
#define XMODLOOP_GROUP_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xmodloop/error.h"

namespace xmod {

// Index of an element in its group's canonical (input) order.
using Elem = std::size_t;

// Composition table, table[x][y] = x + y.
using Table = std::vector<std::vector<Elem>>;

// A finite group given by its full composition table, written additively:
// x + y, -x, 0. Elements are named by strings and indexed by their position
// in the input order, which is the canonical order for all enumeration.
//
// Instances are immutable and share their storage, so copies are cheap.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity exhaustively.
  static FiniteGroup make(std::vector<std::string> names, Table table,
                          Elem identity);
  static FiniteGroup make(std::vector<std::string> names,
                          const std::vector<std::vector<std::string>>& table,
                          std::string_view identity);

  std::size_t order() const { return rep_->names.size(); }
  Elem zero() const { return rep_->identity; }
  Elem add(Elem x, Elem y) const { return rep_->table[x][y]; }
  Elem neg(Elem x) const { return rep_->inverse[x]; }
  // -x + y + x
  Elem conj(Elem y, Elem x) const { return add(add(neg(x), y), x); }
  // [a, p] = -a - p + a + p
  Elem commutator(Elem a, Elem p) const;

  const std::string& name(Elem x) const { return rep_->names.at(x); }
  std::span<const std::string> names() const { return rep_->names; }
  const Table& table() const { return rep_->table; }

  // Throws UnknownElement.
  Elem index(std::string_view name) const;
  std::optional<Elem> find(std::string_view name) const;
  void require(Elem x) const;

  bool is_abelian() const;
  std::size_t element_order(Elem x) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Rep {
    std::vector<std::string> names;
    Table table;
    Elem identity = 0;
    std::vector<Elem> inverse;
  };
  explicit FiniteGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// Validation without construction; empty report iff `make` would succeed.
Report check_group(std::span<const std::string> names, const Table& table,
                   Elem identity);

class Subgroup {
 public:
  // Throws NotSubgroup if `members` is not closed under + and -.
  static Subgroup make(FiniteGroup parent, std::vector<Elem> members);

  const FiniteGroup& parent() const { return parent_; }
  // Sorted in canonical order.
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return mask_.at(x); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<Elem> members,
           std::vector<bool> mask)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        mask_(std::move(mask)) {}

  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

class Homomorphism {
 public:
  // Throws NotHomomorphism with a witnessing pair.
  static Homomorphism make(FiniteGroup source, FiniteGroup target,
                           std::vector<Elem> map);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

 private:
  Homomorphism(FiniteGroup s, FiniteGroup t, std::vector<Elem> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> map_;
};

Report check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                          std::span<const Elem> map);

// Right action of `actor` on `space` by automorphisms: table[p][m] = m^p.
class GroupAction {
 public:
  // Throws InvalidAction with the witnessing elements.
  static GroupAction make(FiniteGroup actor, FiniteGroup space, Table table);
  static GroupAction trivial(FiniteGroup actor, FiniteGroup space);

  const FiniteGroup& actor() const { return actor_; }
  const FiniteGroup& space() const { return space_; }
  const Table& table() const { return table_; }
  // m^p
  Elem apply(Elem m, Elem p) const { return table_[p][m]; }

 private:
  GroupAction(FiniteGroup a, FiniteGroup s, Table t)
      : actor_(std::move(a)), space_(std::move(s)), table_(std::move(t)) {}

  FiniteGroup actor_;
  FiniteGroup space_;
  Table table_;
};

// Checks m^0 = m, (m^p)^q = m^{p+q} and (m+n)^p = m^p + n^p.
Report check_action(const FiniteGroup& actor, const FiniteGroup& space,
                    const Table& table);

// {p : -a + p + a = p}
Subgroup centralizer(const FiniteGroup& g, Elem a);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;
};

std::optional<std::pair<Elem, Elem>> normality_witness(const Subgroup& n);
bool is_normal(const Subgroup& n);

// Cosets are named after their least element in canonical order. Throws
// NotNormal with a conjugation witness.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);

struct SubgroupAsGroup {
  FiniteGroup group;
  Homomorphism inclusion;
};

// The subgroup as a group in its own right, keeping the parent's names.
SubgroupAsGroup as_group(const Subgroup& h);

// Pairs (n, h) named "(n|h)" with (n,h) + (n',h') = (n^{h'} + n', h + h').
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const GroupAction& act);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

inline constexpr std::size_t kDefaultMaxOrder = 512;

// Backtracking over images of a generating set, pruned by element orders.
// Returns a witnessing isomorphism G -> H, or nullopt when none exists.
// Throws SizeLimitExceeded above `max_order`.
std::optional<Homomorphism> are_isomorphic(
    const FiniteGroup& g, const FiniteGroup& h,
    std::size_t max_order = kDefaultMaxOrder);

// [a, M]: the subgroup generated by {-m^a + m}. Throws SpaceNotAbelian.
Subgroup displacement_subgroup(const GroupAction& act, Elem a);

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

// Sorted multiset of element orders; an isomorphism invariant.
std::vector<std::size_t> order_profile(const FiniteGroup& g);

// Short human-readable isomorphism type for small groups ("1", "C4",
// "C2 x C2", "S3"), otherwise "order n abelian|nonabelian".
std::string structure_label(const FiniteGroup& g);

FiniteGroup trivial_group();
// Elements "0".."n-1", addition mod n.
FiniteGroup cyclic_group(std::size_t n);
// Permutations of {1..n} in cycle notation; x + y applies x first.
FiniteGroup symmetric_group(std::size_t n);

}  // namespace xmod

#endif  // XMODLOOP_GROUP_H_
