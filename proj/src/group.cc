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

#include "xmodloop/group.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace xmod {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

std::string pair_name(std::string_view a, std::string_view b) {
  std::string out = "(";
  out += a;
  out += '|';
  out += b;
  out += ')';
  return out;
}

std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{g.zero()};
  in[g.zero()] = true;
  // Every element of a finite subgroup is a positive word in the generators.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.add(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return in;
}

Subgroup subgroup_from_mask(const FiniteGroup& g, const std::vector<bool>& mask) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  return Subgroup::make(g, std::move(members));
}

}  // namespace

// --- FiniteGroup ------------------------------------------------------------

Report check_group(std::span<const std::string> names, const Table& table,
                   Elem identity) {
  Report report;
  const std::size_t n = names.size();
  if (n == 0) {
    report.push_back({ErrorKind::kEmptyGroup, "no elements"});
    return report;
  }
  std::set<std::string_view> seen;
  for (const std::string& name : names) {
    if (!seen.insert(name).second) {
      report.push_back({ErrorKind::kDuplicateElement, "'" + name + "'"});
      return report;
    }
  }
  if (table.size() != n) {
    report.push_back({ErrorKind::kNotClosed,
                      "table has " + std::to_string(table.size()) +
                          " rows for " + std::to_string(n) + " elements"});
    return report;
  }
  for (Elem x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      report.push_back({ErrorKind::kNotClosed,
                        "row '" + names[x] + "' has " +
                            std::to_string(table[x].size()) + " entries"});
      return report;
    }
    for (Elem y = 0; y < n; ++y) {
      if (table[x][y] >= n) {
        report.push_back({ErrorKind::kNotClosed,
                          names[x] + " + " + names[y] + " is not an element"});
        return report;
      }
    }
  }
  if (identity >= n) {
    report.push_back({ErrorKind::kNoIdentity, "identity is not an element"});
    return report;
  }
  for (Elem x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x) {
      report.push_back({ErrorKind::kNoIdentity,
                        names[identity] + " is not a two-sided identity for " +
                            names[x]});
      return report;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) {
      found = table[x][y] == identity && table[y][x] == identity;
    }
    if (!found) {
      report.push_back({ErrorKind::kNoInverse,
                        names[x] + " has no two-sided inverse"});
      return report;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = table[x][y];
      for (Elem z = 0; z < n; ++z) {
        if (table[xy][z] != table[x][table[y][z]]) {
          report.push_back({ErrorKind::kNotAssociative,
                            "(" + names[x] + " + " + names[y] + ") + " +
                                names[z] + " != " + names[x] + " + (" +
                                names[y] + " + " + names[z] + ")"});
          return report;
        }
      }
    }
  }
  return report;
}

FiniteGroup FiniteGroup::make(std::vector<std::string> names, Table table,
                              Elem identity) {
  throw_if_any(check_group(names, table, identity));
  auto rep = std::make_shared<Rep>();
  const std::size_t n = names.size();
  rep->inverse.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (table[x][y] == identity) {
        rep->inverse[x] = y;
        break;
      }
    }
  }
  rep->names = std::move(names);
  rep->table = std::move(table);
  rep->identity = identity;
  return FiniteGroup(std::move(rep));
}

FiniteGroup FiniteGroup::make(std::vector<std::string> names,
                              const std::vector<std::vector<std::string>>& table,
                              std::string_view identity) {
  std::map<std::string_view, Elem> index;
  for (Elem x = 0; x < names.size(); ++x) index.emplace(names[x], x);
  auto lookup = [&](std::string_view name) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorKind::kNotClosed,
                  "table entry '" + std::string(name) + "' is not an element");
    }
    return it->second;
  };
  Table t(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (const std::string& entry : table[i]) t[i].push_back(lookup(entry));
  }
  auto id = index.find(identity);
  if (id == index.end()) {
    throw Error(ErrorKind::kNoIdentity,
                "identity '" + std::string(identity) + "' is not an element");
  }
  return make(std::move(names), std::move(t), id->second);
}

Elem FiniteGroup::commutator(Elem a, Elem p) const {
  return add(add(add(neg(a), neg(p)), a), p);
}

std::optional<Elem> FiniteGroup::find(std::string_view name) const {
  for (Elem x = 0; x < order(); ++x) {
    if (rep_->names[x] == name) return x;
  }
  return std::nullopt;
}

Elem FiniteGroup::index(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorKind::kUnknownElement, "'" + std::string(name) + "'");
}

void FiniteGroup::require(Elem x) const {
  if (x >= order()) {
    throw Error(ErrorKind::kUnknownElement,
                "index " + std::to_string(x) + " in group of order " +
                    std::to_string(order()));
  }
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order(); ++x) {
    for (Elem y = x + 1; y < order(); ++y) {
      if (add(x, y) != add(y, x)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != zero(); y = add(y, x)) ++k;
  return k;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->names == b.rep_->names && a.rep_->table == b.rep_->table &&
         a.rep_->identity == b.rep_->identity;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup Subgroup::make(FiniteGroup parent, std::vector<Elem> members) {
  std::vector<bool> mask(parent.order(), false);
  for (Elem x : members) {
    parent.require(x);
    mask[x] = true;
  }
  if (!mask[parent.zero()]) {
    throw Error(ErrorKind::kNotSubgroup, "does not contain the identity");
  }
  for (Elem x : members) {
    if (!mask[parent.neg(x)]) {
      throw Error(ErrorKind::kNotSubgroup,
                  "-" + parent.name(x) + " missing");
    }
    for (Elem y : members) {
      if (!mask[parent.add(x, y)]) {
        throw Error(ErrorKind::kNotSubgroup,
                    parent.name(x) + " + " + parent.name(y) + " missing");
      }
    }
  }
  std::vector<Elem> sorted;
  for (Elem x = 0; x < parent.order(); ++x) {
    if (mask[x]) sorted.push_back(x);
  }
  return Subgroup(std::move(parent), std::move(sorted), std::move(mask));
}

// --- Homomorphism -----------------------------------------------------------

Report check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                          std::span<const Elem> map) {
  Report report;
  if (map.size() != source.order()) {
    report.push_back({ErrorKind::kNotHomomorphism,
                      "map has " + std::to_string(map.size()) +
                          " entries for a group of order " +
                          std::to_string(source.order())});
    return report;
  }
  for (Elem x = 0; x < source.order(); ++x) {
    if (map[x] >= target.order()) {
      report.push_back({ErrorKind::kNotHomomorphism,
                        "image of " + source.name(x) + " is not an element"});
      return report;
    }
  }
  if (map[source.zero()] != target.zero()) {
    report.push_back({ErrorKind::kNotHomomorphism,
                      "identity maps to " + target.name(map[source.zero()])});
  }
  for (Elem x = 0; x < source.order(); ++x) {
    for (Elem y = 0; y < source.order(); ++y) {
      if (map[source.add(x, y)] != target.add(map[x], map[y])) {
        report.push_back({ErrorKind::kNotHomomorphism,
                          "f(" + source.name(x) + " + " + source.name(y) +
                              ") = " + target.name(map[source.add(x, y)]) +
                              " but f(" + source.name(x) + ") + f(" +
                              source.name(y) + ") = " +
                              target.name(target.add(map[x], map[y]))});
        return report;
      }
    }
  }
  return report;
}

Homomorphism Homomorphism::make(FiniteGroup source, FiniteGroup target,
                                std::vector<Elem> map) {
  throw_if_any(check_homomorphism(source, target, map));
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

bool Homomorphism::is_injective() const {
  std::vector<bool> hit(target_.order(), false);
  for (Elem y : map_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (Elem y : map_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// --- GroupAction ------------------------------------------------------------

Report check_action(const FiniteGroup& actor, const FiniteGroup& space,
                    const Table& table) {
  Report report;
  auto fail = [&](std::string witness) {
    report.push_back({ErrorKind::kInvalidAction, std::move(witness)});
  };
  if (table.size() != actor.order()) {
    fail("action table has " + std::to_string(table.size()) + " rows");
    return report;
  }
  for (Elem p = 0; p < actor.order(); ++p) {
    if (table[p].size() != space.order()) {
      fail("action row for " + actor.name(p) + " has wrong length");
      return report;
    }
    for (Elem m = 0; m < space.order(); ++m) {
      if (table[p][m] >= space.order()) {
        fail(space.name(m) + "^" + actor.name(p) + " is not an element");
        return report;
      }
    }
  }
  for (Elem m = 0; m < space.order(); ++m) {
    if (table[actor.zero()][m] != m) {
      fail(space.name(m) + "^0 = " + space.name(table[actor.zero()][m]) +
           " != " + space.name(m));
    }
  }
  for (Elem p = 0; p < actor.order(); ++p) {
    for (Elem q = 0; q < actor.order(); ++q) {
      const Elem pq = actor.add(p, q);
      for (Elem m = 0; m < space.order(); ++m) {
        if (table[q][table[p][m]] != table[pq][m]) {
          fail("(" + space.name(m) + "^" + actor.name(p) + ")^" +
               actor.name(q) + " != " + space.name(m) + "^(" + actor.name(p) +
               " + " + actor.name(q) + ")");
          return report;
        }
      }
    }
  }
  for (Elem p = 0; p < actor.order(); ++p) {
    for (Elem m = 0; m < space.order(); ++m) {
      for (Elem n = 0; n < space.order(); ++n) {
        if (table[p][space.add(m, n)] !=
            space.add(table[p][m], table[p][n])) {
          fail("(" + space.name(m) + " + " + space.name(n) + ")^" +
               actor.name(p) + " != " + space.name(m) + "^" + actor.name(p) +
               " + " + space.name(n) + "^" + actor.name(p));
          return report;
        }
      }
    }
  }
  return report;
}

GroupAction GroupAction::make(FiniteGroup actor, FiniteGroup space,
                              Table table) {
  throw_if_any(check_action(actor, space, table));
  return GroupAction(std::move(actor), std::move(space), std::move(table));
}

GroupAction GroupAction::trivial(FiniteGroup actor, FiniteGroup space) {
  std::vector<Elem> row(space.order());
  std::iota(row.begin(), row.end(), Elem{0});
  Table table(actor.order(), row);
  return GroupAction(std::move(actor), std::move(space), std::move(table));
}

// --- Subgroup constructions -------------------------------------------------

Subgroup centralizer(const FiniteGroup& g, Elem a) {
  g.require(a);
  std::vector<Elem> members;
  for (Elem p = 0; p < g.order(); ++p) {
    if (g.conj(p, a) == p) members.push_back(p);
  }
  return Subgroup::make(g, std::move(members));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  for (Elem s : gens) g.require(s);
  return subgroup_from_mask(g, closure_mask(g, gens));
}

std::optional<std::pair<Elem, Elem>> normality_witness(const Subgroup& n) {
  const FiniteGroup& g = n.parent();
  for (Elem x : n.members()) {
    for (Elem p = 0; p < g.order(); ++p) {
      if (!n.contains(g.conj(x, p))) return std::make_pair(x, p);
    }
  }
  return std::nullopt;
}

bool is_normal(const Subgroup& n) { return !normality_witness(n).has_value(); }

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!(n.parent() == g)) {
    throw Error(ErrorKind::kNotSubgroup, "subgroup of a different group");
  }
  if (auto w = normality_witness(n)) {
    throw Error(ErrorKind::kNotNormal,
                "-" + g.name(w->second) + " + " + g.name(w->first) + " + " +
                    g.name(w->second) + " leaves the subgroup");
  }
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::vector<Elem> reps;
  // Scanning in canonical order makes each coset's first hit its least element.
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const Elem c = reps.size();
    reps.push_back(x);
    for (Elem k : n.members()) coset_of[g.add(x, k)] = c;
  }
  std::vector<std::string> names;
  for (Elem r : reps) names.push_back(g.name(r));
  Table table(reps.size(), std::vector<Elem>(reps.size()));
  for (Elem i = 0; i < reps.size(); ++i) {
    for (Elem j = 0; j < reps.size(); ++j) {
      table[i][j] = coset_of[g.add(reps[i], reps[j])];
    }
  }
  FiniteGroup q =
      FiniteGroup::make(std::move(names), std::move(table), coset_of[g.zero()]);
  Homomorphism proj = Homomorphism::make(g, q, std::move(coset_of));
  return {std::move(q), std::move(proj)};
}

Subgroup kernel(const Homomorphism& f) {
  std::vector<Elem> members;
  for (Elem x = 0; x < f.source().order(); ++x) {
    if (f(x) == f.target().zero()) members.push_back(x);
  }
  return Subgroup::make(f.source(), std::move(members));
}

Subgroup image(const Homomorphism& f) {
  std::vector<bool> mask(f.target().order(), false);
  for (Elem y : f.map()) mask[y] = true;
  return subgroup_from_mask(f.target(), mask);
}

SubgroupAsGroup as_group(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& members = h.members();
  std::vector<Elem> local(g.order(), kUnset);
  for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<std::string> names;
  for (Elem x : members) names.push_back(g.name(x));
  Table table(members.size(), std::vector<Elem>(members.size()));
  for (Elem i = 0; i < members.size(); ++i) {
    for (Elem j = 0; j < members.size(); ++j) {
      table[i][j] = local[g.add(members[i], members[j])];
    }
  }
  FiniteGroup sub =
      FiniteGroup::make(std::move(names), std::move(table), local[g.zero()]);
  Homomorphism inc = Homomorphism::make(sub, g, members);
  return {std::move(sub), std::move(inc)};
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const GroupAction& act) {
  if (!(act.actor() == h) || !(act.space() == n)) {
    throw Error(ErrorKind::kInvalidAction,
                "action is not of the given factor on the given normal factor");
  }
  throw_if_any(check_action(h, n, act.table()));
  const std::size_t nh = h.order();
  auto index = [nh](Elem a, Elem b) { return a * nh + b; };
  std::vector<std::string> names;
  for (Elem a = 0; a < n.order(); ++a) {
    for (Elem b = 0; b < nh; ++b) names.push_back(pair_name(n.name(a), h.name(b)));
  }
  const std::size_t size = names.size();
  Table table(size, std::vector<Elem>(size));
  for (Elem a = 0; a < n.order(); ++a) {
    for (Elem b = 0; b < nh; ++b) {
      for (Elem a2 = 0; a2 < n.order(); ++a2) {
        for (Elem b2 = 0; b2 < nh; ++b2) {
          table[index(a, b)][index(a2, b2)] =
              index(n.add(act.apply(a, b2), a2), h.add(b, b2));
        }
      }
    }
  }
  return FiniteGroup::make(std::move(names), std::move(table),
                           index(n.zero(), h.zero()));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  return semidirect_product(g, h, GroupAction::trivial(h, g));
}

Subgroup displacement_subgroup(const GroupAction& act, Elem a) {
  const FiniteGroup& m = act.space();
  act.actor().require(a);
  if (!m.is_abelian()) {
    for (Elem x = 0; x < m.order(); ++x) {
      for (Elem y = 0; y < m.order(); ++y) {
        if (m.add(x, y) != m.add(y, x)) {
          throw Error(ErrorKind::kSpaceNotAbelian,
                      m.name(x) + " + " + m.name(y) + " != " + m.name(y) +
                          " + " + m.name(x));
        }
      }
    }
  }
  std::vector<Elem> gens;
  for (Elem x = 0; x < m.order(); ++x) {
    gens.push_back(m.add(m.neg(act.apply(x, a)), x));
  }
  return subgroup_generated(m, gens);
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<bool> in(g.order(), false);
    for (Elem p = 0; p < g.order(); ++p) in[g.conj(x, p)] = true;
    std::vector<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y) {
      if (in[y]) {
        cls.push_back(y);
        seen[y] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> orders;
  for (Elem x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

// --- Isomorphism ------------------------------------------------------------

namespace {

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem x, Elem y) {
    return g.element_order(x) > g.element_order(y);
  });
  std::vector<Elem> gens;
  std::vector<bool> in = closure_mask(g, gens);
  for (Elem x : by_order) {
    if (in[x]) continue;
    gens.push_back(x);
    in = closure_mask(g, gens);
  }
  return gens;
}

// Extends generator images to the subgroup they generate, requiring
// f(x + s) = f(x) + f(s) and injectivity. Empty result means a conflict.
std::vector<Elem> extend(const FiniteGroup& g, const FiniteGroup& h,
                         std::span<const Elem> gens,
                         std::span<const Elem> images) {
  std::vector<Elem> map(g.order(), kUnset);
  std::vector<bool> used(h.order(), false);
  map[g.zero()] = h.zero();
  used[h.zero()] = true;
  std::vector<Elem> queue{g.zero()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.add(x, gens[k]);
      const Elem fy = h.add(map[x], images[k]);
      if (map[y] == kUnset) {
        if (used[fy]) return {};
        map[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return {};
      }
    }
  }
  return map;
}

}  // namespace

std::optional<Homomorphism> are_isomorphic(const FiniteGroup& g,
                                           const FiniteGroup& h,
                                           std::size_t max_order) {
  if (g.order() > max_order || h.order() > max_order) {
    throw Error(ErrorKind::kSizeLimitExceeded,
                "orders " + std::to_string(g.order()) + " and " +
                    std::to_string(h.order()) + " exceed bound " +
                    std::to_string(max_order));
  }
  if (g.order() != h.order()) return std::nullopt;
  if (g == h) {
    std::vector<Elem> id(g.order());
    std::iota(id.begin(), id.end(), Elem{0});
    return Homomorphism::make(g, h, std::move(id));
  }
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;

  const std::vector<Elem> gens = generating_set(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = g.element_order(gens[k]);
    for (Elem y = 0; y < h.order(); ++y) {
      if (h.element_order(y) == ord) candidates[k].push_back(y);
    }
  }

  std::vector<Elem> images;
  std::vector<Elem> found;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) {
      found = extend(g, h, gens, images);
      return !found.empty();
    }
    for (Elem y : candidates[depth]) {
      images.push_back(y);
      const std::span<const Elem> prefix(gens.data(), depth + 1);
      if (!extend(g, h, prefix, images).empty() && search(depth + 1)) {
        return true;
      }
      images.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return Homomorphism::make(g, h, std::move(found));
}

// --- Labels and standard groups ---------------------------------------------

namespace {

std::size_t count_killed_by(const FiniteGroup& g, std::size_t d) {
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem y = g.zero();
    for (std::size_t i = 0; i < d; ++i) y = g.add(y, x);
    if (y == g.zero()) ++count;
  }
  return count;
}

// Invariant factors n1 | n2 | ... | nk of a finite abelian group, matched by
// counting solutions of d*x = 0 for every divisor d of the order.
std::vector<std::size_t> invariant_factors(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  std::vector<std::size_t> target;
  for (std::size_t d : divisors) target.push_back(count_killed_by(g, d));

  std::vector<std::size_t> factors;
  std::vector<std::size_t> result;
  std::function<bool(std::size_t, std::size_t)> build = [&](std::size_t rest,
                                                            std::size_t last) {
    if (rest == 1) {
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        std::size_t c = 1;
        for (std::size_t f : factors) c *= std::gcd(divisors[i], f);
        if (c != target[i]) return false;
      }
      result = factors;
      return true;
    }
    for (std::size_t f = 2; f <= rest; ++f) {
      if (rest % f != 0 || (last != 0 && f % last != 0)) continue;
      factors.push_back(f);
      if (build(rest / f, f)) return true;
      factors.pop_back();
    }
    return false;
  };
  build(n, 0);
  return result;
}

}  // namespace

std::string structure_label(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return "1";
  if (g.is_abelian()) {
    std::string out;
    for (std::size_t f : invariant_factors(g)) {
      if (!out.empty()) out += " x ";
      out += "C" + std::to_string(f);
    }
    return out;
  }
  if (n == 6) return "S3";
  if (n == 8) return count_killed_by(g, 2) == 2 ? "Q8" : "D4";
  return "order " + std::to_string(n) + " nonabelian";
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  Table table(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    for (Elem y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  }
  return FiniteGroup::make(std::move(names), std::move(table), 0);
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) {
    throw Error(ErrorKind::kSizeLimitExceeded,
                "symmetric_group supports degrees 1..5");
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto moved = [](const std::vector<std::size_t>& q) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < q.size(); ++i) k += q[i] != i;
    return k;
  };
  auto cycles = [](const std::vector<std::size_t>& q) {
    std::string out;
    std::vector<bool> seen(q.size(), false);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (seen[i] || q[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = q[j]) {
        seen[j] = true;
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? std::string("()") : out;
  };
  std::stable_sort(perms.begin(), perms.end(), [&](const auto& a, const auto& b) {
    if (moved(a) != moved(b)) return moved(a) < moved(b);
    return cycles(a) < cycles(b);
  });

  std::map<std::vector<std::size_t>, Elem> index;
  std::vector<std::string> names;
  for (Elem x = 0; x < perms.size(); ++x) {
    index.emplace(perms[x], x);
    names.push_back(cycles(perms[x]));
  }
  Table table(perms.size(), std::vector<Elem>(perms.size()));
  for (Elem x = 0; x < perms.size(); ++x) {
    for (Elem y = 0; y < perms.size(); ++y) {
      std::vector<std::size_t> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[y][perms[x][i]];
      table[x][y] = index.at(r);
    }
  }
  return FiniteGroup::make(std::move(names), std::move(table), 0);
}

}  // namespace xmod
