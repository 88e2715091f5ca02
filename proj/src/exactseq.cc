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

#include "xmodloop/exactseq.h"

#include <numeric>

namespace xmod {

namespace {

// pi = Ker delta as a group, with the boundary k -> -k^a + k on it.
struct PiBoundary {
  SubgroupAsGroup pi;
  Homomorphism boundary;
};

PiBoundary pi_boundary(const CrossedModule& x, Elem a) {
  const FiniteGroup& m = x.m();
  SubgroupAsGroup pi = as_group(kernel(x.delta()));
  if (!pi.group.is_abelian()) {
    throw Error(ErrorKind::kInternalInvariantBroken, "Ker delta is not abelian");
  }
  std::vector<Elem> map(pi.group.order());
  for (Elem i = 0; i < pi.group.order(); ++i) {
    const Elem k = pi.inclusion(i);
    auto v = pi.group.find(m.name(m.add(m.neg(x.act(k, a)), k)));
    if (!v) {
      throw Error(ErrorKind::kInternalInvariantBroken,
                  "-k^a + k leaves Ker delta at k=" + m.name(k));
    }
    map[i] = *v;
  }
  Homomorphism b = Homomorphism::make(pi.group, pi.group, std::move(map));
  return {std::move(pi), std::move(b)};
}

bool same_members(const Subgroup& s, const Subgroup& t) {
  return s.members() == t.members();
}

std::string member_list(const Subgroup& s) {
  std::string out = "{";
  for (Elem x : s.members()) {
    if (out.size() > 1) out += ", ";
    out += s.parent().name(x);
  }
  return out + "}";
}

// True when `a` and `b` have the same names and agree on every sum.
std::optional<std::string> tables_agree_by_name(const FiniteGroup& a,
                                                const FiniteGroup& b) {
  if (a.order() != b.order()) {
    return "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order());
  }
  std::vector<Elem> to_b(a.order());
  for (Elem i = 0; i < a.order(); ++i) {
    auto j = b.find(a.name(i));
    if (!j) return "element " + a.name(i) + " missing";
    to_b[i] = *j;
  }
  for (Elem i = 0; i < a.order(); ++i) {
    for (Elem k = 0; k < a.order(); ++k) {
      if (to_b[a.add(i, k)] != b.add(to_b[i], to_b[k])) {
        return a.name(i) + " + " + a.name(k) + " differs";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FibrationData fibration_psi(const CrossedModule& x) {
  const GroupoidXMod big = loop_gpd_xmod(x);
  const FiniteGroupoid& g = big.base();
  const FiniteGroup& p = x.p();

  GXModMorphism psi{big, GroupoidXMod::from_xmod(x), {}, {}, {}};
  psi.objects.assign(g.object_count(), 0);
  for (Mor i = 0; i < g.morphism_count(); ++i) {
    psi.morphisms.push_back(loop_triple(x, i).p);
  }
  for (Obj a = 0; a < g.object_count(); ++a) {
    std::vector<Elem> id(x.m().order());
    std::iota(id.begin(), id.end(), Elem{0});
    psi.fibres.push_back(std::move(id));
  }
  Report report = is_fibration(psi);
  if (!report.empty()) {
    throw Error(ErrorKind::kInternalInvariantBroken,
                "psi is not a fibration: " + report.front().witness);
  }

  std::vector<Mor> kept;
  std::vector<Mor> local(g.morphism_count(), kUndefined);
  for (Mor i = 0; i < g.morphism_count(); ++i) {
    if (loop_triple(x, i).p == p.zero()) {
      local[i] = kept.size();
      kept.push_back(i);
    }
  }
  GroupoidData fd;
  fd.objects = g.data().objects;
  for (Mor i : kept) {
    fd.morphisms.push_back(g.morphism_name(i));
    fd.source.push_back(g.source(i));
    fd.target.push_back(g.target(i));
  }
  fd.compose.assign(kept.size(), std::vector<Mor>(kept.size(), kUndefined));
  for (Mor i = 0; i < kept.size(); ++i) {
    for (Mor j = 0; j < kept.size(); ++j) {
      if (g.composable(kept[i], kept[j])) {
        fd.compose[i][j] = local[g.add(kept[i], kept[j])];
      }
    }
  }
  GXModData fibre{FiniteGroupoid::make(std::move(fd)), {}, {}, {}};
  for (Obj a = 0; a < g.object_count(); ++a) {
    std::string name = "(" + x.m().name(x.m().zero()) + "|" + p.name(a) + ")";
    fibre.fibres.push_back(FiniteGroup::make({name}, Table{{0}}, 0));
    fibre.boundary.push_back({local[g.identity(a)]});
  }
  fibre.action.assign(kept.size(), std::vector<Elem>{0});
  return {std::move(psi), GroupoidXMod::make(std::move(fibre))};
}

Subgroup fixed_points(const CrossedModule& x, Elem a) {
  const FiniteGroup& m = x.m();
  x.p().require(a);
  auto fixed_by = [&](Elem b) {
    std::vector<Elem> out;
    for (Elem k = 0; k < m.order(); ++k) {
      if (x.boundary(k) == x.p().zero() && x.act(k, b) == k) out.push_back(k);
    }
    return out;
  };
  std::vector<Elem> members = fixed_by(a);
  for (Elem n = 0; n < m.order(); ++n) {
    const Elem other = x.p().add(a, x.boundary(n));
    if (fixed_by(other) != members) {
      throw Error(ErrorKind::kInternalInvariantBroken,
                  "fixed points differ between " + x.p().name(a) + " and " +
                      x.p().name(other));
    }
  }
  return Subgroup::make(m, std::move(members));
}

FiniteGroup coinvariants(const CrossedModule& x, Elem a) {
  x.p().require(a);
  PiBoundary pb = pi_boundary(x, a);
  return quotient(pb.pi.group, image(pb.boundary)).group;
}

bool ExactSequence::exact() const {
  for (const NodeCheck& n : nodes) {
    if (!n.exact) return false;
  }
  return true;
}

ExactSequence exact_sequence(const CrossedModule& x, Elem a) {
  x.p().require(a);

  PiBoundary pb = pi_boundary(x, a);
  const FiniteGroup& pi = pb.pi.group;
  const Subgroup fixed_sub = fixed_points(x, a);
  SubgroupAsGroup fixed = as_group(fixed_sub);
  std::vector<Elem> inc(fixed.group.order());
  for (Elem i = 0; i < inc.size(); ++i) inc[i] = pi.index(fixed.group.name(i));
  Homomorphism inclusion = Homomorphism::make(fixed.group, pi, std::move(inc));

  // pi1(LX, a) through the groupoid L.
  const GroupoidXMod big = loop_gpd_xmod(x);
  const CrossedModule at_a = restrict_to_object(big, a);
  const HomotopyData loop_h = homotopy(at_a);
  const std::vector<Mor> loops = vertex_morphisms(big.base(), a);

  std::vector<Elem> jmap(pi.order());
  for (Elem i = 0; i < pi.order(); ++i) {
    const Mor v = loop_morphism_index(x, {pb.pi.inclusion(i), x.p().zero(), a});
    jmap[i] = loop_h.projection(at_a.p().index(big.base().morphism_name(v)));
  }
  Homomorphism j = Homomorphism::make(pi, loop_h.pi1, std::move(jmap));

  const HomotopyData base_h = homotopy(x);
  const Elem abar = base_h.projection(a);
  SubgroupAsGroup cent = as_group(centralizer(base_h.pi1, abar));
  std::vector<Elem> qmap(loop_h.pi1.order(), kUndefined);
  for (Elem i = 0; i < loops.size(); ++i) {
    const LoopTriple t = loop_triple(x, loops[i]);
    const Elem cls = loop_h.projection(i);
    auto val = cent.group.find(base_h.pi1.name(base_h.projection(t.p)));
    if (!val) {
      throw Error(ErrorKind::kExactnessFailure,
                  "C_a(G): image of " + big.base().morphism_name(loops[i]) +
                      " does not centralize the class of a");
    }
    if (qmap[cls] != kUndefined && qmap[cls] != *val) {
      throw Error(ErrorKind::kExactnessFailure,
                  "pi1(LX): q is not well defined on class " + loop_h.pi1.name(cls));
    }
    qmap[cls] = *val;
  }
  Homomorphism q = Homomorphism::make(loop_h.pi1, cent.group, std::move(qmap));

  Quotient cok = quotient(pi, image(pb.boundary));
  std::vector<Elem> induced_map(cok.group.order(), kUndefined);
  for (Elem k = 0; k < pi.order(); ++k) {
    const Elem c = cok.projection(k);
    if (induced_map[c] != kUndefined && induced_map[c] != j(k)) {
      throw Error(ErrorKind::kExactnessFailure,
                  "coinvariants: j does not factor through pi/Im d at " + pi.name(k));
    }
    induced_map[c] = j(k);
  }
  Homomorphism induced =
      Homomorphism::make(cok.group, loop_h.pi1, std::move(induced_map));

  std::vector<NodeCheck> nodes;
  nodes.push_back({"0 -> pi^a", inclusion.is_injective(), "inclusion is injective"});
  {
    const Subgroup im = image(inclusion);
    const Subgroup ker = kernel(pb.boundary);
    nodes.push_back({"pi", same_members(im, ker),
                     "Im inclusion = " + member_list(im) + ", Ker d = " +
                         member_list(ker)});
  }
  {
    const Subgroup im = image(pb.boundary);
    const Subgroup ker = kernel(j);
    nodes.push_back({"pi1(F,a)", same_members(im, ker),
                     "Im d = " + member_list(im) + ", Ker j = " + member_list(ker)});
  }
  {
    const Subgroup im = image(j);
    const Subgroup ker = kernel(q);
    nodes.push_back({"pi1(LX,a)", same_members(im, ker),
                     "|Im j| = " + std::to_string(im.size()) +
                         ", |Ker q| = " + std::to_string(ker.size())});
  }
  nodes.push_back({"C_a(G) -> 1", q.is_surjective(),
                   "|Im q| = " + std::to_string(image(q).size()) + " of " +
                       std::to_string(cent.group.order())});
  {
    const LoopHomotopy lh = pi_loop(x, a);
    nodes.push_back({"pi2(LX,a) = pi^a", lh.kernel.members() == fixed_sub.members(),
                     "Ker delta_a = " + member_list(lh.kernel) + ", pi^a = " +
                         member_list(fixed_sub)});
  }
  {
    const std::size_t im = image(induced).size();
    const bool ok = induced.is_injective() &&
                    loop_h.pi1.order() == im * cent.group.order();
    nodes.push_back({"pi/{a} -> pi1(LX,a)", ok,
                     "|pi/{a}| = " + std::to_string(cok.group.order()) +
                         ", |pi1| = " + std::to_string(loop_h.pi1.order()) +
                         ", |C_a(G)| = " + std::to_string(cent.group.order())});
  }
  for (const NodeCheck& n : nodes) {
    if (!n.exact) throw Error(ErrorKind::kExactnessFailure, n.node + ": " + n.detail);
  }
  return {a,
          std::move(fixed.group),
          pi,
          pi,
          loop_h.pi1,
          std::move(cent.group),
          std::move(inclusion),
          std::move(pb.boundary),
          std::move(j),
          std::move(q),
          std::move(cok.group),
          std::move(induced),
          std::move(nodes)};
}

std::size_t pi0_tail_orbit_count(const CrossedModule& x) {
  const FibrationData fd = fibration_psi(x);
  const Partition part = pi0(fd.fibre);
  const FiniteGroup& p = x.p();
  std::vector<std::size_t> parent(part.classes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    const Elem rep = part.representative(c);
    for (Elem q = 0; q < p.order(); ++q) {
      const std::size_t d = part.class_of[p.add(p.add(q, rep), p.neg(q))];
      const std::size_t rc = find(c);
      const std::size_t rd = find(d);
      if (rc != rd) parent[std::max(rc, rd)] = std::min(rc, rd);
    }
  }
  std::size_t count = 0;
  for (std::size_t c = 0; c < parent.size(); ++c) count += find(c) == c;
  return count;
}

Report example1_check(const CrossedModule& x, Elem a, std::size_t max_order) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  p.require(a);
  for (Elem e = 0; e < m.order(); ++e) {
    if (x.boundary(e) != p.zero()) {
      throw Error(ErrorKind::kPreconditionFailed,
                  "delta is not zero: delta(" + m.name(e) + ") = " +
                      p.name(x.boundary(e)));
    }
  }
  Report report;
  SubgroupAsGroup cent = as_group(centralizer(p, a));
  const Subgroup displacement = displacement_subgroup(x.action(), a);
  const Quotient mq = quotient(m, displacement);

  // C_a(P) acting on M/[a,M] through representatives.
  std::vector<Elem> rep_of(mq.group.order());
  for (Elem c = 0; c < mq.group.order(); ++c) rep_of[c] = m.index(mq.group.name(c));
  Table on_quotient(cent.group.order(), std::vector<Elem>(mq.group.order()));
  Table on_m(cent.group.order());
  for (Elem i = 0; i < cent.group.order(); ++i) {
    const Elem c = cent.inclusion(i);
    for (Elem k = 0; k < mq.group.order(); ++k) {
      on_quotient[i][k] = mq.projection(x.act(rep_of[k], c));
    }
    on_m[i] = x.action().table()[c];
  }
  Report act_report = check_action(cent.group, mq.group, on_quotient);
  if (!act_report.empty()) {
    report.push_back({ErrorKind::kInternalInvariantBroken,
                      "C_a(P) does not act on M/[a,M]: " + act_report.front().witness});
    return report;
  }
  const FiniteGroup rhs = semidirect_product(
      mq.group, cent.group, GroupAction::make(cent.group, mq.group, on_quotient));
  const LoopHomotopy lh = pi_loop(x, a);
  if (!are_isomorphic(rhs, lh.pi1, max_order)) {
    report.push_back({ErrorKind::kIsomorphismNotFound,
                      "pi1(L, a) of order " + std::to_string(lh.pi1.order()) +
                          " vs (M/[a,M]) x| C_a(P) of order " +
                          std::to_string(rhs.order())});
  }

  const FiniteGroup pa = group_pa(x, a);
  const FiniteGroup split = semidirect_product(
      m, cent.group, GroupAction::make(cent.group, m, std::move(on_m)));
  if (auto diff = tables_agree_by_name(pa, split)) {
    report.push_back({ErrorKind::kInternalInvariantBroken,
                      "P(a) != M x| C_a(P) elementwise: " + *diff});
  }
  return report;
}

Report example2_check(const CrossedModule& x, Elem a, std::size_t max_order) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  p.require(a);
  for (Elem q = 0; q < p.order(); ++q) {
    if (p.commutator(a, q) != p.zero()) {
      throw Error(ErrorKind::kPreconditionFailed,
                  p.name(a) + " is not central: [a, " + p.name(q) + "] = " +
                      p.name(p.commutator(a, q)));
    }
  }
  Report report;
  SubgroupAsGroup pi = as_group(kernel(x.delta()));
  Table on_pi(p.order(), std::vector<Elem>(pi.group.order()));
  for (Elem q = 0; q < p.order(); ++q) {
    for (Elem i = 0; i < pi.group.order(); ++i) {
      on_pi[q][i] = pi.group.index(m.name(x.act(pi.inclusion(i), q)));
    }
  }
  const FiniteGroup split =
      semidirect_product(pi.group, p, GroupAction::make(p, pi.group, std::move(on_pi)));

  const LoopData data = loop_data(x, a);
  if (auto diff = tables_agree_by_name(data.pa, split)) {
    report.push_back({ErrorKind::kInternalInvariantBroken,
                      "P(a) != pi x| P elementwise: " + *diff});
    return report;
  }
  std::vector<Elem> relators;
  for (Elem e = 0; e < m.order(); ++e) {
    relators.push_back(split.index(data.pa.name(data.delta_a(e))));
  }
  const Subgroup rel = subgroup_generated(split, relators);
  const FiniteGroup presented = quotient(split, rel).group;
  const LoopHomotopy lh = pi_loop(x, a);
  if (!are_isomorphic(presented, lh.pi1, max_order)) {
    report.push_back({ErrorKind::kIsomorphismNotFound,
                      "(pi x| P)/{delta_a(m)} of order " +
                          std::to_string(presented.order()) + " vs pi1(L, a) of order " +
                          std::to_string(lh.pi1.order())});
  }
  return report;
}

}  // namespace xmod
