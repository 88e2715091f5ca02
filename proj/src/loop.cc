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

#include "xmodloop/loop.h"

#include <numeric>
#include <string>

namespace xmod {

namespace {

std::string tuple_name(std::initializer_list<std::string_view> parts) {
  std::string out = "(";
  bool first = true;
  for (std::string_view s : parts) {
    if (!first) out += '|';
    out += s;
    first = false;
  }
  return out + ")";
}

}  // namespace

Partition components(const CrossedModule& x) {
  const FiniteGroup& p = x.p();
  const FiniteGroup& m = x.m();
  std::vector<std::size_t> parent(p.order());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Elem a = 0; a < p.order(); ++a) {
    for (Elem q = 0; q < p.order(); ++q) {
      for (Elem e = 0; e < m.order(); ++e) {
        // b = q + a + delta(e) - q
        const Elem b = p.add(p.add(p.add(q, a), x.boundary(e)), p.neg(q));
        const std::size_t ra = find(a);
        const std::size_t rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  Partition out;
  out.class_of.assign(p.order(), kUndefined);
  std::vector<std::size_t> root_class(p.order(), kUndefined);
  for (Elem a = 0; a < p.order(); ++a) {
    const std::size_t r = find(a);
    if (root_class[r] == kUndefined) {
      root_class[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.class_of[a] = root_class[r];
    out.classes[root_class[r]].push_back(a);
  }
  const FiniteGroup g = quotient(p, image(x.delta())).group;
  const std::size_t classes = conjugacy_classes(g).size();
  if (classes != out.classes.size()) {
    throw Error(ErrorKind::kInternalInvariantBroken,
                std::to_string(out.classes.size()) + " components but Cok delta has " +
                    std::to_string(classes) + " conjugacy classes");
  }
  return out;
}

LoopData loop_data(const CrossedModule& x, Elem a) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  p.require(a);

  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> index(m.order() * p.order(), kUndefined);
  for (Elem e = 0; e < m.order(); ++e) {
    for (Elem q = 0; q < p.order(); ++q) {
      if (x.boundary(e) == p.commutator(a, q)) {
        index[e * p.order() + q] = pairs.size();
        pairs.emplace_back(e, q);
      }
    }
  }
  auto lookup = [&](Elem e, Elem q) {
    const Elem i = index[e * p.order() + q];
    if (i == kUndefined) {
      throw Error(ErrorKind::kInternalInvariantBroken,
                  "P(a) not closed: (" + m.name(e) + "|" + p.name(q) + ")");
    }
    return i;
  };

  std::vector<std::string> names;
  for (auto [e, q] : pairs) names.push_back(tuple_name({m.name(e), p.name(q)}));
  Table table(pairs.size(), std::vector<Elem>(pairs.size()));
  for (Elem i = 0; i < pairs.size(); ++i) {
    const auto [n, q] = pairs[i];
    for (Elem j = 0; j < pairs.size(); ++j) {
      const auto [e, r] = pairs[j];
      // (n,q) + (e,r) = (e + n^r, q + r)
      table[i][j] = lookup(m.add(e, x.act(n, r)), p.add(q, r));
    }
  }
  FiniteGroup pa = FiniteGroup::make(std::move(names), std::move(table),
                                     lookup(m.zero(), p.zero()));

  // -(m,p) = (-m^{-p}, -p), checked against the table's inverses.
  for (Elem i = 0; i < pairs.size(); ++i) {
    const auto [e, q] = pairs[i];
    const Elem expected = lookup(m.neg(x.act(e, p.neg(q))), p.neg(q));
    if (pa.neg(i) != expected) {
      throw Error(ErrorKind::kInternalInvariantBroken,
                  "inverse of " + pa.name(i) + " is " + pa.name(pa.neg(i)));
    }
  }

  std::vector<Elem> delta(m.order());
  for (Elem e = 0; e < m.order(); ++e) {
    const Elem first = m.add(m.neg(x.act(e, a)), e);
    if (x.boundary(first) != p.commutator(a, x.boundary(e))) {
      throw Error(ErrorKind::kCodomainViolation,
                  "delta(-m^a + m) != [a, delta m] at m=" + m.name(e));
    }
    delta[e] = lookup(first, x.boundary(e));
  }
  Homomorphism da = Homomorphism::make(m, pa, std::move(delta));

  Table action(pairs.size());
  for (Elem i = 0; i < pairs.size(); ++i) {
    action[i] = x.action().table()[pairs[i].second];
  }
  GroupAction act = GroupAction::make(pa, m, std::move(action));
  return {a, std::move(pa), std::move(pairs), std::move(da), std::move(act)};
}

FiniteGroup group_pa(const CrossedModule& x, Elem a) { return loop_data(x, a).pa; }

Homomorphism delta_a(const CrossedModule& x, Elem a) {
  return loop_data(x, a).delta_a;
}

CrossedModule loop_xmod_at(const CrossedModule& x, Elem a) {
  LoopData d = loop_data(x, a);
  return make_xmod(x.m(), d.pa, d.delta_a.map(), d.action.table());
}

Mor loop_morphism_index(const CrossedModule& x, const LoopTriple& t) {
  const std::size_t np = x.p().order();
  return (t.m * np + t.p) * np + t.a;
}

LoopTriple loop_triple(const CrossedModule& x, Mor index) {
  const std::size_t np = x.p().order();
  return {index / (np * np), (index / np) % np, index % np};
}

GroupoidXMod loop_gpd_xmod(const CrossedModule& x) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  const std::size_t count = m.order() * p.order() * p.order();

  GroupoidData g;
  g.objects.assign(p.names().begin(), p.names().end());
  g.morphisms.resize(count);
  g.source.resize(count);
  g.target.resize(count);
  for (Mor i = 0; i < count; ++i) {
    const LoopTriple t = loop_triple(x, i);
    g.morphisms[i] = tuple_name({m.name(t.m), p.name(t.p), p.name(t.a)});
    g.source[i] = p.add(p.add(p.add(t.p, t.a), x.boundary(t.m)), p.neg(t.p));
    g.target[i] = t.a;
  }
  g.compose.assign(count, std::vector<Mor>(count, kUndefined));
  for (Mor i = 0; i < count; ++i) {
    const LoopTriple u = loop_triple(x, i);  // (n, q, b)
    for (Mor j = 0; j < count; ++j) {
      if (g.target[i] != g.source[j]) continue;
      const LoopTriple t = loop_triple(x, j);  // (m, p, a)
      g.compose[i][j] = loop_morphism_index(
          x, {m.add(t.m, x.act(u.m, t.p)), p.add(u.p, t.p), t.a});
    }
  }
  FiniteGroupoid base = FiniteGroupoid::make(std::move(g));

  GXModData d{base, {}, {}, {}};
  for (Elem a = 0; a < p.order(); ++a) {
    std::vector<std::string> names;
    for (Elem e = 0; e < m.order(); ++e) {
      names.push_back(tuple_name({m.name(e), p.name(a)}));
    }
    d.fibres.push_back(FiniteGroup::make(std::move(names), m.table(), m.zero()));
    std::vector<Mor> boundary(m.order());
    for (Elem e = 0; e < m.order(); ++e) {
      boundary[e] = loop_morphism_index(
          x, {m.add(m.neg(x.act(e, a)), e), x.boundary(e), a});
    }
    d.boundary.push_back(std::move(boundary));
  }
  d.action.resize(count);
  for (Mor i = 0; i < count; ++i) {
    d.action[i] = x.action().table()[loop_triple(x, i).p];
  }
  return GroupoidXMod::make(std::move(d));
}

GXModMorphism theta(const CrossedModule& x, Elem a) {
  x.p().require(a);
  const GroupoidXMod big = loop_gpd_xmod(x);
  const LoopData data = loop_data(x, a);
  GXModMorphism f{GroupoidXMod::from_xmod(restrict_to_object(big, a)),
                  GroupoidXMod::from_xmod(loop_xmod_at(x, a)),
                  {0},
                  {},
                  {}};
  std::vector<Elem> pair_index(x.m().order() * x.p().order(), kUndefined);
  for (Elem i = 0; i < data.pairs.size(); ++i) {
    pair_index[data.pairs[i].first * x.p().order() + data.pairs[i].second] = i;
  }
  for (Mor v : vertex_morphisms(big.base(), a)) {
    const LoopTriple t = loop_triple(x, v);
    f.morphisms.push_back(pair_index[t.m * x.p().order() + t.p]);
  }
  std::vector<Elem> fibre(x.m().order());
  std::iota(fibre.begin(), fibre.end(), Elem{0});
  f.fibres.push_back(std::move(fibre));

  Report report = check_isomorphism(f);
  if (!report.empty()) {
    throw Error(ErrorKind::kInternalInvariantBroken,
                "theta is not an isomorphism: " + report.front().witness);
  }
  return f;
}

LoopHomotopy pi_loop(const CrossedModule& x, Elem a) {
  HomotopyData h = homotopy(loop_xmod_at(x, a));
  std::vector<Elem> members;
  for (Elem i = 0; i < h.pi2.order(); ++i) members.push_back(h.inclusion(i));
  Subgroup kernel_a = Subgroup::make(x.m(), members);

  std::vector<Elem> fixed;
  for (Elem e = 0; e < x.m().order(); ++e) {
    if (x.boundary(e) == x.p().zero() && x.act(e, a) == e) fixed.push_back(e);
  }
  if (kernel_a.members() != fixed) {
    throw Error(ErrorKind::kInternalInvariantBroken,
                "Ker delta_a differs from the fixed points of a on Ker delta");
  }
  return {std::move(h.pi1), std::move(h.pi2), std::move(kernel_a)};
}

}  // namespace xmod
