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

#include "xmodloop/groupoid.h"

#include <algorithm>
#include <numeric>

namespace xmod {

namespace {

Violation bad_groupoid(std::string witness) {
  return {ErrorKind::kInvalidGroupoid, std::move(witness)};
}

Violation bad_gx(std::string witness) {
  return {ErrorKind::kInvalidGroupoidXMod, std::move(witness)};
}

Violation bad_morphism(std::string witness) {
  return {ErrorKind::kInvalidMorphism, std::move(witness)};
}

// Morphisms out of each object.
std::vector<std::vector<Mor>> stars(const GroupoidData& d) {
  std::vector<std::vector<Mor>> out(d.objects.size());
  for (Mor p = 0; p < d.morphisms.size(); ++p) out[d.source[p]].push_back(p);
  return out;
}

std::optional<Mor> find_identity(const GroupoidData& d, Obj x,
                                 const std::vector<std::vector<Mor>>& star) {
  for (Mor e : star[x]) {
    if (d.target[e] != x) continue;
    bool ok = true;
    for (Mor p = 0; p < d.morphisms.size() && ok; ++p) {
      if (d.source[p] == x) ok = d.compose[e][p] == p;
      if (ok && d.target[p] == x) ok = d.compose[p][e] == p;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

Report check_groupoid(const GroupoidData& d) {
  Report report;
  const std::size_t n = d.morphisms.size();
  const std::size_t k = d.objects.size();
  if (k == 0) {
    report.push_back(bad_groupoid("no objects"));
    return report;
  }
  if (d.source.size() != n || d.target.size() != n || d.compose.size() != n) {
    report.push_back(bad_groupoid("source/target/compose sizes disagree"));
    return report;
  }
  for (Mor p = 0; p < n; ++p) {
    if (d.source[p] >= k || d.target[p] >= k) {
      report.push_back(bad_groupoid(d.morphisms[p] + " has an unknown endpoint"));
      return report;
    }
    if (d.compose[p].size() != n) {
      report.push_back(bad_groupoid("compose row " + d.morphisms[p] + " has wrong length"));
      return report;
    }
  }
  for (Mor p = 0; p < n; ++p) {
    for (Mor q = 0; q < n; ++q) {
      const Mor r = d.compose[p][q];
      const bool defined = d.target[p] == d.source[q];
      if (!defined) {
        if (r != kUndefined) {
          report.push_back(bad_groupoid(d.morphisms[p] + " + " + d.morphisms[q] +
                                        " defined without matching endpoints"));
          return report;
        }
        continue;
      }
      if (r >= n || d.source[r] != d.source[p] || d.target[r] != d.target[q]) {
        report.push_back(bad_groupoid(d.morphisms[p] + " + " + d.morphisms[q] +
                                      " missing or has wrong endpoints"));
        return report;
      }
    }
  }
  const auto star = stars(d);
  for (Mor p = 0; p < n; ++p) {
    for (Mor q : star[d.target[p]]) {
      const Mor pq = d.compose[p][q];
      for (Mor r : star[d.target[q]]) {
        if (d.compose[pq][r] != d.compose[p][d.compose[q][r]]) {
          report.push_back(bad_groupoid("(" + d.morphisms[p] + " + " + d.morphisms[q] +
                                        ") + " + d.morphisms[r] + " not associative"));
          return report;
        }
      }
    }
  }
  std::vector<Mor> identity(k);
  for (Obj x = 0; x < k; ++x) {
    auto e = find_identity(d, x, star);
    if (!e) {
      report.push_back(bad_groupoid("object " + d.objects[x] + " has no identity"));
      return report;
    }
    identity[x] = *e;
  }
  for (Mor p = 0; p < n; ++p) {
    bool found = false;
    for (Mor q : star[d.target[p]]) {
      if (d.target[q] == d.source[p] && d.compose[p][q] == identity[d.source[p]] &&
          d.compose[q][p] == identity[d.target[p]]) {
        found = true;
        break;
      }
    }
    if (!found) report.push_back(bad_groupoid(d.morphisms[p] + " has no inverse"));
  }
  return report;
}

FiniteGroupoid FiniteGroupoid::make(GroupoidData data) {
  throw_if_any(check_groupoid(data));
  auto rep = std::make_shared<Rep>();
  const auto star = stars(data);
  for (Obj x = 0; x < data.objects.size(); ++x) {
    rep->identity.push_back(*find_identity(data, x, star));
  }
  rep->inverse.assign(data.morphisms.size(), kUndefined);
  for (Mor p = 0; p < data.morphisms.size(); ++p) {
    for (Mor q : star[data.target[p]]) {
      if (data.compose[p][q] == rep->identity[data.source[p]]) {
        rep->inverse[p] = q;
        break;
      }
    }
  }
  rep->data = std::move(data);
  return FiniteGroupoid(std::move(rep));
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g, std::string object) {
  GroupoidData d;
  d.objects.push_back(std::move(object));
  d.morphisms.assign(g.names().begin(), g.names().end());
  d.source.assign(g.order(), 0);
  d.target.assign(g.order(), 0);
  d.compose = g.table();
  return make(std::move(d));
}

Obj FiniteGroupoid::object_index(std::string_view name) const {
  const auto& objs = rep_->data.objects;
  auto it = std::find(objs.begin(), objs.end(), name);
  if (it == objs.end()) {
    throw Error(ErrorKind::kUnknownObject, "'" + std::string(name) + "'");
  }
  return static_cast<Obj>(it - objs.begin());
}

void FiniteGroupoid::require_object(Obj x) const {
  if (x >= object_count()) {
    throw Error(ErrorKind::kUnknownObject,
                "index " + std::to_string(x) + " of " +
                    std::to_string(object_count()) + " objects");
  }
}

std::vector<Mor> vertex_morphisms(const FiniteGroupoid& g, Obj x) {
  g.require_object(x);
  std::vector<Mor> out;
  for (Mor p = 0; p < g.morphism_count(); ++p) {
    if (g.source(p) == x && g.target(p) == x) out.push_back(p);
  }
  return out;
}

FiniteGroup vertex_group(const FiniteGroupoid& g, Obj x) {
  const std::vector<Mor> loops = vertex_morphisms(g, x);
  std::vector<Elem> local(g.morphism_count(), kUndefined);
  for (Elem i = 0; i < loops.size(); ++i) local[loops[i]] = i;
  std::vector<std::string> names;
  for (Mor p : loops) names.push_back(g.morphism_name(p));
  Table table(loops.size(), std::vector<Elem>(loops.size()));
  for (Elem i = 0; i < loops.size(); ++i) {
    for (Elem j = 0; j < loops.size(); ++j) {
      table[i][j] = local[g.add(loops[i], loops[j])];
    }
  }
  return FiniteGroup::make(std::move(names), std::move(table), local[g.identity(x)]);
}

Partition pi0(const FiniteGroupoid& g) {
  const std::size_t k = g.object_count();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mor p = 0; p < g.morphism_count(); ++p) {
    std::size_t a = find(g.source(p));
    std::size_t b = find(g.target(p));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Partition out;
  out.class_of.assign(k, kUndefined);
  std::vector<std::size_t> root_class(k, kUndefined);
  for (Obj x = 0; x < k; ++x) {
    const std::size_t r = find(x);
    if (root_class[r] == kUndefined) {
      root_class[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.class_of[x] = root_class[r];
    out.classes[root_class[r]].push_back(x);
  }
  return out;
}

// --- GroupoidXMod -----------------------------------------------------------

Report check_gx(const GXModData& d) {
  Report report;
  const FiniteGroupoid& g = d.base;
  const std::size_t k = g.object_count();
  const std::size_t n = g.morphism_count();
  if (d.fibres.size() != k || d.boundary.size() != k || d.action.size() != n) {
    report.push_back(bad_gx("fibres/boundary/action sizes disagree with the base"));
    return report;
  }
  for (Obj x = 0; x < k; ++x) {
    const FiniteGroup& fx = d.fibres[x];
    if (d.boundary[x].size() != fx.order()) {
      report.push_back(bad_gx("boundary at " + g.object_name(x) + " is not total"));
      return report;
    }
    for (Elem m = 0; m < fx.order(); ++m) {
      const Mor b = d.boundary[x][m];
      if (b >= n || g.source(b) != x || g.target(b) != x) {
        report.push_back(bad_gx("boundary of " + fx.name(m) + " is not a loop at " +
                                g.object_name(x)));
        return report;
      }
    }
  }
  for (Mor p = 0; p < n; ++p) {
    const FiniteGroup& from = d.fibres[g.source(p)];
    const FiniteGroup& to = d.fibres[g.target(p)];
    if (d.action[p].size() != from.order()) {
      report.push_back(bad_gx("action of " + g.morphism_name(p) + " is not total"));
      return report;
    }
    for (Elem m = 0; m < from.order(); ++m) {
      if (d.action[p][m] >= to.order()) {
        report.push_back(bad_gx(from.name(m) + "^" + g.morphism_name(p) +
                                " is not in the target fibre"));
        return report;
      }
    }
  }

  for (Obj x = 0; x < k; ++x) {
    const FiniteGroup& fx = d.fibres[x];
    for (Elem m = 0; m < fx.order(); ++m) {
      for (Elem m2 = 0; m2 < fx.order(); ++m2) {
        if (d.boundary[x][fx.add(m, m2)] !=
            g.add(d.boundary[x][m], d.boundary[x][m2])) {
          report.push_back({ErrorKind::kNotHomomorphism,
                            "boundary at " + g.object_name(x) + " on " + fx.name(m) +
                                ", " + fx.name(m2)});
        }
      }
    }
    const Mor e = g.identity(x);
    for (Elem m = 0; m < fx.order(); ++m) {
      if (d.action[e][m] != m) {
        report.push_back({ErrorKind::kInvalidAction,
                          fx.name(m) + "^identity(" + g.object_name(x) + ") != " +
                              fx.name(m)});
      }
    }
  }
  for (Mor p = 0; p < n; ++p) {
    const FiniteGroup& from = d.fibres[g.source(p)];
    const FiniteGroup& to = d.fibres[g.target(p)];
    for (Elem m = 0; m < from.order(); ++m) {
      for (Elem m2 = 0; m2 < from.order(); ++m2) {
        if (d.action[p][from.add(m, m2)] !=
            to.add(d.action[p][m], d.action[p][m2])) {
          report.push_back({ErrorKind::kInvalidAction,
                            "(" + from.name(m) + " + " + from.name(m2) + ")^" +
                                g.morphism_name(p) + " not additive"});
        }
      }
    }
    for (Mor q = 0; q < n; ++q) {
      if (!g.composable(p, q)) continue;
      const Mor pq = g.add(p, q);
      for (Elem m = 0; m < from.order(); ++m) {
        if (d.action[q][d.action[p][m]] != d.action[pq][m]) {
          report.push_back({ErrorKind::kInvalidAction,
                            "(" + from.name(m) + "^" + g.morphism_name(p) + ")^" +
                                g.morphism_name(q) + " != " + from.name(m) + "^(" +
                                g.morphism_name(p) + " + " + g.morphism_name(q) + ")"});
        }
      }
    }
    // CM1: boundary(m^p) = -p + boundary(m) + p
    for (Elem m = 0; m < from.order(); ++m) {
      const Mor lhs = d.boundary[g.target(p)][d.action[p][m]];
      const Mor rhs = g.conj(d.boundary[g.source(p)][m], p);
      if (lhs != rhs) {
        report.push_back({ErrorKind::kCM1Violation,
                          "m=" + from.name(m) + ", p=" + g.morphism_name(p) +
                              ": delta(m^p) = " + g.morphism_name(lhs) +
                              " but -p + delta(m) + p = " + g.morphism_name(rhs)});
      }
    }
  }
  // CM2: -n + m + n = m^{boundary(n)}
  for (Obj x = 0; x < k; ++x) {
    const FiniteGroup& fx = d.fibres[x];
    for (Elem m = 0; m < fx.order(); ++m) {
      for (Elem m2 = 0; m2 < fx.order(); ++m2) {
        const Elem lhs = fx.conj(m, m2);
        const Elem rhs = d.action[d.boundary[x][m2]][m];
        if (lhs != rhs) {
          report.push_back({ErrorKind::kCM2Violation,
                            "m=" + fx.name(m) + ", n=" + fx.name(m2) + " at " +
                                g.object_name(x)});
        }
      }
    }
  }
  return report;
}

GroupoidXMod GroupoidXMod::make(GXModData data) {
  throw_if_any(check_gx(data));
  return GroupoidXMod(std::move(data));
}

GroupoidXMod GroupoidXMod::from_xmod(const CrossedModule& x, std::string object) {
  GXModData d{FiniteGroupoid::from_group(x.p(), std::move(object)),
              {x.m()},
              {x.delta().map()},
              x.action().table()};
  return make(std::move(d));
}

Partition pi0(const GroupoidXMod& gx) { return pi0(gx.base()); }

CrossedModule restrict_to_object(const GroupoidXMod& gx, Obj x) {
  const FiniteGroupoid& g = gx.base();
  g.require_object(x);
  const std::vector<Mor> loops = vertex_morphisms(g, x);
  std::vector<Elem> local(g.morphism_count(), kUndefined);
  for (Elem i = 0; i < loops.size(); ++i) local[loops[i]] = i;
  const FiniteGroup& m = gx.fibre(x);
  std::vector<Elem> delta(m.order());
  for (Elem e = 0; e < m.order(); ++e) delta[e] = local[gx.boundary(x, e)];
  Table action(loops.size(), std::vector<Elem>(m.order()));
  for (Elem i = 0; i < loops.size(); ++i) {
    for (Elem e = 0; e < m.order(); ++e) action[i][e] = gx.act(e, loops[i]);
  }
  return make_xmod(m, vertex_group(g, x), std::move(delta), std::move(action));
}

FiniteGroup pi1_at(const GroupoidXMod& gx, Obj x) {
  return homotopy(restrict_to_object(gx, x)).pi1;
}

FiniteGroup pi2_at(const GroupoidXMod& gx, Obj x) {
  return homotopy(restrict_to_object(gx, x)).pi2;
}

// --- Morphisms --------------------------------------------------------------

Report check_morphism(const GXModMorphism& f) {
  Report report;
  const FiniteGroupoid& a = f.source.base();
  const FiniteGroupoid& b = f.target.base();
  if (f.objects.size() != a.object_count() ||
      f.morphisms.size() != a.morphism_count() ||
      f.fibres.size() != a.object_count()) {
    report.push_back(bad_morphism("component maps are not total"));
    return report;
  }
  for (Obj x = 0; x < a.object_count(); ++x) {
    if (f.objects[x] >= b.object_count()) {
      report.push_back(bad_morphism("object " + a.object_name(x) + " maps outside"));
      return report;
    }
  }
  for (Mor p = 0; p < a.morphism_count(); ++p) {
    if (f.morphisms[p] >= b.morphism_count()) {
      report.push_back(bad_morphism("morphism " + a.morphism_name(p) + " maps outside"));
      return report;
    }
    const Mor fp = f.morphisms[p];
    if (b.source(fp) != f.objects[a.source(p)] ||
        b.target(fp) != f.objects[a.target(p)]) {
      report.push_back(bad_morphism("endpoints of " + a.morphism_name(p) +
                                    " not preserved"));
    }
  }
  if (!report.empty()) return report;
  for (Obj x = 0; x < a.object_count(); ++x) {
    Report hom = check_homomorphism(f.source.fibre(x), f.target.fibre(f.objects[x]),
                                    f.fibres[x]);
    for (Violation& v : hom) {
      v.witness = "fibre map at " + a.object_name(x) + ": " + v.witness;
      report.push_back(std::move(v));
    }
  }
  if (!report.empty()) return report;
  for (Mor p = 0; p < a.morphism_count(); ++p) {
    for (Mor q = 0; q < a.morphism_count(); ++q) {
      if (!a.composable(p, q)) continue;
      if (f.morphisms[a.add(p, q)] != b.add(f.morphisms[p], f.morphisms[q])) {
        report.push_back(bad_morphism("composition " + a.morphism_name(p) + " + " +
                                      a.morphism_name(q) + " not preserved"));
      }
    }
  }
  for (Obj x = 0; x < a.object_count(); ++x) {
    const FiniteGroup& fx = f.source.fibre(x);
    for (Elem m = 0; m < fx.order(); ++m) {
      if (f.morphisms[f.source.boundary(x, m)] !=
          f.target.boundary(f.objects[x], f.fibres[x][m])) {
        report.push_back(bad_morphism("boundary of " + fx.name(m) + " not preserved"));
      }
    }
  }
  for (Mor p = 0; p < a.morphism_count(); ++p) {
    const Obj s = a.source(p);
    const Obj t = a.target(p);
    const FiniteGroup& fs = f.source.fibre(s);
    for (Elem m = 0; m < fs.order(); ++m) {
      const Elem lhs = f.fibres[t][f.source.act(m, p)];
      const Elem rhs = f.target.act(f.fibres[s][m], f.morphisms[p]);
      if (lhs != rhs) {
        report.push_back(bad_morphism("action " + fs.name(m) + "^" +
                                      a.morphism_name(p) + " not preserved"));
      }
    }
  }
  return report;
}

Report is_fibration(const GXModMorphism& f) {
  Report report = check_morphism(f);
  if (!report.empty()) return report;
  const FiniteGroupoid& a = f.source.base();
  const FiniteGroupoid& b = f.target.base();
  for (Obj x = 0; x < a.object_count(); ++x) {
    std::vector<bool> hit(b.morphism_count(), false);
    for (Mor p = 0; p < a.morphism_count(); ++p) {
      if (a.source(p) == x) hit[f.morphisms[p]] = true;
    }
    for (Mor q = 0; q < b.morphism_count(); ++q) {
      if (b.source(q) == f.objects[x] && !hit[q]) {
        report.push_back(bad_morphism("star at " + a.object_name(x) + ": " +
                                      b.morphism_name(q) + " has no lift"));
      }
    }
    const FiniteGroup& to = f.target.fibre(f.objects[x]);
    std::vector<bool> covered(to.order(), false);
    for (Elem m : f.fibres[x]) covered[m] = true;
    for (Elem n = 0; n < to.order(); ++n) {
      if (!covered[n]) {
        report.push_back(bad_morphism("fibre map at " + a.object_name(x) +
                                      " misses " + to.name(n)));
      }
    }
  }
  return report;
}

Report check_isomorphism(const GXModMorphism& f) {
  Report report = check_morphism(f);
  if (!report.empty()) return report;
  auto bijective = [](const std::vector<std::size_t>& map, std::size_t size) {
    if (map.size() != size) return false;
    std::vector<bool> hit(size, false);
    for (std::size_t v : map) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  const FiniteGroupoid& a = f.source.base();
  const FiniteGroupoid& b = f.target.base();
  if (!bijective(f.objects, b.object_count())) {
    report.push_back(bad_morphism("object map not bijective"));
  }
  if (!bijective(f.morphisms, b.morphism_count())) {
    report.push_back(bad_morphism("morphism map not bijective"));
  }
  for (Obj x = 0; x < a.object_count() && report.empty(); ++x) {
    if (!bijective(f.fibres[x], f.target.fibre(f.objects[x]).order())) {
      report.push_back(bad_morphism("fibre map at " + a.object_name(x) +
                                    " not bijective"));
    }
  }
  return report;
}

GXModMorphism identity_morphism(const GroupoidXMod& gx) {
  const FiniteGroupoid& g = gx.base();
  GXModMorphism f{gx, gx, {}, {}, {}};
  f.objects.resize(g.object_count());
  std::iota(f.objects.begin(), f.objects.end(), Obj{0});
  f.morphisms.resize(g.morphism_count());
  std::iota(f.morphisms.begin(), f.morphisms.end(), Mor{0});
  for (Obj x = 0; x < g.object_count(); ++x) {
    std::vector<Elem> id(gx.fibre(x).order());
    std::iota(id.begin(), id.end(), Elem{0});
    f.fibres.push_back(std::move(id));
  }
  return f;
}

}  // namespace xmod
