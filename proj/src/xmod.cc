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

#include "xmodloop/xmod.h"

namespace xmod {

Report check_axioms(const XModData& d) {
  const FiniteGroup& m = d.m;
  const FiniteGroup& p = d.p;
  Report report;
  if (d.delta.size() != m.order()) {
    report.push_back({ErrorKind::kNotHomomorphism, "delta is not total on M"});
    return report;
  }
  for (Elem x = 0; x < m.order(); ++x) {
    if (d.delta[x] >= p.order()) {
      report.push_back({ErrorKind::kNotHomomorphism,
                        "delta(" + m.name(x) + ") is not an element of P"});
      return report;
    }
  }
  bool shaped = d.action.size() == p.order();
  for (Elem q = 0; shaped && q < p.order(); ++q) {
    shaped = d.action[q].size() == m.order();
    for (Elem x = 0; shaped && x < m.order(); ++x) {
      shaped = d.action[q][x] < m.order();
    }
  }
  Report hom = check_homomorphism(m, p, d.delta);
  Report act = check_action(p, m, d.action);
  report.insert(report.end(), hom.begin(), hom.end());
  report.insert(report.end(), act.begin(), act.end());
  if (!shaped) return report;
  for (Elem q = 0; q < p.order(); ++q) {
    for (Elem x = 0; x < m.order(); ++x) {
      const Elem lhs = d.delta[d.action[q][x]];
      const Elem rhs = p.conj(d.delta[x], q);
      if (lhs != rhs) {
        report.push_back({ErrorKind::kCM1Violation,
                          "m=" + m.name(x) + ", p=" + p.name(q) + ": delta(m^p) = " +
                              p.name(lhs) + " but -p + delta(m) + p = " +
                              p.name(rhs)});
      }
    }
  }
  for (Elem x = 0; x < m.order(); ++x) {
    for (Elem n = 0; n < m.order(); ++n) {
      const Elem lhs = m.conj(x, n);
      const Elem rhs = d.action[d.delta[n]][x];
      if (lhs != rhs) {
        report.push_back({ErrorKind::kCM2Violation,
                          "m=" + m.name(x) + ", n=" + m.name(n) + ": -n + m + n = " +
                              m.name(lhs) + " but m^delta(n) = " + m.name(rhs)});
      }
    }
  }
  return report;
}

CrossedModule CrossedModule::make(const XModData& data) {
  throw_if_any(check_axioms(data));
  return CrossedModule(Homomorphism::make(data.m, data.p, data.delta),
                       GroupAction::make(data.p, data.m, data.action));
}

CrossedModule make_xmod(const FiniteGroup& m, const FiniteGroup& p,
                        std::vector<Elem> delta, Table action) {
  return CrossedModule::make({m, p, std::move(delta), std::move(action)});
}

XModData CrossedModule::data() const {
  return {m(), p(), delta_.map(), action_.table()};
}

HomotopyData homotopy(const CrossedModule& x) {
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  const Subgroup im = image(x.delta());
  if (auto w = normality_witness(im)) {
    throw Error(ErrorKind::kInternalInvariantBroken,
                "Im delta not normal: conjugating " + p.name(w->first) + " by " +
                    p.name(w->second));
  }
  const Subgroup ker = kernel(x.delta());
  for (Elem k : ker.members()) {
    for (Elem n = 0; n < m.order(); ++n) {
      if (m.add(k, n) != m.add(n, k)) {
        throw Error(ErrorKind::kInternalInvariantBroken,
                    "Ker delta not central: " + m.name(k) + " and " + m.name(n));
      }
    }
  }
  Quotient cok = quotient(p, im);
  SubgroupAsGroup pi2 = as_group(ker);

  // local index in pi2 of each kernel element of M
  std::vector<Elem> local(m.order(), m.order());
  for (Elem i = 0; i < ker.members().size(); ++i) local[ker.members()[i]] = i;

  const FiniteGroup& g = cok.group;
  Table table(g.order(), std::vector<Elem>(pi2.group.order()));
  std::vector<bool> filled(g.order(), false);
  for (Elem q = 0; q < p.order(); ++q) {
    const Elem cls = cok.projection(q);
    for (Elem i = 0; i < ker.members().size(); ++i) {
      const Elem image_in_m = x.act(ker.members()[i], q);
      const Elem v = local[image_in_m];
      if (v == m.order()) {
        throw Error(ErrorKind::kInternalInvariantBroken,
                    "action of " + p.name(q) + " leaves Ker delta");
      }
      if (filled[cls] && table[cls][i] != v) {
        throw Error(ErrorKind::kInternalInvariantBroken,
                    "action on Ker delta depends on the representative of " +
                        g.name(cls) + " (at " + p.name(q) + ")");
      }
      table[cls][i] = v;
    }
    filled[cls] = true;
  }
  GroupAction g_action = GroupAction::make(g, pi2.group, std::move(table));
  return {std::move(cok.group), std::move(pi2.group), std::move(g_action),
          std::move(cok.projection), std::move(pi2.inclusion)};
}

}  // namespace xmod
