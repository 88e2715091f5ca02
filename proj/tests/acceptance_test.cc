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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure or on a criterion exceeding its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "xmodloop/cli.h"
#include "xmodloop/error.h"
#include "xmodloop/exactseq.h"
#include "xmodloop/fixtures.h"
#include "xmodloop/io.h"
#include "xmodloop/loop.h"
#include "xmodloop/nerve.h"

namespace xmod {
namespace {

constexpr double kBudgetSeconds = 10.0;

struct Failures {
  std::vector<std::string> lines;
  void expect(bool ok, const std::string& what) {
    if (!ok) lines.push_back(what);
  }
};

std::string at(const fixtures::Named& f, Elem a) {
  return f.name + " a=" + f.xmod.p().name(a);
}

bool isomorphic_verified(const FiniteGroup& g, const FiniteGroup& h) {
  const auto w = are_isomorphic(g, h);
  return w && oracle::is_group_isomorphism(*w);
}

std::size_t total_bases() {
  std::size_t n = 0;
  for (const auto& f : fixtures::standard()) n += f.xmod.p().order();
  return n;
}

enum class Part { kM, kP, kDelta, kAction };

struct Mutation {
  const char* fixture;
  Part part;
  Elem i;
  Elem j;  // unused for delta
  Elem value;
};

CrossedModule by_name(const std::string& name) {
  for (const auto& f : fixtures::standard()) {
    if (f.name == name) return f.xmod;
  }
  throw Error(ErrorKind::kUsage, name);
}

void axiom_soundness(Failures& out) {
  for (const auto& f : fixtures::standard()) {
    out.expect(check_axioms(f.xmod.data()).empty(), f.name + " rejected");
  }
  // INN3 P indices: () (12) (13) (23) (123) (132)
  const std::vector<Mutation> mutations = {
      {"INC24", Part::kP, 1, 1, 3},      {"INC24", Part::kP, 0, 0, 1},
      {"INC24", Part::kM, 1, 1, 1},      {"INC24", Part::kDelta, 1, 0, 1},
      {"INC24", Part::kDelta, 1, 0, 3},  {"INC24", Part::kDelta, 0, 0, 2},
      {"INC24", Part::kAction, 1, 1, 0}, {"INC24", Part::kAction, 2, 0, 1},
      {"MOD32", Part::kAction, 1, 1, 1}, {"MOD32", Part::kAction, 1, 2, 0},
      {"MOD32", Part::kAction, 0, 1, 2}, {"MOD32", Part::kDelta, 1, 0, 1},
      {"MOD32", Part::kM, 1, 2, 1},      {"MOD32", Part::kP, 1, 1, 1},
      {"INN3", Part::kDelta, 1, 0, 5},   {"INN3", Part::kDelta, 2, 0, 0},
      {"INN3", Part::kAction, 1, 1, 1},  {"INN3", Part::kAction, 4, 1, 2},
      {"INN3", Part::kP, 4, 4, 0},       {"INN3", Part::kM, 2, 2, 2},
  };
  std::size_t n = 0;
  for (const Mutation& mu : mutations) {
    const std::string label = std::string(mu.fixture) + " mutation " + std::to_string(++n);
    XModData d = by_name(mu.fixture).data();
    Report r;
    bool oracle_valid = true;
    if (mu.part == Part::kM || mu.part == Part::kP) {
      const FiniteGroup& g = mu.part == Part::kM ? d.m : d.p;
      Table t = g.table();
      out.expect(t[mu.i][mu.j] != mu.value, label + " is not a change");
      t[mu.i][mu.j] = mu.value;
      r = check_group(g.names(), t, g.zero());
      oracle_valid = oracle::is_group({t, g.zero()});
    } else {
      if (mu.part == Part::kDelta) {
        out.expect(d.delta[mu.i] != mu.value, label + " is not a change");
        d.delta[mu.i] = mu.value;
      } else {
        out.expect(d.action[mu.i][mu.j] != mu.value, label + " is not a change");
        d.action[mu.i][mu.j] = mu.value;
      }
      r = check_axioms(d);
      oracle_valid = oracle::is_crossed_module(
          {oracle::raw(d.m), oracle::raw(d.p), d.delta, d.action});
    }
    out.expect(!oracle_valid, label + " is valid by the oracle");
    out.expect(!r.empty(), label + " accepted");
    out.expect(r.empty() || !r[0].witness.empty(), label + " has no witness");
  }
  out.expect(n == 20, "expected 20 mutations");
}

void loop_module_axioms(Failures& out) {
  std::size_t bases = 0;
  for (const auto& f : fixtures::standard()) {
    for (Elem a = 0; a < f.xmod.p().order(); ++a, ++bases) {
      const LoopData d = loop_data(f.xmod, a);
      const XModData data{f.xmod.m(), d.pa, d.delta_a.map(), d.action.table()};
      out.expect(check_axioms(data).empty(), at(f, a) + " L[a] fails the axioms");
      out.expect(oracle::is_crossed_module(
                     {oracle::raw(data.m), oracle::raw(data.p), data.delta, data.action}),
                 at(f, a) + " L[a] fails the oracle");
    }
  }
  out.expect(bases == total_bases(), "base count");
}

void endpoint_claims(Failures& out) {
  for (const auto& f : fixtures::standard()) {
    const CrossedModule& x = f.xmod;
    for (Elem a = 0; a < x.p().order(); ++a) {
      const LoopHomotopy h = pi_loop(x, a);
      std::vector<Elem> fixed;
      for (Elem k = 0; k < x.m().order(); ++k) {
        if (x.boundary(k) == x.p().zero() && x.act(k, a) == k) fixed.push_back(k);
      }
      out.expect(h.kernel.members() == fixed, at(f, a) + " Ker delta_a != fixed points");
      out.expect(fixed_points(x, a).members() == fixed, at(f, a) + " fixed_points");
      const ExactSequence s = exact_sequence(x, a);
      out.expect(isomorphic_verified(h.pi1, s.loop_pi1), at(f, a) + " Cok delta_a vs pi1");
    }
  }
  const CrossedModule mod = fixtures::mod32();
  out.expect(pi_loop(mod, 0).pi1.order() == 6, "MOD32 pi1 at 0 has order 6");
  out.expect(isomorphic_verified(pi_loop(mod, 1).pi1, cyclic_group(2)), "MOD32 pi1 at 1");
  out.expect(pi_loop(mod, 1).pi2.order() == 1, "MOD32 pi2 at 1 trivial");
}

void components_conjugacy(Failures& out) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"CONJ", 3}, {"INC24", 2}, {"MOD32", 2}, {"INN3", 2}, {"TRIV", 1}};
  for (const auto& [name, n] : expected) {
    const CrossedModule x = by_name(name);
    const std::size_t c = components(x).classes.size();
    out.expect(c == n, name + " components " + std::to_string(c));
    out.expect(c == oracle::conjugacy_classes_of_cokernel(x), name + " conjugacy classes");
    out.expect(c == conjugacy_classes(homotopy(x).pi1).size(), name + " classes of pi1");
  }
}

void nerve_counts(Failures& out) {
  const std::vector<std::size_t> k2 = {1, 36, 32, 12, 108};
  const auto all = fixtures::standard();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const CrossedModule& x = all[i].xmod;
    const std::size_t m = x.m().order(), p = x.p().order();
    const auto s2 = nerve_k2(x);
    out.expect(s2.size() == k2[i] && s2.size() == m * p * p, all[i].name + " |K2|");
    out.expect(oracle::k2_brute_force(x) == s2.size(), all[i].name + " |K2| oracle");
    const auto s3 = nerve_k3(x);
    auto o = oracle::k3_brute_force(x);
    std::sort(o.begin(), o.end());
    out.expect(s3 == o, all[i].name + " K3 differs from brute force");
    const FiniteGroup& g = x.m();
    for (const auto& s : s3) {
      const Elem c = g.add(g.add(g.add(x.act(s.m3, s.f), g.neg(s.m0)), g.neg(s.m2)), s.m1);
      if (c != g.zero()) {
        out.expect(false, all[i].name + " closure rule");
        break;
      }
    }
  }
}

void loop_groupoid_structure(Failures& out) {
  for (const auto& f : fixtures::standard()) {
    const GroupoidXMod l = loop_gpd_xmod(f.xmod);
    out.expect(check_gx(l.data()).empty(), f.name + " L fails the invariants");
    for (Elem a = 0; a < f.xmod.p().order(); ++a) {
      out.expect(check_isomorphism(theta(f.xmod, a)).empty(), at(f, a) + " theta");
    }
  }
  for (const CrossedModule& x : {fixtures::mod32(), fixtures::inc24()}) {
    const oracle::RawXMod r = oracle::raw(x);
    const GroupoidXMod l = loop_gpd_xmod(x);
    const std::size_t n = l.base().morphism_count();
    for (Mor i = 0; i < n; ++i) {
      const LoopTriple s = loop_triple(x, i);
      for (Mor j = 0; j < n; ++j) {
        const LoopTriple t = loop_triple(x, j);
        const Elem bp = r.p.table[r.p.table[oracle::inverse(r.p, t.p)][s.a]][t.p];
        const bool defined = bp == r.p.table[t.a][r.delta[t.m]];
        out.expect((l.base().add(i, j) != kUndefined) == defined, "composition definedness");
      }
    }
  }
}

void fibration(Failures& out) {
  for (const auto& f : fixtures::standard()) {
    const CrossedModule& x = f.xmod;
    const FibrationData d = fibration_psi(x);
    out.expect(is_fibration(d.psi).empty(), f.name + " psi is not a fibration");
    std::set<std::string> want1, got1, want2, got2;
    for (Elem m = 0; m < x.m().order(); ++m) {
      for (Elem a = 0; a < x.p().order(); ++a) {
        want1.insert("(" + x.m().name(m) + "|" + x.p().name(0) + "|" + x.p().name(a) + ")");
      }
    }
    for (Elem a = 0; a < x.p().order(); ++a) {
      want2.insert("(" + x.m().name(0) + "|" + x.p().name(a) + ")");
      for (auto n : d.fibre.fibre(a).names()) got2.insert(std::string(n));
    }
    for (Mor i = 0; i < d.fibre.base().morphism_count(); ++i) {
      got1.insert(d.fibre.base().morphism_name(i));
    }
    out.expect(d.fibre.base().morphism_count() == want1.size() && got1 == want1,
               f.name + " fibre morphisms");
    out.expect(got2 == want2, f.name + " fibre dimension-2 part");
  }
}

std::vector<std::size_t> orders(const ExactSequence& s) {
  return {s.fixed.order(), s.pi.order(), s.fibre_pi1.order(), s.loop_pi1.order(),
          s.centralizer.order()};
}

void exact_sequences(Failures& out) {
  std::size_t pairs = 0;
  for (const auto& f : fixtures::standard()) {
    for (Elem a = 0; a < f.xmod.p().order(); ++a, ++pairs) {
      const ExactSequence s = exact_sequence(f.xmod, a);
      for (const auto& n : s.nodes) out.expect(n.exact, at(f, a) + " node " + n.node);
    }
  }
  out.expect(pairs == total_bases(), "pair count");
  const CrossedModule mod = fixtures::mod32();
  // 0 -> 0 -> C3 -> C3 -> C2 -> C2 -> 1 with d an isomorphism
  const ExactSequence s1 = exact_sequence(mod, 1);
  out.expect(orders(s1) == std::vector<std::size_t>{1, 3, 3, 2, 2}, "MOD32 a=1 orders");
  out.expect(s1.boundary.is_injective() && s1.boundary.is_surjective(), "MOD32 a=1 d");
  out.expect(s1.q.is_injective() && s1.q.is_surjective(), "MOD32 a=1 q");
  // 0 -> C3 -> C3 -> C3 -> G6 -> C2 -> 1 with d zero
  const ExactSequence s0 = exact_sequence(mod, 0);
  out.expect(orders(s0) == std::vector<std::size_t>{3, 3, 3, 6, 2}, "MOD32 a=0 orders");
  out.expect(image(s0.boundary).size() == 1, "MOD32 a=0 d is zero");
  out.expect(s0.j.is_injective() && !s0.loop_pi1.is_abelian(), "MOD32 a=0 j");
  out.expect(isomorphic_verified(s0.loop_pi1, symmetric_group(3)), "MOD32 a=0 G6");
}

void worked_examples(Failures& out) {
  const CrossedModule mod = fixtures::mod32();
  for (Elem a : {0, 1}) {
    const Report r = example1_check(mod, a);
    out.expect(r.empty(), "example1 MOD32 a=" + std::to_string(a) + ": " + format_report(r));
  }
  for (const CrossedModule& x : {fixtures::mod32(), fixtures::inc24()}) {
    std::size_t central = 0;
    for (Elem a = 0; a < x.p().order(); ++a) {
      if (centralizer(x.p(), a).size() != x.p().order()) continue;
      ++central;
      const Report r = example2_check(x, a);
      out.expect(r.empty(), "example2 a=" + x.p().name(a) + ": " + format_report(r));
    }
    out.expect(central == x.p().order(), "every base point of an abelian P is central");
  }
}

void self_hosting(Failures& out) {
  const std::string file = oracle::fixture_path("mod32.json");
  std::ostringstream emitted, err;
  const int code = run_cli({"xmodloop", "loop", file, "--base", "0", "--emit"}, emitted, err);
  out.expect(code == 0, "loop --emit exit code " + std::to_string(code) + " " + err.str());
  if (code != 0) return;
  const XModDocument doc = parse_document(emitted.str());
  oracle::RawXMod raw;
  out.expect(oracle::raw_from_document(doc, &raw) && oracle::is_crossed_module(raw),
             "emitted document fails the oracle");
  const CrossedModule l = to_xmod(doc);
  const HomotopyData h = homotopy(l);
  const LoopHomotopy original = pi_loop(parse_xmod(read_file(file)), 0);
  out.expect(isomorphic_verified(h.pi1, original.pi1), "pi1 of the emitted module");
  out.expect(isomorphic_verified(h.pi2, original.pi2), "pi2 of the emitted module");
  std::ostringstream check_out;
  const std::string path = "/tmp/xmodloop_acceptance_l0.json";
  if (std::FILE* fp = std::fopen(path.c_str(), "w")) {
    std::fputs(emitted.str().c_str(), fp);
    std::fclose(fp);
    out.expect(run_cli({"xmodloop", "check", path}, check_out, err) == 0, "check of emitted");
    std::remove(path.c_str());
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Failures&)> run;
};

}  // namespace
}  // namespace xmod

int main() {
  using namespace xmod;
  const std::vector<Criterion> criteria = {
      {1, "axiom soundness: fixtures valid, 20 mutations rejected with witnesses", axiom_soundness},
      {2, "loop crossed module valid at every base point", loop_module_axioms},
      {3, "Ker delta_a = fixed points, Cok delta_a = pi1 of the sequence", endpoint_claims},
      {4, "components = conjugacy classes of Cok delta", components_conjugacy},
      {5, "nerve counts and closure rule against brute force", nerve_counts},
      {6, "loop groupoid crossed module, composition, theta", loop_groupoid_structure},
      {7, "psi is a fibration with the expected fibre", fibration},
      {8, "exact sequence at every base point, MOD32 sequences", exact_sequences},
      {9, "delta = 0 and central base point examples", worked_examples},
      {10, "emitted loop module re-parses with matching homotopy", self_hosting},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(f);
    } catch (const Error& e) {
      f.lines.push_back(std::string("error ") + std::string(to_string(e.kind())) + ": " +
                        e.witness());
    } catch (const std::exception& e) {
      f.lines.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds) f.lines.push_back("over the time budget");
    const bool ok = f.lines.empty();
    failed += !ok;
    std::printf("%s  %2d  %s  (%.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs);
    for (std::size_t i = 0; i < f.lines.size() && i < 10; ++i) {
      std::printf("        %s\n", f.lines[i].c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
