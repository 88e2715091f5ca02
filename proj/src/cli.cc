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

#include "xmodloop/cli.h"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xmodloop/exactseq.h"
#include "xmodloop/io.h"
#include "xmodloop/loop.h"
#include "xmodloop/nerve.h"

namespace xmod {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::size_t max_order = kDefaultMaxOrder;
  std::string file;
  std::string space = "base";
  std::optional<std::string> base;
  int dim = 2;
  bool count = false;
  bool list = false;
  bool emit = false;
};

Json names_json(const FiniteGroup& g) {
  Json arr = Json::array();
  for (const std::string& n : g.names()) arr.push_back(n);
  return arr;
}

Json group_json(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"type", structure_label(g)}, {"elements", names_json(g)}};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

std::string group_text(const FiniteGroup& g) {
  std::vector<std::string> names(g.names().begin(), g.names().end());
  return structure_label(g) + " (order " + std::to_string(g.order()) + ") {" +
         join(names) + "}";
}

std::vector<std::string> member_names(const FiniteGroup& g, const std::vector<std::size_t>& xs) {
  std::vector<std::string> out;
  for (std::size_t x : xs) out.push_back(g.name(x));
  return out;
}

Elem base_point(const CrossedModule& x, const Options& o) {
  if (!o.base) throw Error(ErrorKind::kUsage, "--base <element> is required");
  auto a = x.p().find(*o.base);
  if (!a) throw Error(ErrorKind::kUsage, "--base: '" + *o.base + "' is not an element of P");
  return *a;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const Options& o, std::ostream& out) {
  const XModDocument doc = parse_document(read_file(o.file));
  const XModData data = to_xmod_data(doc);
  const Report report = check_axioms(data);
  if (o.format == "json") {
    Json v = Json::array();
    for (const Violation& r : report) {
      v.push_back({{"kind", std::string(to_string(r.kind))}, {"witness", r.witness}});
    }
    print_json(out, {{"valid", report.empty()},
                     {"M", group_json(data.m)},
                     {"P", group_json(data.p)},
                     {"violations", v}});
  } else if (report.empty()) {
    out << "valid crossed module\n";
    out << "  M: " << group_text(data.m) << "\n";
    out << "  P: " << group_text(data.p) << "\n";
  } else {
    out << "invalid crossed module (" << report.size() << " violations)\n";
    out << format_report(report);
  }
  return report.empty() ? 0 : 1;
}

Json loop_pi_json(const CrossedModule& x, Elem a) {
  const LoopHomotopy h = pi_loop(x, a);
  return {{"base", x.p().name(a)}, {"pi1", group_json(h.pi1)}, {"pi2", group_json(h.pi2)}};
}

int cmd_pi(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  if (o.space == "base") {
    const HomotopyData h = homotopy(x);
    if (o.format == "json") {
      print_json(out, {{"space", "base"}, {"pi1", group_json(h.pi1)}, {"pi2", group_json(h.pi2)}});
    } else {
      out << "space: base\n";
      out << "pi1: " << group_text(h.pi1) << "\n";
      out << "pi2: " << group_text(h.pi2) << "\n";
    }
    return 0;
  }
  std::vector<Elem> bases;
  if (o.base) {
    bases.push_back(base_point(x, o));
  } else {
    const Partition c = components(x);
    for (std::size_t i = 0; i < c.classes.size(); ++i) bases.push_back(c.representative(i));
  }
  if (o.format == "json") {
    Json comps = Json::array();
    for (Elem a : bases) comps.push_back(loop_pi_json(x, a));
    print_json(out, {{"space", "loop"}, {"components", comps}});
    return 0;
  }
  out << "space: loop\n";
  for (Elem a : bases) {
    const LoopHomotopy h = pi_loop(x, a);
    out << "base: " << x.p().name(a) << "\n";
    out << "  pi1: " << group_text(h.pi1) << "\n";
    out << "  pi2: " << group_text(h.pi2) << "\n";
  }
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  const Partition c = components(x);
  const std::size_t conj = conjugacy_classes(homotopy(x).pi1).size();
  if (o.format == "json") {
    Json classes = Json::array();
    for (const auto& cls : c.classes) {
      classes.push_back({{"representative", x.p().name(cls.front())},
                         {"members", member_names(x.p(), cls)}});
    }
    print_json(out, {{"count", c.classes.size()},
                     {"classes", classes},
                     {"conjugacy_classes_of_cok_delta", conj}});
    return 0;
  }
  out << "components: " << c.classes.size() << "\n";
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    out << "  [" << x.p().name(c.representative(i)) << "] {"
        << join(member_names(x.p(), c.classes[i])) << "}\n";
  }
  out << "conjugacy classes of Cok delta: " << conj
      << (conj == c.classes.size() ? " (agrees)" : " (MISMATCH)") << "\n";
  return 0;
}

int cmd_nerve(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  const FiniteGroup& m = x.m();
  const FiniteGroup& p = x.p();
  std::vector<std::string> lines;
  std::size_t count = 0;
  if (o.dim == 2) {
    const auto k2 = nerve_k2(x);
    count = k2.size();
    if (o.list) {
      for (const Simplex2& s : k2) {
        lines.push_back("(" + m.name(s.m) + "; " + p.name(s.c) + ", " + p.name(s.a) +
                        ", " + p.name(s.b) + ")");
      }
    }
  } else {
    const auto k3 = nerve_k3(x);
    count = k3.size();
    if (o.list) {
      for (const Simplex3& s : k3) {
        lines.push_back("(" + join({p.name(s.a), p.name(s.b), p.name(s.c), p.name(s.d),
                                     p.name(s.e), p.name(s.f)}) +
                        "; " + join({m.name(s.m0), m.name(s.m1), m.name(s.m2), m.name(s.m3)}) +
                        ")");
      }
    }
  }
  if (o.format == "json") {
    Json j{{"dim", o.dim}, {"count", count}};
    if (o.list) j["simplices"] = lines;
    print_json(out, j);
    return 0;
  }
  out << "K" << o.dim << ": " << count << " simplices\n";
  for (const std::string& l : lines) out << "  " << l << "\n";
  return 0;
}

int cmd_loop(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  const Elem a = base_point(x, o);
  const CrossedModule la = loop_xmod_at(x, a);
  if (o.emit) {
    std::string name = "L[" + x.p().name(a) + "]";
    if (auto doc_name = parse_document(read_file(o.file)).name) name = *doc_name + " " + name;
    out << serialize(to_document(la, name));
    return 0;
  }
  const HomotopyData h = homotopy(la);
  if (o.format == "json") {
    Json delta = Json::object();
    for (Elem e = 0; e < la.m().order(); ++e) delta[la.m().name(e)] = la.p().name(la.boundary(e));
    print_json(out, {{"base", x.p().name(a)},
                     {"P(a)", group_json(la.p())},
                     {"M", group_json(la.m())},
                     {"delta_a", delta},
                     {"pi1", group_json(h.pi1)},
                     {"pi2", group_json(h.pi2)}});
    return 0;
  }
  out << "L[" << x.p().name(a) << "]: delta_a: M -> P(a)\n";
  out << "  P(a): " << group_text(la.p()) << "\n";
  out << "  M: " << group_text(la.m()) << "\n";
  out << "  delta_a:";
  for (Elem e = 0; e < la.m().order(); ++e) {
    out << " " << la.m().name(e) << "->" << la.p().name(la.boundary(e));
  }
  out << "\n  pi1 = Cok delta_a: " << group_text(h.pi1) << "\n";
  out << "  pi2 = Ker delta_a: " << group_text(h.pi2) << "\n";
  return 0;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  const Elem a = base_point(x, o);
  const ExactSequence s = exact_sequence(x, a);
  struct Map {
    const char* name;
    const Homomorphism* f;
  };
  const Map maps[] = {{"inclusion", &s.inclusion}, {"d", &s.boundary}, {"j", &s.j}, {"q", &s.q}};
  if (o.format == "json") {
    Json terms = Json::array();
    for (const FiniteGroup* g : {&s.fixed, &s.pi, &s.fibre_pi1, &s.loop_pi1, &s.centralizer}) {
      terms.push_back(group_json(*g));
    }
    Json jm = Json::array();
    for (const Map& m : maps) {
      jm.push_back({{"name", m.name},
                    {"image_order", image(*m.f).size()},
                    {"kernel_order", kernel(*m.f).size()}});
    }
    Json nodes = Json::array();
    for (const NodeCheck& n : s.nodes) {
      nodes.push_back({{"node", n.node}, {"exact", n.exact}, {"detail", n.detail}});
    }
    print_json(out, {{"base", x.p().name(a)},
                     {"terms", terms},
                     {"maps", jm},
                     {"coinvariants", group_json(s.coinvariants)},
                     {"nodes", nodes},
                     {"exact", s.exact()}});
    return s.exact() ? 0 : 1;
  }
  out << "0 -> " << structure_label(s.fixed) << " -> " << structure_label(s.pi) << " -> "
      << structure_label(s.fibre_pi1) << " -> " << structure_label(s.loop_pi1) << " -> "
      << structure_label(s.centralizer) << " -> 1\n";
  out << "terms:\n";
  out << "  pi^a:      " << group_text(s.fixed) << "\n";
  out << "  pi:        " << group_text(s.pi) << "\n";
  out << "  pi1(F,a):  " << group_text(s.fibre_pi1) << "\n";
  out << "  pi1(LX,a): " << group_text(s.loop_pi1) << "\n";
  out << "  C_a(G):    " << group_text(s.centralizer) << "\n";
  out << "  pi/{a}:    " << group_text(s.coinvariants) << "\n";
  out << "maps:\n";
  for (const Map& m : maps) {
    out << "  " << m.name << ": |image| = " << image(*m.f).size()
        << ", |kernel| = " << kernel(*m.f).size() << "\n";
  }
  out << "nodes:\n";
  for (const NodeCheck& n : s.nodes) {
    out << "  " << (n.exact ? "exact  " : "FAILED ") << n.node << "  (" << n.detail << ")\n";
  }
  out << (s.exact() ? "exact\n" : "not exact\n");
  return s.exact() ? 0 : 1;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const CrossedModule x = parse_xmod(read_file(o.file));
  const Elem a = base_point(x, o);
  struct Outcome {
    std::string name;
    std::string status;
    Report report;
  };
  std::vector<Outcome> outcomes;
  auto run = [&](const std::string& name, auto check) {
    try {
      Report r = check(x, a, o.max_order);
      outcomes.push_back({name, r.empty() ? "pass" : "fail", std::move(r)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kPreconditionFailed) throw;
      outcomes.push_back({name, "skipped", {{e.kind(), e.witness()}}});
    }
  };
  run("example1", example1_check);
  run("example2", example2_check);
  bool failed = false;
  for (const Outcome& oc : outcomes) failed = failed || oc.status == "fail";
  if (o.format == "json") {
    Json arr = Json::array();
    for (const Outcome& oc : outcomes) {
      Json notes = Json::array();
      for (const Violation& v : oc.report) notes.push_back(std::string(to_string(v.kind)) + ": " + v.witness);
      arr.push_back({{"check", oc.name}, {"status", oc.status}, {"notes", notes}});
    }
    print_json(out, {{"base", x.p().name(a)}, {"checks", arr}});
  } else {
    for (const Outcome& oc : outcomes) {
      out << oc.name << ": " << oc.status << "\n";
      for (const Violation& v : oc.report) out << "  " << to_string(v.kind) << ": " << v.witness << "\n";
    }
  }
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite crossed modules and their loop crossed modules", "xmodloop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", o.max_order, "Order bound for the isomorphism search")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Validate the crossed module axioms");
  auto* pi = app.add_subcommand("pi", "Homotopy groups of the base or loop space");
  auto* comps = app.add_subcommand("components", "Components of the free loop space");
  auto* nerve = app.add_subcommand("nerve", "Enumerate or count K2 / K3");
  auto* loop = app.add_subcommand("loop", "Construct L[a]");
  auto* exact = app.add_subcommand("exact", "Five-term exact sequence at a base point");
  auto* examples = app.add_subcommand("examples", "Run the delta = 0 and central base point checks");
  for (auto* sub : {check, pi, comps, nerve, loop, exact, examples}) {
    sub->add_option("file", o.file, "Crossed module document (JSON)")->required();
  }
  pi->add_option("--space", o.space, "base or loop")->check(CLI::IsMember({"base", "loop"}));
  pi->add_option("--base", o.base, "Base point (element of P)");
  nerve->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::IsMember({2, 3}));
  auto* count_flag = nerve->add_flag("--count", o.count, "Print the count only (default)");
  nerve->add_flag("--list", o.list, "List every simplex")->excludes(count_flag);
  loop->add_option("--base", o.base, "Base point (element of P)")->required();
  loop->add_flag("--emit", o.emit, "Write L[a] as a crossed module document");
  exact->add_option("--base", o.base, "Base point (element of P)")->required();
  examples->add_option("--base", o.base, "Base point (element of P)")->required();

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (pi->parsed()) return cmd_pi(o, out);
    if (comps->parsed()) return cmd_components(o, out);
    if (nerve->parsed()) return cmd_nerve(o, out);
    if (loop->parsed()) return cmd_loop(o, out);
    if (exact->parsed()) return cmd_exact(o, out);
    if (examples->parsed()) return cmd_examples(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::kUsage ? 2 : 1;
  }
  return 2;
}

}  // namespace xmod
