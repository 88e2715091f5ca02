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

#include "xmodloop/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace xmod {

namespace {

using Json = nlohmann::ordered_json;

constexpr Elem kUnresolved = static_cast<Elem>(-1);

std::string quote(std::string_view s) { return Json(std::string(s)).dump(); }

Error schema(std::string what) { return Error(ErrorKind::kSchemaError, std::move(what)); }

const Json& member(const Json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw schema(std::string(where) + ": missing \"" + key + "\"");
  }
  return *it;
}

std::string as_string(const Json& j, std::string_view where) {
  if (!j.is_string()) throw schema(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

GroupBlock parse_group(const Json& j, std::string_view where) {
  if (!j.is_object()) throw schema(std::string(where) + ": expected an object");
  GroupBlock g;
  const Json& elements = member(j, "elements", where);
  if (!elements.is_array()) throw schema(std::string(where) + ".elements: expected an array");
  for (const Json& e : elements) g.elements.push_back(as_string(e, std::string(where) + ".elements"));
  g.identity = as_string(member(j, "identity", where), std::string(where) + ".identity");
  const Json& table = member(j, "table", where);
  if (!table.is_array()) throw schema(std::string(where) + ".table: expected an array");
  for (const Json& row : table) {
    if (!row.is_array()) throw schema(std::string(where) + ".table: rows must be arrays");
    std::vector<std::string> r;
    for (const Json& e : row) r.push_back(as_string(e, std::string(where) + ".table"));
    g.table.push_back(std::move(r));
  }
  return g;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

FiniteGroup build_group(const GroupBlock& block, std::string_view where) {
  std::map<std::string_view, bool> known;
  for (const std::string& e : block.elements) known[e] = true;
  for (std::size_t i = 0; i < block.table.size(); ++i) {
    for (const std::string& e : block.table[i]) {
      if (!known.count(e)) {
        throw Error(ErrorKind::kUnknownIdentifier,
                    std::string(where) + ".table row " + std::to_string(i) + ": '" + e + "'");
      }
    }
  }
  if (!known.count(block.identity)) {
    throw Error(ErrorKind::kUnknownIdentifier,
                std::string(where) + ".identity: '" + block.identity + "'");
  }
  try {
    return FiniteGroup::make(block.elements, block.table, block.identity);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(where) + ".table: " + e.witness());
  }
}

Elem resolve(const FiniteGroup& g, const std::string& name, const std::string& where) {
  if (auto x = g.find(name)) return *x;
  throw Error(ErrorKind::kUnknownIdentifier, where + ": '" + name + "'");
}

std::string location_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHomomorphism: return "delta";
    case ErrorKind::kInvalidAction: return "action";
    case ErrorKind::kCM1Violation: return "delta/action";
    case ErrorKind::kCM2Violation: return "action";
    default: return "document";
  }
}

void write_group(std::ostringstream& out, const GroupBlock& g) {
  out << "{\n    \"elements\": [";
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    out << (i ? ", " : "") << quote(g.elements[i]);
  }
  out << "],\n    \"identity\": " << quote(g.identity) << ",\n    \"table\": [\n";
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    out << "      [";
    for (std::size_t k = 0; k < g.table[i].size(); ++k) {
      out << (k ? ", " : "") << quote(g.table[i][k]);
    }
    out << "]" << (i + 1 < g.table.size() ? "," : "") << "\n";
  }
  out << "    ]\n  }";
}

GroupBlock to_block(const FiniteGroup& g) {
  GroupBlock b;
  b.elements.assign(g.names().begin(), g.names().end());
  b.identity = g.name(g.zero());
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<std::string> row;
    for (Elem y = 0; y < g.order(); ++y) row.push_back(g.name(g.add(x, y)));
    b.table.push_back(std::move(row));
  }
  return b;
}

}  // namespace

XModDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSyntaxError,
                "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                    ": " + e.what());
  }
  if (!j.is_object()) throw schema("document: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "P" && key != "M" && key != "delta" && key != "action") {
      throw schema("document: unexpected key \"" + key + "\"");
    }
  }
  XModDocument doc;
  if (auto it = j.find("name"); it != j.end()) doc.name = as_string(*it, "name");
  doc.p = parse_group(member(j, "P", "document"), "P");
  doc.m = parse_group(member(j, "M", "document"), "M");
  const Json& delta = member(j, "delta", "document");
  if (!delta.is_object()) throw schema("delta: expected an object");
  for (const auto& [key, value] : delta.items()) {
    doc.delta.emplace_back(key, as_string(value, "delta[" + quote(key) + "]"));
  }
  const Json& action = member(j, "action", "document");
  if (!action.is_object()) throw schema("action: expected an object");
  for (const auto& [pkey, row] : action.items()) {
    if (!row.is_object()) throw schema("action[" + quote(pkey) + "]: expected an object");
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& [mkey, value] : row.items()) {
      entries.emplace_back(mkey,
                           as_string(value, "action[" + quote(pkey) + "][" + quote(mkey) + "]"));
    }
    doc.action.emplace_back(pkey, std::move(entries));
  }
  return doc;
}

XModDocument canonicalize(const XModDocument& doc) {
  auto rank_in = [](const std::vector<std::string>& order) {
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
    return rank;
  };
  const auto mrank = rank_in(doc.m.elements);
  const auto prank = rank_in(doc.p.elements);
  auto by = [](const std::map<std::string, std::size_t>& rank) {
    return [&rank](const auto& x, const auto& y) {
      auto rx = rank.find(x.first);
      auto ry = rank.find(y.first);
      const std::size_t ix = rx == rank.end() ? rank.size() : rx->second;
      const std::size_t iy = ry == rank.end() ? rank.size() : ry->second;
      return ix != iy ? ix < iy : x.first < y.first;
    };
  };
  XModDocument out = doc;
  std::stable_sort(out.delta.begin(), out.delta.end(), by(mrank));
  std::stable_sort(out.action.begin(), out.action.end(), by(prank));
  for (auto& row : out.action) std::stable_sort(row.second.begin(), row.second.end(), by(mrank));
  return out;
}

std::string serialize(const XModDocument& input) {
  const XModDocument doc = canonicalize(input);
  std::ostringstream out;
  out << "{\n";
  if (doc.name) out << "  \"name\": " << quote(*doc.name) << ",\n";
  out << "  \"P\": ";
  write_group(out, doc.p);
  out << ",\n  \"M\": ";
  write_group(out, doc.m);
  out << ",\n  \"delta\": {";
  for (std::size_t i = 0; i < doc.delta.size(); ++i) {
    out << (i ? ", " : "") << quote(doc.delta[i].first) << ": " << quote(doc.delta[i].second);
  }
  out << "},\n  \"action\": {\n";
  for (std::size_t i = 0; i < doc.action.size(); ++i) {
    out << "    " << quote(doc.action[i].first) << ": {";
    const auto& row = doc.action[i].second;
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? ", " : "") << quote(row[k].first) << ": " << quote(row[k].second);
    }
    out << "}" << (i + 1 < doc.action.size() ? "," : "") << "\n";
  }
  out << "  }\n}\n";
  return out.str();
}

XModData to_xmod_data(const XModDocument& doc) {
  const FiniteGroup p = build_group(doc.p, "P");
  const FiniteGroup m = build_group(doc.m, "M");

  std::vector<Elem> delta(m.order(), kUnresolved);
  for (const auto& [key, value] : doc.delta) {
    const std::string where = "delta[" + quote(key) + "]";
    const Elem x = resolve(m, key, where);
    if (delta[x] != kUnresolved) throw schema(where + ": duplicate entry");
    delta[x] = resolve(p, value, where);
  }
  for (Elem x = 0; x < m.order(); ++x) {
    if (delta[x] == kUnresolved) throw schema("delta: no entry for " + quote(m.name(x)));
  }

  Table action(p.order(), std::vector<Elem>(m.order(), kUnresolved));
  std::vector<bool> seen(p.order(), false);
  for (const auto& [pkey, row] : doc.action) {
    const std::string where = "action[" + quote(pkey) + "]";
    const Elem q = resolve(p, pkey, where);
    if (seen[q]) throw schema(where + ": duplicate entry");
    seen[q] = true;
    for (const auto& [mkey, value] : row) {
      const std::string at = where + "[" + quote(mkey) + "]";
      const Elem x = resolve(m, mkey, at);
      if (action[q][x] != kUnresolved) throw schema(at + ": duplicate entry");
      action[q][x] = resolve(m, value, at);
    }
  }
  for (Elem q = 0; q < p.order(); ++q) {
    for (Elem x = 0; x < m.order(); ++x) {
      if (action[q][x] == kUnresolved) {
        throw schema("action: no entry for " + quote(m.name(x)) + "^" + quote(p.name(q)));
      }
    }
  }
  return {m, p, std::move(delta), std::move(action)};
}

CrossedModule to_xmod(const XModDocument& doc) {
  const XModData data = to_xmod_data(doc);
  const Report report = check_axioms(data);
  if (!report.empty()) {
    const Violation& v = report.front();
    throw Error(v.kind, location_of(v.kind) + ": " + v.witness);
  }
  return CrossedModule::make(data);
}

XModDocument to_document(const CrossedModule& x, std::optional<std::string> name) {
  XModDocument doc;
  doc.name = std::move(name);
  doc.p = to_block(x.p());
  doc.m = to_block(x.m());
  for (Elem e = 0; e < x.m().order(); ++e) {
    doc.delta.emplace_back(x.m().name(e), x.p().name(x.boundary(e)));
  }
  for (Elem q = 0; q < x.p().order(); ++q) {
    std::vector<std::pair<std::string, std::string>> row;
    for (Elem e = 0; e < x.m().order(); ++e) {
      row.emplace_back(x.m().name(e), x.m().name(x.act(e, q)));
    }
    doc.action.emplace_back(x.p().name(q), std::move(row));
  }
  return doc;
}

CrossedModule parse_xmod(std::string_view text) { return to_xmod(parse_document(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kUsage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace xmod
