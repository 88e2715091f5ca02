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

#ifndef XMODLOOP_IO_H_
#define XMODLOOP_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xmodloop/xmod.h"

namespace xmod {

struct GroupBlock {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
  std::string identity;

  bool operator==(const GroupBlock&) const = default;
};

// JSON document describing a finite crossed module:
//
//   {"name": ..., "P": {"elements", "identity", "table"}, "M": {...},
//    "delta": {m: p, ...}, "action": {p: {m: m^p, ...}, ...}}
//
// Entries of "delta" and "action" are kept in file order until canonicalized.
struct XModDocument {
  std::optional<std::string> name;
  GroupBlock p;
  GroupBlock m;
  std::vector<std::pair<std::string, std::string>> delta;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
      action;

  bool operator==(const XModDocument&) const = default;
};

// Throws SyntaxError (with line number) or SchemaError.
XModDocument parse_document(std::string_view text);

// Map entries reordered to the canonical element order of P and M.
XModDocument canonicalize(const XModDocument& doc);

// Canonical text: fixed key order, map entries in canonical element order,
// one table row per line.
std::string serialize(const XModDocument& doc);

// Resolves names and validates both groups, without checking the crossed
// module axioms. Throws UnknownIdentifier, SchemaError (non-total maps), or
// the group validation error prefixed with its block.
XModData to_xmod_data(const XModDocument& doc);

// Fully validated; axiom violations are rethrown with their block location.
CrossedModule to_xmod(const XModDocument& doc);

XModDocument to_document(const CrossedModule& x,
                         std::optional<std::string> name = std::nullopt);

CrossedModule parse_xmod(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace xmod

#endif  // XMODLOOP_IO_H_
