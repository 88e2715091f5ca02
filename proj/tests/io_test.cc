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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.h"
#include "xmodloop/error.h"
#include "xmodloop/fixtures.h"
#include "xmodloop/io.h"
#include "xmodloop/loop.h"

namespace xmod {
namespace {

const char* const kFiles[] = {"triv.json", "conj_s3.json", "inc24.json", "mod32.json",
                              "inn3.json"};

Error error_of(std::string_view text) {
  try {
    parse_xmod(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed";
  return Error(ErrorKind::kUsage, "");
}

std::string read(const char* file) { return read_file(oracle::fixture_path(file)); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

const char* const kMinimal = R"({
  "P": {"elements": ["e"], "identity": "e", "table": [["e"]]},
  "M": {"elements": ["e"], "identity": "e", "table": [["e"]]},
  "delta": {"e": "e"},
  "action": {"e": {"e": "e"}}
})";

TEST(Io, FixtureFilesMatchBuiltins) {
  const auto all = fixtures::standard();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string text = read(kFiles[i]);
    const XModDocument doc = parse_document(text);
    EXPECT_EQ(doc.name, all[i].name);
    const CrossedModule x = to_xmod(doc);
    const CrossedModule& y = all[i].xmod;
    EXPECT_EQ(x.p().table(), y.p().table()) << all[i].name;
    EXPECT_EQ(x.m().table(), y.m().table()) << all[i].name;
    EXPECT_TRUE(std::equal(x.p().names().begin(), x.p().names().end(),
                           y.p().names().begin(), y.p().names().end()));
    EXPECT_EQ(x.delta().map(), y.delta().map()) << all[i].name;
    EXPECT_EQ(x.action().table(), y.action().table()) << all[i].name;
    oracle::RawXMod r;
    ASSERT_TRUE(oracle::raw_from_document(doc, &r));
    EXPECT_TRUE(oracle::is_crossed_module(r)) << all[i].name;
  }
}

TEST(Io, Minimal) {
  const CrossedModule x = parse_xmod(kMinimal);
  EXPECT_EQ(x.p().order(), 1u);
  EXPECT_EQ(x.m().order(), 1u);
  EXPECT_FALSE(parse_document(kMinimal).name.has_value());
}

TEST(Io, SyntaxErrorReportsLine) {
  const std::string text = "{\n  \"P\": {\n    \"elements\": [\"e\",,]\n  }\n}";
  const Error e = error_of(text);
  EXPECT_EQ(e.kind(), ErrorKind::kSyntaxError);
  EXPECT_NE(e.witness().find("line 3"), std::string::npos) << e.witness();
}

TEST(Io, UnknownIdentifierInDelta) {
  const std::string text = replace_once(read("mod32.json"), "\"1\": \"0\"", "\"1\": \"7\"");
  const Error e = error_of(text);
  EXPECT_EQ(e.kind(), ErrorKind::kUnknownIdentifier);
  EXPECT_NE(e.witness().find("'7'"), std::string::npos) << e.witness();
}

TEST(Io, UnknownIdentifierInTable) {
  const std::string text = replace_once(read("inc24.json"), "\"identity\": \"0\"",
                                        "\"identity\": \"z\"");
  EXPECT_EQ(error_of(text).kind(), ErrorKind::kUnknownIdentifier);
}

TEST(Io, BrokenActionEntry) {
  // MOD32: generator of C2 sends 1 to 2; sending it to 1 breaks (m + n)^p
  XModDocument doc = parse_document(read("mod32.json"));
  for (auto& [p, row] : doc.action) {
    if (p != "1") continue;
    for (auto& [m, v] : row) {
      if (m == "1") v = "1";
    }
  }
  try {
    to_xmod(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidAction);
    EXPECT_EQ(e.witness().rfind("action", 0), 0u) << e.witness();
  }
}

TEST(Io, MissingActionEntry) {
  XModDocument doc = parse_document(read("mod32.json"));
  doc.action.back().second.pop_back();
  try {
    to_xmod(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchemaError);
  }
}

TEST(Io, UnexpectedKey) {
  const std::string text = replace_once(kMinimal, "\"delta\"", "\"extra\": 1, \"delta\"");
  EXPECT_EQ(error_of(text).kind(), ErrorKind::kSchemaError);
}

TEST(Io, BadGroupTableLocated) {
  const std::string text = read("conj_s3.json");
  XModDocument doc = parse_document(text);
  std::swap(doc.p.table[1][2], doc.p.table[1][3]);
  try {
    to_xmod(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.witness().rfind("P.table", 0), 0u) << e.witness();
  }
}

TEST(Io, AxiomViolationLocated) {
  XModDocument doc = parse_document(read("inn3.json"));
  for (auto& [p, row] : doc.action) {
    for (auto& [m, v] : row) v = m;
  }
  try {
    to_xmod(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCM1Violation);
  }
}

TEST(Io, MissingFile) {
  try {
    read_file("/nonexistent/x.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
}

std::vector<XModDocument> corpus() {
  std::vector<XModDocument> docs;
  for (const char* f : kFiles) docs.push_back(parse_document(read(f)));
  for (const auto& f : fixtures::standard()) {
    for (Elem a = 0; a < f.xmod.p().order(); ++a) {
      docs.push_back(to_document(loop_xmod_at(f.xmod, a), f.name + "[" + std::to_string(a) + "]"));
    }
  }
  return docs;
}

TEST(RoundTrip, SerializeParseSerialize) {
  for (const auto& doc : corpus()) {
    const std::string text = serialize(doc);
    const XModDocument again = parse_document(text);
    EXPECT_EQ(again, canonicalize(doc));
    EXPECT_EQ(serialize(again), text);
  }
}

TEST(RoundTrip, EntryOrderIrrelevant) {
  std::mt19937 rng(7);
  for (auto doc : corpus()) {
    const std::string text = serialize(canonicalize(doc));
    std::shuffle(doc.delta.begin(), doc.delta.end(), rng);
    std::shuffle(doc.action.begin(), doc.action.end(), rng);
    for (auto& [p, row] : doc.action) std::shuffle(row.begin(), row.end(), rng);
    EXPECT_EQ(serialize(canonicalize(doc)), text);
  }
}

TEST(RoundTrip, DocumentOfXmodIsSameXmod) {
  for (const auto& f : fixtures::standard()) {
    const CrossedModule y = to_xmod(parse_document(serialize(to_document(f.xmod))));
    EXPECT_EQ(y.p().table(), f.xmod.p().table());
    EXPECT_EQ(y.action().table(), f.xmod.action().table());
    EXPECT_EQ(y.delta().map(), f.xmod.delta().map());
  }
}

}  // namespace
}  // namespace xmod
