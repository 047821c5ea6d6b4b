// Copyright 2026 The Framekit Authors
//
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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "framekit/dsl.hpp"
#include "framekit/model.hpp"
#include "generators.hpp"
#include "test_util.hpp"

namespace framekit {
namespace {

using testing::all_fixture_files;
using testing::fixture_path;
using testing::parse_ok;

std::vector<std::string> error_codes(const ParseResult& result) {
  std::vector<std::string> out;
  for (const Diagnostic& d : result.diagnostics)
    if (d.is_error()) out.push_back(d.code);
  return out;
}

TEST_CASE("a full frame parses into the expected model") {
  const Corpus corpus = parse_ok(R"(
# comment lines vanish
frame "GENERAL MODEL" {
  overlays: wave, particle, quantum
  note "two classical versions, one quantum"

  attribute Detection {  # default kind is multi
    value punctual [particle, quantum] refers MEASUREMENT
    value spread [wave] "follows the intensity"
  }
  attribute Propagation exclusive {
    value trajectory [particle] expands PATH
    value "all paths" [wave, quantum] expands PATH refers MEASUREMENT "both"
  }
  constraint quantum: Detection.punctual => Propagation."all paths"
  link Detection -> Propagation "operational pairing"
}
frame MEASUREMENT { overlays: a, b
  attribute M multi { value m [a, b] } }
frame PATH { overlays: a, b
  attribute P { value p [a] value q [b] } }
)");

  REQUIRE(corpus.frames.size() == 3);
  const Frame& f = corpus.frames[0];
  CHECK(f.name == "GENERAL MODEL");
  CHECK(f.overlays == std::vector<std::string>{"wave", "particle", "quantum"});
  CHECK(f.annotation == "two classical versions, one quantum");

  REQUIRE(f.attributes.size() == 2);
  const Attribute& detection = f.attributes[0];
  CHECK(detection.kind == AttributeKind::Multi);
  REQUIRE(detection.values.size() == 2);
  CHECK(detection.values[0].membership ==
        std::vector<std::string>{"particle", "quantum"});
  CHECK(detection.values[0].refers == "MEASUREMENT");
  CHECK_FALSE(detection.values[0].expands.has_value());
  CHECK(detection.values[1].annotation == "follows the intensity");

  const Attribute& propagation = f.attributes[1];
  CHECK(propagation.kind == AttributeKind::Exclusive);
  CHECK(propagation.values[0].expands == "PATH");
  CHECK(propagation.values[1].name == "all paths");
  CHECK(propagation.values[1].expands == "PATH");
  CHECK(propagation.values[1].refers == "MEASUREMENT");
  CHECK(propagation.values[1].annotation == "both");

  REQUIRE(f.constraints.size() == 1);
  CHECK(f.constraints[0].scope == "quantum");
  CHECK(f.constraints[0].antecedent == ValueRef{"Detection", "punctual"});
  CHECK(f.constraints[0].consequent == ValueRef{"Propagation", "all paths"});

  REQUIRE(f.links.size() == 1);
  CHECK(f.links[0].from == "Detection");
  CHECK(f.links[0].to == "Propagation");
  CHECK(f.links[0].label == "operational pairing");

  // Spans carry the file and a 1-based position.
  CHECK(f.span.known());
  CHECK(f.span.file == "<input>");
  CHECK(f.span.line == 3);
}

TEST_CASE("identifiers accept dashes but yield arrows to links") {
  const Corpus corpus = parse_ok(R"(
frame F {
  overlays: spin-x, spin-z
  attribute spin-axis {
    value x-up [spin-x]
    value z-up [spin-z]
  }
  link spin-axis -> spin-axis-2
  attribute spin-axis-2 {
    value other [spin-x]
  }
}
)");
  const Frame& f = corpus.frames[0];
  CHECK(f.overlays == std::vector<std::string>{"spin-x", "spin-z"});
  // `spin-axis-2` keeps its trailing dash-digit; `->` still terminates the
  // left name because `-` binds to the identifier only when not before `>`.
  CHECK(f.links[0].from == "spin-axis");
  CHECK(f.links[0].to == "spin-axis-2");
}

TEST_CASE("quoted names carry escapes and keywords") {
  const Corpus corpus = parse_ok(R"(
frame "frame" {
  overlays: "value", other
  attribute "multi" {
    value "say \"hi\"\n\t\\" ["value"]
  }
}
)");
  const Frame& f = corpus.frames[0];
  CHECK(f.name == "frame");
  CHECK(f.overlays[0] == "value");
  CHECK(f.attributes[0].name == "multi");
  CHECK(f.attributes[0].values[0].name == "say \"hi\"\n\t\\");
}

TEST_CASE("bare keywords are rejected as names") {
  ParseResult result = parse_corpus("frame value { overlays: a, b }");
  CHECK_FALSE(result.ok());
  REQUIRE(result.diagnostics.size() >= 1);
  CHECK(result.diagnostics[0].code == "reserved-word");
}

TEST_CASE("lexer diagnostics carry exact positions") {
  ParseResult result = parse_corpus("frame F {\n  overlays: a, %b\n}", "f.fr");
  CHECK_FALSE(result.ok());
  REQUIRE(!result.diagnostics.empty());
  const Diagnostic& d = result.diagnostics[0];
  CHECK(d.code == "unexpected-character");
  CHECK(d.where.file == "f.fr");
  CHECK(d.where.line == 2);
  CHECK(d.where.column == 16);
}

TEST_CASE("string errors: unterminated and bad escapes") {
  ParseResult unterminated = parse_corpus("frame \"F\n");
  const auto dangling = error_codes(unterminated);
  CHECK(std::count(dangling.begin(), dangling.end(), "unterminated-string") ==
        1);

  ParseResult bad = parse_corpus(R"(frame "F\q" { overlays: a, b })");
  const auto codes = error_codes(bad);
  CHECK(std::count(codes.begin(), codes.end(), "bad-escape") == 1);
}

TEST_CASE("windows line endings parse like posix ones") {
  const Corpus lf = parse_ok("frame F {\n  overlays: a, b\n}\n");
  const Corpus crlf = parse_ok("frame F {\r\n  overlays: a, b\r\n}\r\n");
  CHECK(lf == crlf);
}

TEST_CASE("frame-local references resolve across the whole frame body") {
  // Constraint and link targets may be declared after their use.
  const Corpus corpus = parse_ok(R"(
frame F {
  overlays: a, b
  constraint a: A.x => B.y
  link A -> B
  attribute A { value x [a] value x2 [b] }
  attribute B { value y [a] value y2 [b] }
}
)");
  CHECK(corpus.frames[0].constraints.size() == 1);

  ParseResult missing = parse_corpus(R"(
frame F {
  overlays: a, b
  constraint a: A.x => B.nope
  link A -> C
  attribute A { value x [a] value y [b] }
  attribute B { value y [a] value z [b] }
}
)");
  CHECK_FALSE(missing.ok());
  const auto codes = error_codes(missing);
  CHECK(std::count(codes.begin(), codes.end(), "unknown-value") == 1);
  CHECK(std::count(codes.begin(), codes.end(), "unknown-attribute") == 1);
}

TEST_CASE("local semantic errors do not abort the frame") {
  ParseResult result = parse_corpus(R"(
frame F {
  overlays: a, a
  attribute A {
    value x [a, a]
    value x [nope]
  }
}
)");
  CHECK_FALSE(result.ok());
  const auto codes = error_codes(result);
  CHECK(std::count(codes.begin(), codes.end(), "duplicate-overlay") == 1);
  CHECK(std::count(codes.begin(), codes.end(), "duplicate-membership") == 1);
  CHECK(std::count(codes.begin(), codes.end(), "duplicate-value") == 1);
  CHECK(std::count(codes.begin(), codes.end(), "unknown-overlay") == 1);
}

TEST_CASE("the parser recovers at the next frame after an abort") {
  ParseResult result = parse_corpus(R"(
frame A {
  overlays: a, b
  attribute X { value multi [a] }
}
frame B {
  overlays: a
}
frame C {
  overlays: a, b
  attribute Y { value y [a] value z [b] }
}
)");
  CHECK_FALSE(result.ok());
  const auto codes = error_codes(result);
  // One abort in A (keyword as value name), one local error in B; C is
  // clean, which recovery can only reach by resynchronizing.
  CHECK(std::count(codes.begin(), codes.end(), "reserved-word") == 1);
  CHECK(std::count(codes.begin(), codes.end(), "too-few-overlays") == 1);
  CHECK(codes.size() == 2);
}

TEST_CASE("misordered value modifiers are rejected") {
  ParseResult result = parse_corpus(R"(
frame F {
  overlays: a, b
  attribute A { value x [a] refers G expands H value y [b] }
}
frame G { overlays: a, b attribute Z { value w [a] value u [b] } }
frame H { overlays: a, b attribute Z { value w [a] value u [b] } }
)");
  CHECK_FALSE(result.ok());
  const auto codes = error_codes(result);
  CHECK(std::count(codes.begin(), codes.end(), "misordered-modifier") == 1);
}

TEST_CASE("frames missing their closing brace fail at end of input") {
  ParseResult result = parse_corpus("frame F {\n  overlays: a, b\n");
  CHECK_FALSE(result.ok());
  const auto codes = error_codes(result);
  CHECK(std::count(codes.begin(), codes.end(), "unterminated-frame") == 1);
}

TEST_CASE("duplicate frames are reported at parse time") {
  ParseResult result = parse_corpus(R"(
frame F { overlays: a, b }
frame F { overlays: a, b }
)");
  CHECK_FALSE(result.ok());
  const auto codes = error_codes(result);
  CHECK(std::count(codes.begin(), codes.end(), "duplicate-frame") == 1);
}

TEST_CASE("parse_file reports unreadable paths") {
  ParseResult result = parse_file("/nonexistent/nowhere.frame");
  CHECK_FALSE(result.ok());
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].code == "io-error");
}

TEST_CASE("print_corpus emits the canonical form") {
  Corpus corpus;
  Frame frame;
  frame.name = "GENERIC";
  frame.overlays = {"old", "new era"};
  frame.annotation = "a \"note\"\nwith newline";
  Attribute attr;
  attr.name = "A";
  attr.kind = AttributeKind::Exclusive;
  attr.values.push_back(
      {"x", {"old"}, std::nullopt, std::nullopt, std::nullopt, {}});
  attr.values.push_back({"why not", {"old", "new era"}, "GENERIC 2", "GENERIC 2",
                         "tab\there", {}});
  frame.attributes.push_back(attr);
  frame.constraints.push_back({"old", {"A", "x"}, {"B", "value"}, {}});
  frame.links.push_back({"A", "B", std::nullopt, {}});
  corpus.frames.push_back(frame);

  CHECK(print_corpus(corpus) ==
        "frame GENERIC {\n"
        "  overlays: old, \"new era\"\n"
        "  note \"a \\\"note\\\"\\nwith newline\"\n"
        "  attribute A exclusive {\n"
        "    value x [old]\n"
        "    value \"why not\" [old, \"new era\"] expands \"GENERIC 2\""
        " refers \"GENERIC 2\" \"tab\\there\"\n"
        "  }\n"
        "  constraint old: A.x => B.\"value\"\n"
        "  link A -> B\n"
        "}\n");
  CHECK(print_corpus(Corpus{}) == "");
}

TEST_CASE("printed fixtures reparse to structurally equal corpora") {
  for (const std::string& rel : all_fixture_files()) {
    CAPTURE(rel);
    ParseResult first = parse_file(fixture_path(rel));
    REQUIRE(first.ok());
    const std::string printed = print_corpus(*first.corpus);
    ParseResult second = parse_corpus(printed, rel + "#printed");
    REQUIRE(second.ok());
    CHECK(*first.corpus == *second.corpus);
    // A canonical form must be a fixed point of print.
    CHECK(print_corpus(*second.corpus) == printed);
  }
}

TEST_CASE("print round-trips survive generated corpora") {
  std::mt19937 rng(20260814);
  testing::GenOptions opts;
  opts.allow_references = true;
  for (int i = 0; i < 100; ++i) {
    const Corpus corpus = testing::random_corpus(rng, opts);
    const std::string printed = print_corpus(corpus);
    CAPTURE(printed);
    ParseResult back = parse_corpus(printed);
    REQUIRE(back.ok());
    CHECK(corpus == *back.corpus);
  }
}

TEST_CASE("json export is the inverse of import on fixtures and random data") {
  std::mt19937 rng(7);
  testing::GenOptions opts;
  opts.allow_references = true;
  for (int i = 0; i < 100; ++i) {
    const Corpus corpus = testing::random_corpus(rng, opts);
    const std::string json = export_json(corpus);
    CHECK(import_json(json) == corpus);
  }
  for (const std::string& rel : all_fixture_files()) {
    CAPTURE(rel);
    ParseResult result = parse_file(fixture_path(rel));
    REQUIRE(result.ok());
    CHECK(import_json(export_json(*result.corpus)) == *result.corpus);
  }
}

TEST_CASE("json export carries declaration order and optional fields") {
  const Corpus corpus = parse_ok(R"(
frame F {
  overlays: b, a
  attribute Z exclusive { value z2 [b] value z1 [a] "note" }
}
)");
  const std::string json = export_json(corpus);
  CHECK(json.find("\"version\": 1") != std::string::npos);
  CHECK(json.find("\"kind\": \"exclusive\"") != std::string::npos);
  // b precedes a: order is declaration order, not sorted.
  CHECK(json.find("\"b\"") < json.find("\"a\""));
  CHECK(json.find("z2") < json.find("z1"));
  CHECK(json.find("\"expands\"") == std::string::npos);
  CHECK(json.back() == '\n');
}

TEST_CASE("json import rejects malformed documents with precise codes") {
  const auto code_of = [](std::string_view text) {
    try {
      import_json(text);
    } catch (const Error& e) {
      return std::string(e.code());
    }
    return std::string("no-error");
  };

  CHECK(code_of("{ not json") == "json-parse");
  CHECK(code_of(R"({"frames": []})") == "missing-field");
  CHECK(code_of(R"({"version": 2, "frames": []})") == "unsupported-version");
  CHECK(code_of(R"({"version": 1})") == "missing-field");
  CHECK(code_of(R"({"version": 1, "frames": {}})") == "type-mismatch");
  CHECK(code_of(R"({"version": 1, "frames": [], "extra": 0})") ==
        "unknown-field");
  CHECK(code_of(R"([1, 2])") == "type-mismatch");

  // Unknown keys are rejected at every level, not only the root.
  const std::string deep = R"({
    "version": 1,
    "frames": [{
      "name": "F",
      "overlays": ["a", "b"],
      "attributes": [{
        "name": "A",
        "kind": "multi",
        "values": [{"name": "x", "membership": ["a"], "color": "red"}]
      }]
    }]
  })";
  CHECK(code_of(deep) == "unknown-field");

  const std::string bad_kind = R"({
    "version": 1,
    "frames": [{
      "name": "F",
      "overlays": ["a", "b"],
      "attributes": [{"name": "A", "kind": "open", "values": []}]
    }]
  })";
  CHECK(code_of(bad_kind) == "type-mismatch");

  // Error messages point into the document.
  try {
    import_json(deep);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(
              "/frames/0/attributes/0/values/0") != std::string::npos);
  }
}

TEST_CASE("merge_corpora keeps order and rejects duplicates") {
  const Corpus a = parse_ok("frame A { overlays: x, y }");
  const Corpus b = parse_ok("frame B { overlays: x, y }");
  const Corpus merged = merge_corpora({a, b});
  REQUIRE(merged.frames.size() == 2);
  CHECK(merged.frames[0].name == "A");
  CHECK(merged.frames[1].name == "B");

  try {
    merge_corpora({a, a});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "duplicate-frame");
  }
  CHECK(merge_corpora({}).frames.empty());
}

}  // namespace
}  // namespace framekit
