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

#ifndef FRAMEKIT_DSL_HPP
#define FRAMEKIT_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framekit/model.hpp"

namespace framekit {

// Outcome of parsing one text. `corpus` is set iff no error diagnostics
// were produced; warnings may accompany a successful parse.
struct ParseResult {
  std::optional<Corpus> corpus;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return corpus.has_value(); }
};

// Parses the frame DSL:
//
//   corpus     := frame*
//   frame      := "frame" NAME "{" "overlays" ":" NAME ("," NAME)+ item* "}"
//   item       := attribute | constraint | link | "note" STRING
//   attribute  := "attribute" NAME ("exclusive" | "multi")? "{" valuedef+ "}"
//   valuedef   := "value" NAME "[" NAME ("," NAME)* "]"
//                 ("expands" NAME)? ("refers" NAME)? STRING?
//   constraint := "constraint" NAME ":" valref "=>" valref
//   valref     := NAME "." NAME
//   link       := "link" NAME "->" NAME STRING?
//   NAME       := [A-Za-z_][A-Za-z0-9_-]* or a double-quoted string
//
// Whitespace-insensitive; `#` starts a line comment; default attribute kind
// is `multi`. References local to a frame (membership overlays, constraint
// ends, link ends) are resolved here; cross-frame references are left to
// validate(). After an error the parser skips to the next top-level `frame`
// so one run reports every broken frame.
ParseResult parse_corpus(std::string_view text,
                         const std::string& file = "<input>");

// parse_corpus over a file's bytes; unreadable files yield an "io-error"
// diagnostic.
ParseResult parse_file(const std::string& path);

// Canonical form: 2-space indent, one declaration per line, declaration
// order preserved, attribute kind always explicit, names quoted only when
// not bare identifiers, LF newlines. Reparses to a structurally equal
// corpus. Empty corpus prints as the empty string.
std::string print_corpus(const Corpus& corpus);

// Lossless JSON image of a corpus (schema version 1), declaration order
// preserved, two-space indented, trailing newline.
std::string export_json(const Corpus& corpus);

// Inverse of export_json. Throws Error with a JSON-pointer-style path in
// the message: "json-parse", "unsupported-version", "unknown-field",
// "missing-field", "type-mismatch".
Corpus import_json(std::string_view text);

// Concatenates frame lists in input order. Throws Error("duplicate-frame")
// when two parts define the same frame name.
Corpus merge_corpora(const std::vector<Corpus>& parts);

}  // namespace framekit

#endif  // FRAMEKIT_DSL_HPP
