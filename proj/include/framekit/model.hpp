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

#ifndef FRAMEKIT_MODEL_HPP
#define FRAMEKIT_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace framekit {

// Position of a parsed construct in its source file. line/column are 1-based;
// a default-constructed span (line 0) marks nodes built programmatically.
struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;
  int length = 0;

  bool known() const { return line > 0; }
};

enum class Severity { Error, Warning };

// One validation or parse finding. Errors make a corpus unusable for
// analysis; warnings do not.
struct Diagnostic {
  Severity severity = Severity::Error;
  SourceSpan where;
  std::string code;     // short machine tag, e.g. "unknown-overlay"
  std::string message;  // human text

  bool is_error() const { return severity == Severity::Error; }
};

// "file:line:col: error[code]: message" (location omitted when unknown).
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

// Typed failure for operations whose preconditions are violated (unknown
// names, bad splits, ...). `code` uses the same machine tags as Diagnostic.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A (attribute, value) pair relative to its owning frame.
struct ValueRef {
  std::string attribute;
  std::string value;

  friend auto operator<=>(const ValueRef&, const ValueRef&) = default;
};

// One value of an attribute. `membership` lists the overlays that activate
// the value, in declaration order; it is treated as a set everywhere else.
struct Value {
  std::string name;
  std::vector<std::string> membership;
  std::optional<std::string> expands;  // frame expanded recursively
  std::optional<std::string> refers;   // external concept reference
  std::optional<std::string> annotation;
  SourceSpan span;

  bool in_overlay(std::string_view overlay) const;
};

enum class AttributeKind { Exclusive, Multi };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::Multi;
  std::vector<Value> values;
  SourceSpan span;

  const Value* find_value(std::string_view name) const;
};

// Overlay-scoped implication between values of two different attributes.
struct Constraint {
  std::string scope;  // overlay name
  ValueRef antecedent;
  ValueRef consequent;
  SourceSpan span;
};

// Directed, labeled relation between two attributes of one frame.
struct AttributeLink {
  std::string from;
  std::string to;
  std::optional<std::string> label;
  SourceSpan span;
};

// A dynamic frame: one superordinate concept, its attributes and their
// values, plus named overlays (theory versions / subordinate concepts)
// selecting values per attribute.
struct Frame {
  std::string name;
  std::vector<std::string> overlays;  // >= 2
  std::vector<Attribute> attributes;
  std::vector<Constraint> constraints;
  std::vector<AttributeLink> links;
  std::optional<std::string> annotation;
  SourceSpan span;

  bool has_overlay(std::string_view overlay) const;
  const Attribute* find_attribute(std::string_view name) const;
};

// Ordered collection of frames with unique names.
struct Corpus {
  std::vector<Frame> frames;

  const Frame* find(std::string_view name) const;
  // Throws Error("unknown-frame") when absent.
  const Frame& require(std::string_view name) const;
};

// Structural equality: every field except SourceSpans.
bool operator==(const Value& a, const Value& b);
bool operator==(const Attribute& a, const Attribute& b);
bool operator==(const Constraint& a, const Constraint& b);
bool operator==(const AttributeLink& a, const AttributeLink& b);
bool operator==(const Frame& a, const Frame& b);
bool operator==(const Corpus& a, const Corpus& b);

// Two-theory comparison: a set of "old" overlays against one "new" overlay.
struct OverlaySplit {
  std::vector<std::string> old_overlays;  // nonempty, distinct
  std::string new_overlay;                // not among old_overlays
};

// Checks the split against the frame's declared overlays; throws
// Error("unknown-overlay" / "invalid-split") on violation.
void validate_split(const Frame& frame, const OverlaySplit& split);

// Derived theory-membership color of a value under a split.
enum class ColorClass {
  OldOnly,  // "white": activated by an old overlay only
  NewOnly,  // "black": activated by the new overlay only
  Shared,   // "gray": activated on both sides
};

// The values an overlay activates, in attribute order then value order.
// Throws Error("unknown-overlay").
std::vector<ValueRef> activation(const Frame& frame, std::string_view overlay);

// Classifies one value under a split. Throws Error("empty-intersection")
// when the value belongs to none of the split's overlays.
ColorClass derive_color(const Value& value, const OverlaySplit& split);

// Checks every model invariant; an empty result means the corpus is safe
// for every other operation in the library.
std::vector<Diagnostic> validate(const Corpus& corpus);

}  // namespace framekit

#endif  // FRAMEKIT_MODEL_HPP
