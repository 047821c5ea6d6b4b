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

#include "framekit/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace framekit {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  if (d.where.known()) {
    out << (d.where.file.empty() ? "<input>" : d.where.file) << ':'
        << d.where.line << ':' << d.where.column << ": ";
  }
  out << (d.severity == Severity::Error ? "error" : "warning") << '['
      << d.code << "]: " << d.message;
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

bool Value::in_overlay(std::string_view overlay) const {
  return std::find(membership.begin(), membership.end(), overlay) !=
         membership.end();
}

const Value* Attribute::find_value(std::string_view name) const {
  for (const Value& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

bool Frame::has_overlay(std::string_view overlay) const {
  return std::find(overlays.begin(), overlays.end(), overlay) !=
         overlays.end();
}

const Attribute* Frame::find_attribute(std::string_view name) const {
  for (const Attribute& a : attributes)
    if (a.name == name) return &a;
  return nullptr;
}

const Frame* Corpus::find(std::string_view name) const {
  for (const Frame& f : frames)
    if (f.name == name) return &f;
  return nullptr;
}

const Frame& Corpus::require(std::string_view name) const {
  if (const Frame* f = find(name)) return *f;
  throw Error("unknown-frame",
              "no frame named '" + std::string(name) + "' in the corpus");
}

bool operator==(const Value& a, const Value& b) {
  return a.name == b.name && a.membership == b.membership &&
         a.expands == b.expands && a.refers == b.refers &&
         a.annotation == b.annotation;
}

bool operator==(const Attribute& a, const Attribute& b) {
  return a.name == b.name && a.kind == b.kind && a.values == b.values;
}

bool operator==(const Constraint& a, const Constraint& b) {
  return a.scope == b.scope && a.antecedent == b.antecedent &&
         a.consequent == b.consequent;
}

bool operator==(const AttributeLink& a, const AttributeLink& b) {
  return a.from == b.from && a.to == b.to && a.label == b.label;
}

bool operator==(const Frame& a, const Frame& b) {
  return a.name == b.name && a.overlays == b.overlays &&
         a.attributes == b.attributes && a.constraints == b.constraints &&
         a.links == b.links && a.annotation == b.annotation;
}

bool operator==(const Corpus& a, const Corpus& b) {
  return a.frames == b.frames;
}

void validate_split(const Frame& frame, const OverlaySplit& split) {
  if (split.old_overlays.empty())
    throw Error("invalid-split", "the old side of a split must be nonempty");
  std::set<std::string> seen;
  for (const std::string& o : split.old_overlays) {
    if (!frame.has_overlay(o))
      throw Error("unknown-overlay", "frame '" + frame.name +
                                         "' declares no overlay '" + o + "'");
    if (o == split.new_overlay)
      throw Error("invalid-split",
                  "overlay '" + o + "' appears on both sides of the split");
    if (!seen.insert(o).second)
      throw Error("invalid-split",
                  "overlay '" + o + "' is listed twice on the old side");
  }
  if (!frame.has_overlay(split.new_overlay))
    throw Error("unknown-overlay", "frame '" + frame.name +
                                       "' declares no overlay '" +
                                       split.new_overlay + "'");
}

std::vector<ValueRef> activation(const Frame& frame,
                                 std::string_view overlay) {
  if (!frame.has_overlay(overlay))
    throw Error("unknown-overlay", "frame '" + frame.name +
                                       "' declares no overlay '" +
                                       std::string(overlay) + "'");
  std::vector<ValueRef> out;
  for (const Attribute& attr : frame.attributes)
    for (const Value& v : attr.values)
      if (v.in_overlay(overlay)) out.push_back({attr.name, v.name});
  return out;
}

ColorClass derive_color(const Value& value, const OverlaySplit& split) {
  bool old_side = false;
  for (const std::string& o : split.old_overlays)
    if (value.in_overlay(o)) old_side = true;
  const bool new_side = value.in_overlay(split.new_overlay);
  if (!old_side && !new_side)
    throw Error("empty-intersection",
                "value '" + value.name +
                    "' belongs to none of the overlays in the split");
  if (old_side && new_side) return ColorClass::Shared;
  return old_side ? ColorClass::OldOnly : ColorClass::NewOnly;
}

namespace {

class Checker {
 public:
  explicit Checker(const Corpus& corpus) : corpus_(corpus) {}

  std::vector<Diagnostic> run() {
    std::unordered_set<std::string> seen;
    for (const Frame& f : corpus_.frames) {
      if (!seen.insert(f.name).second)
        error(f.span, "duplicate-frame",
              "frame '" + f.name + "' is declared more than once");
      check_frame(f);
    }
    return std::move(diags_);
  }

 private:
  void check_frame(const Frame& f) {
    if (f.overlays.size() < 2)
      error(f.span, "too-few-overlays",
            "frame '" + f.name + "' declares " +
                std::to_string(f.overlays.size()) +
                " overlay(s); at least 2 are required");
    report_duplicates(f.overlays, f.span, "duplicate-overlay",
                      "overlay", f.name);

    std::unordered_set<std::string> attr_names;
    for (const Attribute& a : f.attributes) {
      if (!attr_names.insert(a.name).second)
        error(a.span, "duplicate-attribute",
              "attribute '" + a.name + "' is declared more than once in '" +
                  f.name + "'");
      check_attribute(f, a);
    }
    for (const Constraint& c : f.constraints) check_constraint(f, c);
    for (const AttributeLink& l : f.links) check_link(f, l);
  }

  void check_attribute(const Frame& f, const Attribute& a) {
    if (a.values.empty())
      error(a.span, "no-values",
            "attribute '" + a.name + "' has no values");
    else if (a.values.size() == 1)
      warn(a.span, "single-value",
           "attribute '" + a.name + "' has a single value");

    std::unordered_set<std::string> value_names;
    for (const Value& v : a.values) {
      if (!value_names.insert(v.name).second)
        error(v.span, "duplicate-value",
              "value '" + v.name + "' is declared more than once under '" +
                  a.name + "'");
      check_value(f, v);
    }

    if (a.kind == AttributeKind::Exclusive) {
      for (const std::string& overlay : f.overlays) {
        std::vector<const Value*> active;
        for (const Value& v : a.values)
          if (v.in_overlay(overlay)) active.push_back(&v);
        if (active.size() > 1)
          error(active[1]->span, "exclusivity-violated",
                "exclusive attribute '" + a.name + "' activates " +
                    std::to_string(active.size()) + " values in overlay '" +
                    overlay + "'");
        else if (active.empty())
          // Legal: the attribute is irrelevant to this overlay.
          warn(a.span, "empty-activation",
               "exclusive attribute '" + a.name +
                   "' activates no value in overlay '" + overlay + "'");
      }
    }
  }

  void check_value(const Frame& f, const Value& v) {
    if (v.membership.empty())
      error(v.span, "empty-membership",
            "value '" + v.name + "' belongs to no overlay");
    std::unordered_set<std::string> seen;
    for (const std::string& o : v.membership) {
      if (!seen.insert(o).second)
        error(v.span, "duplicate-membership",
              "value '" + v.name + "' lists overlay '" + o + "' twice");
      else if (!f.has_overlay(o))
        error(v.span, "unknown-overlay",
              "value '" + v.name + "' names undeclared overlay '" + o + "'");
    }
    check_frame_ref(f, v, v.expands, "expands");
    check_frame_ref(f, v, v.refers, "refers");
  }

  void check_frame_ref(const Frame& f, const Value& v,
                       const std::optional<std::string>& target,
                       const char* what) {
    if (!target) return;
    if (*target == f.name)
      error(v.span, "self-reference",
            "value '" + v.name + "' " + what + " its own frame '" + f.name +
                "'");
    else if (corpus_.find(*target) == nullptr)
      error(v.span, "unknown-frame",
            "value '" + v.name + "' " + what + " unknown frame '" + *target +
                "'");
  }

  void check_constraint(const Frame& f, const Constraint& c) {
    if (!f.has_overlay(c.scope))
      error(c.span, "unknown-overlay",
            "constraint scope '" + c.scope + "' is not a declared overlay");
    bool ok = check_valref(f, c.antecedent, c.span) &&
              check_valref(f, c.consequent, c.span);
    if (ok && c.antecedent.attribute == c.consequent.attribute)
      error(c.span, "constraint-same-attribute",
            "constraint links two values of the same attribute '" +
                c.antecedent.attribute + "'");
  }

  bool check_valref(const Frame& f, const ValueRef& r, const SourceSpan& at) {
    const Attribute* a = f.find_attribute(r.attribute);
    if (a == nullptr) {
      error(at, "unknown-attribute",
            "no attribute '" + r.attribute + "' in frame '" + f.name + "'");
      return false;
    }
    if (a->find_value(r.value) == nullptr) {
      error(at, "unknown-value",
            "attribute '" + r.attribute + "' has no value '" + r.value + "'");
      return false;
    }
    return true;
  }

  void check_link(const Frame& f, const AttributeLink& l) {
    for (const std::string& end : {l.from, l.to})
      if (f.find_attribute(end) == nullptr)
        error(l.span, "unknown-attribute",
              "link endpoint '" + end + "' is not an attribute of '" +
                  f.name + "'");
    if (l.from == l.to)
      error(l.span, "self-link",
            "link connects attribute '" + l.from + "' to itself");
  }

  void report_duplicates(const std::vector<std::string>& names,
                         const SourceSpan& at, const char* code,
                         const char* what, const std::string& owner) {
    std::unordered_set<std::string> seen;
    for (const std::string& n : names)
      if (!seen.insert(n).second)
        error(at, code, std::string(what) + " '" + n +
                            "' is declared more than once in '" + owner +
                            "'");
  }

  void error(const SourceSpan& at, std::string code, std::string message) {
    diags_.push_back({Severity::Error, at, std::move(code),
                      std::move(message)});
  }
  void warn(const SourceSpan& at, std::string code, std::string message) {
    diags_.push_back({Severity::Warning, at, std::move(code),
                      std::move(message)});
  }

  const Corpus& corpus_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate(const Corpus& corpus) {
  return Checker(corpus).run();
}

}  // namespace framekit
