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

#include "framekit/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "json_util.hpp"

namespace framekit {

namespace {

using jsonu::json;

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

// Light fills that keep black labels readable; cycled when a frame has more
// distinct membership sets than entries.
const char* const kPalette[] = {
    "white",     "lightgray", "lightblue",  "lightpink",
    "palegreen", "khaki",     "orange",     "plum",
    "lightcyan", "wheat",     "salmon",     "yellowgreen",
};

std::string membership_label(const Value& value) {
  std::vector<std::string> sorted = value.membership;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out += ", ";
    out += sorted[i];
  }
  out += "}";
  return out;
}

// Palette index per distinct sorted membership set, assigned in sorted-set
// order so the mapping ignores declaration order.
std::map<std::vector<std::string>, std::size_t> palette_map(
    const Frame& frame) {
  std::vector<std::vector<std::string>> sets;
  for (const Attribute& attr : frame.attributes)
    for (const Value& value : attr.values) {
      std::vector<std::string> key = value.membership;
      std::sort(key.begin(), key.end());
      if (std::find(sets.begin(), sets.end(), key) == sets.end())
        sets.push_back(std::move(key));
    }
  std::sort(sets.begin(), sets.end());
  std::map<std::vector<std::string>, std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i) out[sets[i]] = i;
  return out;
}

std::string cell_text(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n' || c == '\t')
      out += ' ';
    else
      out += c;
  }
  return out;
}

std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", score);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string emit_dot(const Frame& frame, const RenderOptions& opts) {
  if (opts.split) validate_split(frame, *opts.split);
  const auto palette = opts.split
                           ? std::map<std::vector<std::string>, std::size_t>{}
                           : palette_map(frame);

  std::string out = "digraph " + dot_quote(frame.name) + " {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box, style=filled, fillcolor=white];\n";
  out += "  s [label=" + dot_quote(frame.name) +
         ", shape=ellipse, fillcolor=lightyellow];\n";

  // (attribute, value) -> node id, for constraint edges.
  std::map<std::pair<std::string, std::string>, std::string> value_ids;
  std::map<std::string, std::string> attr_ids;

  for (std::size_t a = 0; a < frame.attributes.size(); ++a) {
    const Attribute& attr = frame.attributes[a];
    const std::string aid = "a" + std::to_string(a);
    attr_ids[attr.name] = aid;
    std::string label = attr.name;
    if (attr.kind == AttributeKind::Exclusive) label += " (exclusive)";
    out += "  " + aid + " [label=" + dot_quote(label) +
           ", fillcolor=lightskyblue];\n";
    for (std::size_t v = 0; v < attr.values.size(); ++v) {
      const Value& value = attr.values[v];
      const std::string vid =
          "v" + std::to_string(a) + "_" + std::to_string(v);
      value_ids[{attr.name, value.name}] = vid;
      out += "  " + vid + " [label=";
      if (opts.split) {
        out += dot_quote(value.name);
        bool in_split = true;
        ColorClass color = ColorClass::Shared;
        try {
          color = derive_color(value, *opts.split);
        } catch (const Error&) {
          in_split = false;  // value belongs to neither side
        }
        if (!in_split) {
          out += ", style=\"filled,dashed\", fillcolor=white";
        } else {
          switch (color) {
            case ColorClass::OldOnly: out += ", fillcolor=white"; break;
            case ColorClass::NewOnly:
              out += ", fillcolor=black, fontcolor=white";
              break;
            case ColorClass::Shared: out += ", fillcolor=gray"; break;
          }
        }
      } else {
        std::vector<std::string> key = value.membership;
        std::sort(key.begin(), key.end());
        const std::size_t slot =
            palette.at(key) % (sizeof kPalette / sizeof kPalette[0]);
        out += dot_quote(value.name + "\n" + membership_label(value));
        out += ", fillcolor=";
        out += kPalette[slot];
      }
      out += "];\n";
    }
  }

  for (std::size_t a = 0; a < frame.attributes.size(); ++a)
    out += "  s -> a" + std::to_string(a) + ";\n";
  for (std::size_t a = 0; a < frame.attributes.size(); ++a)
    for (std::size_t v = 0; v < frame.attributes[a].values.size(); ++v)
      out += "  a" + std::to_string(a) + " -> v" + std::to_string(a) + "_" +
             std::to_string(v) + ";\n";

  if (opts.include_constraints) {
    for (const Constraint& con : frame.constraints) {
      const auto from = value_ids.find(
          {con.antecedent.attribute, con.antecedent.value});
      const auto to = value_ids.find(
          {con.consequent.attribute, con.consequent.value});
      if (from == value_ids.end() || to == value_ids.end())
        throw Error("unknown-value",
                    "constraint in frame '" + frame.name +
                        "' references an undeclared value");
      out += "  " + from->second + " -> " + to->second +
             " [style=dashed, label=" + dot_quote(con.scope) +
             ", constraint=false];\n";
    }
  }
  if (opts.include_links) {
    for (const AttributeLink& link : frame.links) {
      const auto from = attr_ids.find(link.from);
      const auto to = attr_ids.find(link.to);
      if (from == attr_ids.end() || to == attr_ids.end())
        throw Error("unknown-attribute",
                    "link in frame '" + frame.name +
                        "' references an undeclared attribute");
      out += "  " + from->second + " -> " + to->second + " [style=bold";
      if (link.label) out += ", label=" + dot_quote(*link.label);
      out += ", constraint=false];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string emit_table(const Frame& frame, const RenderOptions& opts) {
  std::vector<std::string> columns;
  if (opts.split) {
    validate_split(frame, *opts.split);
    columns = opts.split->old_overlays;
    columns.push_back(opts.split->new_overlay);
  } else {
    columns = frame.overlays;
  }
  if (opts.blank_column && !frame.has_overlay(*opts.blank_column))
    throw Error("unknown-overlay",
                "frame '" + frame.name + "' declares no overlay '" +
                    *opts.blank_column + "'");

  std::string out = "### " + cell_text(frame.name) + "\n\n";
  if (frame.annotation)
    out += "*" + cell_text(*frame.annotation) + "*\n\n";

  out += "| Attribute |";
  for (const std::string& overlay : columns)
    out += " " + cell_text(overlay) + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out += "---|";
  out += "\n";

  for (const Attribute& attr : frame.attributes) {
    out += "| " + cell_text(attr.name) + " |";
    for (const std::string& overlay : columns) {
      if (opts.blank_column && overlay == *opts.blank_column) {
        out += "  |";
        continue;
      }
      std::vector<std::string> names;
      for (const Value& value : attr.values)
        if (value.in_overlay(overlay)) names.push_back(value.name);
      out += " " + cell_text(join(names, ", ")) + " |";
    }
    out += "\n";
  }
  return out;
}

namespace {

json valref_json(const ValueRef& ref) {
  return {{"attribute", ref.attribute}, {"value", ref.value}};
}

json pair_json(const ConstraintPair& pair) {
  return {{"antecedent", valref_json(pair.antecedent)},
          {"consequent", valref_json(pair.consequent)}};
}

json pairs_json(const std::vector<ConstraintPair>& pairs) {
  json out = json::array();
  for (const ConstraintPair& p : pairs) out.push_back(pair_json(p));
  return out;
}

json pattern_json(const FramePattern& report) {
  json j;
  j["report"] = "pattern";
  j["frame"] = report.frame;
  j["old"] = report.split.old_overlays;
  j["new"] = report.split.new_overlay;
  j["dominant"] = to_string(report.dominant);
  j["distribution"] = json::object();
  for (const auto& [verdict, count] : report.distribution)
    j["distribution"][verdict] = count;
  j["attributes"] = json::array();
  for (const AttrComparison& cmp : report.per_attribute) {
    json jc;
    jc["attribute"] = cmp.attribute;
    jc["verdict"] = to_string(cmp.verdict);
    jc["strict"] = cmp.strict;
    jc["old_only"] = cmp.old_only;
    jc["new_only"] = cmp.new_only;
    jc["shared"] = cmp.shared;
    j["attributes"].push_back(std::move(jc));
  }
  j["constraints"] = {{"only_old", pairs_json(report.constraint_delta.only_old)},
                      {"only_new", pairs_json(report.constraint_delta.only_new)},
                      {"shared", pairs_json(report.constraint_delta.shared)}};
  return j;
}

json similarity_json(const SimilarityReport& report) {
  json j;
  j["report"] = "similarity";
  j["overlays"] = report.overlays;
  j["attributes"] = json::array();
  for (const SimilarityEntry& entry : report.per_attribute)
    j["attributes"].push_back({{"attribute", entry.attribute},
                               {"verdict", to_string(entry.verdict)}});
  j["same_count"] = report.same_count;
  j["comparable_count"] = report.comparable_count;
  if (const auto score = report.score()) j["score"] = *score;
  return j;
}

json incomm_json(const IncommensurabilityReport& report, bool root) {
  json j;
  if (root) j["report"] = "incommensurability";
  j["frame_a"] = report.frame_a;
  j["frame_b"] = report.frame_b;
  j["added"] = report.added;
  j["deleted"] = report.deleted;
  j["shared"] = report.shared;
  j["incommensurable"] = report.incommensurable;
  j["children"] = json::object();
  for (const auto& [key, child] : report.children)
    j["children"][key] = incomm_json(child, false);
  if (root) {
    j["warnings"] = json::array();
    for (const Diagnostic& w : report.warnings)
      j["warnings"].push_back(
          {{"severity", w.severity == Severity::Error ? "error" : "warning"},
           {"code", w.code},
           {"message", w.message}});
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_report_json(const FramePattern& report) {
  return dump(pattern_json(report));
}

std::string emit_report_json(const SimilarityReport& report) {
  return dump(similarity_json(report));
}

std::string emit_report_json(const IncommensurabilityReport& report) {
  return dump(incomm_json(report, true));
}

namespace {

std::string verdict_text(const AttrComparison& cmp) {
  std::string out = to_string(cmp.verdict);
  if (cmp.verdict == AttrVerdict::Disjoint && cmp.strict) out += "(strict)";
  std::vector<std::string> parts;
  if (!cmp.old_only.empty())
    parts.push_back("old only: " + join(cmp.old_only, ", "));
  if (!cmp.new_only.empty())
    parts.push_back("new only: " + join(cmp.new_only, ", "));
  if (!cmp.shared.empty())
    parts.push_back("shared: " + join(cmp.shared, ", "));
  if (!parts.empty()) out += " (" + join(parts, "; ") + ")";
  return out;
}

std::string pair_text(const ConstraintPair& pair) {
  return pair.antecedent.attribute + "." + pair.antecedent.value + " => " +
         pair.consequent.attribute + "." + pair.consequent.value;
}

void incomm_text(const IncommensurabilityReport& report, int depth,
                 std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out += pad + "verdict: " +
         (report.incommensurable ? "incommensurable" : "commensurable") + "\n";
  out += pad + "added: " +
         (report.added.empty() ? "(none)" : join(report.added, ", ")) + "\n";
  out += pad + "deleted: " +
         (report.deleted.empty() ? "(none)" : join(report.deleted, ", ")) +
         "\n";
  out += pad + "shared: " +
         (report.shared.empty() ? "(none)" : join(report.shared, ", ")) + "\n";
  for (const auto& [key, child] : report.children) {
    out += pad + key + " (" + child.frame_a + " vs " + child.frame_b + "):\n";
    incomm_text(child, depth + 1, out);
  }
}

}  // namespace

std::string emit_report_text(const FramePattern& report) {
  std::string out = "pattern: " + to_string(report.dominant) + "\n";
  out += "frame: " + report.frame + "\n";
  out += "old: " + join(report.split.old_overlays, ", ") + "\n";
  out += "new: " + report.split.new_overlay + "\n";
  out += "attributes:\n";
  for (const AttrComparison& cmp : report.per_attribute)
    out += "  - " + cmp.attribute + ": " + verdict_text(cmp) + "\n";
  const ConstraintDelta& delta = report.constraint_delta;
  if (!delta.only_old.empty() || !delta.only_new.empty() ||
      !delta.shared.empty()) {
    out += "constraints:\n";
    for (const ConstraintPair& p : delta.only_old)
      out += "  - dropped: " + pair_text(p) + "\n";
    for (const ConstraintPair& p : delta.only_new)
      out += "  - added: " + pair_text(p) + "\n";
    for (const ConstraintPair& p : delta.shared)
      out += "  - kept: " + pair_text(p) + "\n";
  }
  return out;
}

std::string emit_report_text(const SimilarityReport& report) {
  std::string out =
      "similarity of overlays: " + report.overlays[0] + ", " +
      report.overlays[1] + "\n";
  out += "attributes:\n";
  for (const SimilarityEntry& entry : report.per_attribute)
    out += "  - " + entry.attribute + ": " + to_string(entry.verdict) + "\n";
  if (const auto score = report.score())
    out += "score: " + format_score(*score) + " (" +
           std::to_string(report.same_count) + " of " +
           std::to_string(report.comparable_count) + " comparable)\n";
  else
    out += "score: undefined (no attribute relevant on both sides)\n";
  return out;
}

std::string emit_report_text(const IncommensurabilityReport& report) {
  std::string out = "incommensurability: " + report.frame_a + " vs " +
                    report.frame_b + "\n";
  incomm_text(report, 0, out);
  if (!report.warnings.empty()) {
    out += "warnings:\n";
    for (const Diagnostic& w : report.warnings)
      out += "  - " + format_diagnostic(w) + "\n";
  }
  return out;
}

namespace {

AttrVerdict verdict_from_string(const std::string& s,
                                const std::string& path) {
  for (AttrVerdict v :
       {AttrVerdict::Identical, AttrVerdict::Generalized,
        AttrVerdict::Specialized, AttrVerdict::Disjoint,
        AttrVerdict::Recombined, AttrVerdict::IrrelevantBefore,
        AttrVerdict::IrrelevantAfter, AttrVerdict::Mixed})
    if (to_string(v) == s) return v;
  throw Error("bad-report", "unknown verdict '" + s + "' at " + path);
}

PatternKind pattern_from_string(const std::string& s,
                                const std::string& path) {
  for (PatternKind k :
       {PatternKind::CategoricalGeneralization, PatternKind::ValueDisjunction,
        PatternKind::ConstraintChange, PatternKind::Continuity,
        PatternKind::Mixed})
    if (to_string(k) == s) return k;
  throw Error("bad-report", "unknown pattern '" + s + "' at " + path);
}

SimilarityVerdict similarity_from_string(const std::string& s,
                                         const std::string& path) {
  for (SimilarityVerdict v :
       {SimilarityVerdict::Same, SimilarityVerdict::Different,
        SimilarityVerdict::OneSidedIrrelevant})
    if (to_string(v) == s) return v;
  throw Error("bad-report", "unknown verdict '" + s + "' at " + path);
}

void expect_report(const json& j, const char* tag) {
  const std::string kind =
      jsonu::get_string(jsonu::get_field(j, "report", "/"), "/report");
  if (kind != tag)
    throw Error("bad-report", "expected report type '" + std::string(tag) +
                                  "', got '" + kind + "'");
}

ValueRef valref_from(const json& j, const std::string& path) {
  jsonu::check_object(j, path);
  jsonu::check_known(j, {"attribute", "value"}, path);
  return {jsonu::get_string(jsonu::get_field(j, "attribute", path),
                            path + "/attribute"),
          jsonu::get_string(jsonu::get_field(j, "value", path),
                            path + "/value")};
}

std::vector<ConstraintPair> pairs_from(const json& j,
                                       const std::string& path) {
  std::vector<ConstraintPair> out;
  std::size_t i = 0;
  for (const json& jp : jsonu::get_array(j, path)) {
    const std::string ppath = path + "/" + std::to_string(i++);
    jsonu::check_object(jp, ppath);
    jsonu::check_known(jp, {"antecedent", "consequent"}, ppath);
    out.push_back({valref_from(jsonu::get_field(jp, "antecedent", ppath),
                               ppath + "/antecedent"),
                   valref_from(jsonu::get_field(jp, "consequent", ppath),
                               ppath + "/consequent")});
  }
  return out;
}

IncommensurabilityReport incomm_from(const json& j, const std::string& path,
                                     bool root) {
  jsonu::check_object(j, path);
  if (root)
    jsonu::check_known(j,
                       {"report", "frame_a", "frame_b", "added", "deleted",
                        "shared", "incommensurable", "children", "warnings"},
                       path);
  else
    jsonu::check_known(j,
                       {"frame_a", "frame_b", "added", "deleted", "shared",
                        "incommensurable", "children"},
                       path);
  IncommensurabilityReport report;
  report.frame_a = jsonu::get_string(jsonu::get_field(j, "frame_a", path),
                                     path + "/frame_a");
  report.frame_b = jsonu::get_string(jsonu::get_field(j, "frame_b", path),
                                     path + "/frame_b");
  report.added = jsonu::get_strings(jsonu::get_field(j, "added", path),
                                    path + "/added");
  report.deleted = jsonu::get_strings(jsonu::get_field(j, "deleted", path),
                                      path + "/deleted");
  report.shared = jsonu::get_strings(jsonu::get_field(j, "shared", path),
                                     path + "/shared");
  report.incommensurable =
      jsonu::get_bool(jsonu::get_field(j, "incommensurable", path),
                      path + "/incommensurable");
  const json& children = jsonu::get_field(j, "children", path);
  jsonu::check_object(children, path + "/children");
  for (const auto& item : children.items())
    report.children.emplace(
        item.key(),
        incomm_from(item.value(), path + "/children/" + item.key(), false));
  if (root) {
    std::size_t i = 0;
    for (const json& jw : jsonu::get_array(
             jsonu::get_field(j, "warnings", path), path + "/warnings")) {
      const std::string wpath = path + "/warnings/" + std::to_string(i++);
      jsonu::check_object(jw, wpath);
      jsonu::check_known(jw, {"severity", "code", "message"}, wpath);
      Diagnostic d;
      const std::string severity = jsonu::get_string(
          jsonu::get_field(jw, "severity", wpath), wpath + "/severity");
      d.severity =
          severity == "error" ? Severity::Error : Severity::Warning;
      d.code = jsonu::get_string(jsonu::get_field(jw, "code", wpath),
                                 wpath + "/code");
      d.message = jsonu::get_string(jsonu::get_field(jw, "message", wpath),
                                    wpath + "/message");
      report.warnings.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace

FramePattern frame_pattern_from_json(std::string_view text) {
  const json j = jsonu::parse_or_throw(text);
  jsonu::check_object(j, "/");
  expect_report(j, "pattern");
  jsonu::check_known(j,
                     {"report", "frame", "old", "new", "dominant",
                      "distribution", "attributes", "constraints"},
                     "/");
  FramePattern report;
  report.frame =
      jsonu::get_string(jsonu::get_field(j, "frame", "/"), "/frame");
  report.split.old_overlays =
      jsonu::get_strings(jsonu::get_field(j, "old", "/"), "/old");
  report.split.new_overlay =
      jsonu::get_string(jsonu::get_field(j, "new", "/"), "/new");
  report.dominant = pattern_from_string(
      jsonu::get_string(jsonu::get_field(j, "dominant", "/"), "/dominant"),
      "/dominant");
  const json& dist = jsonu::get_field(j, "distribution", "/");
  jsonu::check_object(dist, "/distribution");
  for (const auto& item : dist.items()) {
    verdict_from_string(item.key(), "/distribution");
    report.distribution[item.key()] =
        jsonu::get_int(item.value(), "/distribution/" + item.key());
  }
  std::size_t i = 0;
  for (const json& jc : jsonu::get_array(
           jsonu::get_field(j, "attributes", "/"), "/attributes")) {
    const std::string cpath = "/attributes/" + std::to_string(i++);
    jsonu::check_object(jc, cpath);
    jsonu::check_known(
        jc, {"attribute", "verdict", "strict", "old_only", "new_only",
             "shared"},
        cpath);
    AttrComparison cmp;
    cmp.attribute = jsonu::get_string(
        jsonu::get_field(jc, "attribute", cpath), cpath + "/attribute");
    cmp.verdict = verdict_from_string(
        jsonu::get_string(jsonu::get_field(jc, "verdict", cpath),
                          cpath + "/verdict"),
        cpath + "/verdict");
    cmp.strict = jsonu::get_bool(jsonu::get_field(jc, "strict", cpath),
                                 cpath + "/strict");
    cmp.old_only = jsonu::get_strings(
        jsonu::get_field(jc, "old_only", cpath), cpath + "/old_only");
    cmp.new_only = jsonu::get_strings(
        jsonu::get_field(jc, "new_only", cpath), cpath + "/new_only");
    cmp.shared = jsonu::get_strings(jsonu::get_field(jc, "shared", cpath),
                                    cpath + "/shared");
    report.per_attribute.push_back(std::move(cmp));
  }
  const json& cons = jsonu::get_field(j, "constraints", "/");
  jsonu::check_object(cons, "/constraints");
  jsonu::check_known(cons, {"only_old", "only_new", "shared"},
                     "/constraints");
  report.constraint_delta.only_old =
      pairs_from(jsonu::get_field(cons, "only_old", "/constraints"),
                 "/constraints/only_old");
  report.constraint_delta.only_new =
      pairs_from(jsonu::get_field(cons, "only_new", "/constraints"),
                 "/constraints/only_new");
  report.constraint_delta.shared =
      pairs_from(jsonu::get_field(cons, "shared", "/constraints"),
                 "/constraints/shared");
  return report;
}

SimilarityReport similarity_from_json(std::string_view text) {
  const json j = jsonu::parse_or_throw(text);
  jsonu::check_object(j, "/");
  expect_report(j, "similarity");
  jsonu::check_known(j,
                     {"report", "overlays", "attributes", "same_count",
                      "comparable_count", "score"},
                     "/");
  SimilarityReport report;
  const std::vector<std::string> overlays =
      jsonu::get_strings(jsonu::get_field(j, "overlays", "/"), "/overlays");
  if (overlays.size() != 2)
    throw Error("bad-report", "expected exactly two overlays at /overlays");
  report.overlays = {overlays[0], overlays[1]};
  std::size_t i = 0;
  for (const json& je : jsonu::get_array(
           jsonu::get_field(j, "attributes", "/"), "/attributes")) {
    const std::string epath = "/attributes/" + std::to_string(i++);
    jsonu::check_object(je, epath);
    jsonu::check_known(je, {"attribute", "verdict"}, epath);
    SimilarityEntry entry;
    entry.attribute = jsonu::get_string(
        jsonu::get_field(je, "attribute", epath), epath + "/attribute");
    entry.verdict = similarity_from_string(
        jsonu::get_string(jsonu::get_field(je, "verdict", epath),
                          epath + "/verdict"),
        epath + "/verdict");
    report.per_attribute.push_back(std::move(entry));
  }
  report.same_count = jsonu::get_int(
      jsonu::get_field(j, "same_count", "/"), "/same_count");
  report.comparable_count = jsonu::get_int(
      jsonu::get_field(j, "comparable_count", "/"), "/comparable_count");
  return report;
}

IncommensurabilityReport incommensurability_from_json(std::string_view text) {
  const json j = jsonu::parse_or_throw(text);
  jsonu::check_object(j, "/");
  expect_report(j, "incommensurability");
  return incomm_from(j, "/", true);
}

}  // namespace framekit
