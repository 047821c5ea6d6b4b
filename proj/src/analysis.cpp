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

#include "framekit/analysis.hpp"

#include <algorithm>
#include <set>

namespace framekit {

std::string to_string(AttrVerdict v) {
  switch (v) {
    case AttrVerdict::Identical: return "identical";
    case AttrVerdict::Generalized: return "generalized";
    case AttrVerdict::Specialized: return "specialized";
    case AttrVerdict::Disjoint: return "disjoint";
    case AttrVerdict::Recombined: return "recombined";
    case AttrVerdict::IrrelevantBefore: return "irrelevant_before";
    case AttrVerdict::IrrelevantAfter: return "irrelevant_after";
    case AttrVerdict::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::CategoricalGeneralization:
      return "categorical_generalization";
    case PatternKind::ValueDisjunction: return "value_disjunction";
    case PatternKind::ConstraintChange: return "constraint_change";
    case PatternKind::Continuity: return "continuity";
    case PatternKind::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(SimilarityVerdict v) {
  switch (v) {
    case SimilarityVerdict::Same: return "same";
    case SimilarityVerdict::Different: return "different";
    case SimilarityVerdict::OneSidedIrrelevant: return "one_sided_irrelevant";
  }
  return "?";
}

bool operator==(const FramePattern& a, const FramePattern& b) {
  return a.frame == b.frame &&
         a.split.old_overlays == b.split.old_overlays &&
         a.split.new_overlay == b.split.new_overlay &&
         a.per_attribute == b.per_attribute &&
         a.distribution == b.distribution && a.dominant == b.dominant &&
         a.constraint_delta == b.constraint_delta;
}

bool operator==(const IncommensurabilityReport& a,
                const IncommensurabilityReport& b) {
  if (!(a.frame_a == b.frame_a && a.frame_b == b.frame_b &&
        a.added == b.added && a.deleted == b.deleted &&
        a.shared == b.shared && a.incommensurable == b.incommensurable &&
        a.warnings.size() == b.warnings.size()))
    return false;
  for (std::size_t i = 0; i < a.warnings.size(); ++i) {
    const Diagnostic &wa = a.warnings[i], &wb = b.warnings[i];
    if (wa.severity != wb.severity || wa.code != wb.code ||
        wa.message != wb.message)
      return false;
  }
  return a.children == b.children;
}

std::optional<double> SimilarityReport::score() const {
  if (comparable_count == 0) return std::nullopt;
  return static_cast<double>(same_count) / comparable_count;
}

namespace {

const Attribute& require_attribute(const Frame& frame,
                                   std::string_view name) {
  if (const Attribute* a = frame.find_attribute(name)) return *a;
  throw Error("unknown-attribute", "no attribute '" + std::string(name) +
                                       "' in frame '" + frame.name + "'");
}

void require_overlay(const Frame& frame, std::string_view overlay) {
  if (!frame.has_overlay(overlay))
    throw Error("unknown-overlay", "frame '" + frame.name +
                                       "' declares no overlay '" +
                                       std::string(overlay) + "'");
}

// Value names of `attr` activated by `overlay`, in declaration order.
std::vector<std::string> activated_names(const Attribute& attr,
                                         std::string_view overlay) {
  std::vector<std::string> out;
  for (const Value& v : attr.values)
    if (v.in_overlay(overlay)) out.push_back(v.name);
  return out;
}

bool contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

// New activation drawn from >= 2 distinct old overlays, with no single old
// overlay covering all of it. Checked only when B is a subset of A, after
// Identical: a set equal on both sides reads as unchanged, not recombined.
bool is_recombination(const Attribute& attr,
                      const std::vector<std::string>& new_side,
                      const OverlaySplit& split) {
  int touched = 0;
  bool covered = false;
  for (const std::string& o : split.old_overlays) {
    const std::vector<std::string> act = activated_names(attr, o);
    bool any = false, all = true;
    for (const std::string& n : new_side) {
      if (contains(act, n))
        any = true;
      else
        all = false;
    }
    if (any) ++touched;
    if (all) covered = true;
  }
  return touched >= 2 && !covered;
}

}  // namespace

AttrComparison classify_attribute(const Frame& frame,
                                  std::string_view attribute,
                                  const OverlaySplit& split) {
  validate_split(frame, split);
  const Attribute& attr = require_attribute(frame, attribute);

  AttrComparison cmp;
  cmp.attribute = attr.name;

  // Old side is the union over the old overlays; per-value bookkeeping of
  // which old overlays contributed feeds the Recombined test.
  std::vector<std::string> old_side;  // declaration order, deduplicated
  std::vector<std::string> new_side;
  for (const Value& v : attr.values) {
    bool in_old = false;
    for (const std::string& o : split.old_overlays)
      if (v.in_overlay(o)) in_old = true;
    if (in_old) old_side.push_back(v.name);
    if (v.in_overlay(split.new_overlay)) new_side.push_back(v.name);
  }

  for (const Value& v : attr.values) {
    const bool a = contains(old_side, v.name);
    const bool b = contains(new_side, v.name);
    if (a && b)
      cmp.shared.push_back(v.name);
    else if (a)
      cmp.old_only.push_back(v.name);
    else if (b)
      cmp.new_only.push_back(v.name);
  }

  const bool a_empty = old_side.empty();
  const bool b_empty = new_side.empty();
  const bool equal = cmp.old_only.empty() && cmp.new_only.empty();
  const bool a_sub_b = cmp.old_only.empty();  // A subset of B
  const bool b_sub_a = cmp.new_only.empty();

  if (a_empty && b_empty) {
    cmp.verdict = AttrVerdict::Mixed;
  } else if (a_empty) {
    cmp.verdict = AttrVerdict::IrrelevantBefore;
  } else if (b_empty) {
    cmp.verdict = AttrVerdict::IrrelevantAfter;
  } else if (cmp.shared.empty()) {
    cmp.verdict = AttrVerdict::Disjoint;
    cmp.strict = old_side.size() == 1 && new_side.size() == 1;
  } else if (equal) {
    cmp.verdict = AttrVerdict::Identical;
  } else if (b_sub_a && is_recombination(attr, new_side, split)) {
    cmp.verdict = AttrVerdict::Recombined;
  } else if (a_sub_b) {
    cmp.verdict = AttrVerdict::Generalized;
  } else if (b_sub_a) {
    cmp.verdict = AttrVerdict::Specialized;
  } else {
    cmp.verdict = AttrVerdict::Mixed;
  }
  return cmp;
}

FramePattern classify_frame(const Frame& frame, const OverlaySplit& split) {
  validate_split(frame, split);

  FramePattern pattern;
  pattern.frame = frame.name;
  pattern.split = split;
  pattern.constraint_delta = detect_constraint_change(frame, split);

  bool all_generalizing = true;  // Identical / Generalized / IrrelevantBefore
  bool any_non_identical = false;
  bool all_identical_or_recombined = true;
  int disjoint = 0, identical = 0;
  for (const Attribute& attr : frame.attributes) {
    AttrComparison cmp = classify_attribute(frame, attr.name, split);
    pattern.distribution[to_string(cmp.verdict)]++;
    switch (cmp.verdict) {
      case AttrVerdict::Identical:
        ++identical;
        break;
      case AttrVerdict::Generalized:
      case AttrVerdict::IrrelevantBefore:
        any_non_identical = true;
        all_identical_or_recombined = false;
        break;
      case AttrVerdict::Disjoint:
        ++disjoint;
        [[fallthrough]];
      default:
        any_non_identical = true;
        all_generalizing = false;
        all_identical_or_recombined =
            all_identical_or_recombined &&
            cmp.verdict == AttrVerdict::Recombined;
        break;
    }
    pattern.per_attribute.push_back(std::move(cmp));
  }

  const int total = static_cast<int>(frame.attributes.size());
  if (total > 0 && all_generalizing && any_non_identical)
    pattern.dominant = PatternKind::CategoricalGeneralization;
  else if (pattern.constraint_delta.changed() && total > 0 &&
           all_identical_or_recombined)
    pattern.dominant = PatternKind::ConstraintChange;
  else if (2 * disjoint > total)
    pattern.dominant = PatternKind::ValueDisjunction;
  else if (total > 0 && identical == total)
    pattern.dominant = PatternKind::Continuity;
  else
    pattern.dominant = PatternKind::Mixed;
  return pattern;
}

bool subset_check(const Frame& frame, std::string_view inner,
                  std::string_view outer) {
  require_overlay(frame, inner);
  require_overlay(frame, outer);
  for (const Attribute& attr : frame.attributes)
    for (const Value& v : attr.values)
      if (v.in_overlay(inner) && !v.in_overlay(outer)) return false;
  return true;
}

ConstraintDelta detect_constraint_change(const Frame& frame,
                                         const OverlaySplit& split) {
  validate_split(frame, split);

  std::set<ConstraintPair> old_scoped, new_scoped;
  for (const Constraint& c : frame.constraints) {
    const ConstraintPair pair{c.antecedent, c.consequent};
    if (c.scope == split.new_overlay)
      new_scoped.insert(pair);
    else if (contains(split.old_overlays, c.scope))
      old_scoped.insert(pair);
  }

  ConstraintDelta delta;
  for (const ConstraintPair& p : old_scoped)
    (new_scoped.count(p) ? delta.shared : delta.only_old).push_back(p);
  for (const ConstraintPair& p : new_scoped)
    if (!old_scoped.count(p)) delta.only_new.push_back(p);
  return delta;
}

SimilarityReport similarity(const Frame& frame, std::string_view a,
                            std::string_view b) {
  require_overlay(frame, a);
  require_overlay(frame, b);
  if (a == b)
    throw Error("invalid-split",
                "similarity requires two distinct overlays");

  SimilarityReport report;
  report.overlays = {std::string(a), std::string(b)};
  std::sort(report.overlays.begin(), report.overlays.end());
  for (const Attribute& attr : frame.attributes) {
    const std::vector<std::string> va = activated_names(attr, a);
    const std::vector<std::string> vb = activated_names(attr, b);
    SimilarityEntry entry{attr.name, SimilarityVerdict::Different};
    if (va.empty() || vb.empty()) {
      entry.verdict = SimilarityVerdict::OneSidedIrrelevant;
    } else {
      ++report.comparable_count;
      // Declaration order makes the vectors set-comparable directly.
      if (va == vb) {
        entry.verdict = SimilarityVerdict::Same;
        ++report.same_count;
      }
    }
    report.per_attribute.push_back(std::move(entry));
  }
  return report;
}

namespace {

IncommensurabilityReport diff_frames(const Corpus& corpus, const Frame& a,
                                     const Frame& b, int depth_left,
                                     std::vector<std::string>& path_a,
                                     std::vector<std::string>& path_b,
                                     std::vector<Diagnostic>& warnings) {
  if (contains(path_a, a.name))
    throw Error("cycle-detected",
                "expansion chain revisits frame '" + a.name + "'");
  if (contains(path_b, b.name))
    throw Error("cycle-detected",
                "expansion chain revisits frame '" + b.name + "'");
  path_a.push_back(a.name);
  path_b.push_back(b.name);

  IncommensurabilityReport report;
  report.frame_a = a.name;
  report.frame_b = b.name;
  for (const Attribute& attr : a.attributes)
    (b.find_attribute(attr.name) ? report.shared : report.deleted)
        .push_back(attr.name);
  for (const Attribute& attr : b.attributes)
    if (a.find_attribute(attr.name) == nullptr)
      report.added.push_back(attr.name);
  report.incommensurable = !report.added.empty() || !report.deleted.empty();

  // Recurse through values both frames expand, matched by exact
  // (attribute, value) name.
  for (const Attribute& attr_a : a.attributes) {
    const Attribute* attr_b = b.find_attribute(attr_a.name);
    if (attr_b == nullptr) continue;
    for (const Value& va : attr_a.values) {
      if (!va.expands) continue;
      const Value* vb = attr_b->find_value(va.name);
      if (vb == nullptr || !vb->expands) continue;
      if (depth_left == 0) {
        warnings.push_back(
            {Severity::Warning, va.span, "depth-exceeded",
             "recursion limit reached before expanding value '" +
                 attr_a.name + "." + va.name + "'"});
        continue;
      }
      IncommensurabilityReport child = diff_frames(
          corpus, corpus.require(*va.expands), corpus.require(*vb->expands),
          depth_left - 1, path_a, path_b, warnings);
      report.incommensurable |= child.incommensurable;
      report.children.emplace(attr_a.name + "." + va.name, std::move(child));
    }
  }

  path_a.pop_back();
  path_b.pop_back();
  return report;
}

}  // namespace

IncommensurabilityReport compare_frames(const Corpus& corpus, const Frame& a,
                                        const Frame& b, int max_depth) {
  if (max_depth < 0)
    throw Error("invalid-depth", "max_depth must be nonnegative");
  std::vector<std::string> path_a, path_b;
  std::vector<Diagnostic> warnings;
  IncommensurabilityReport report =
      diff_frames(corpus, a, b, max_depth, path_a, path_b, warnings);
  report.warnings = std::move(warnings);
  return report;
}

}  // namespace framekit
