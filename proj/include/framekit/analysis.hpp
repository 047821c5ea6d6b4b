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

#ifndef FRAMEKIT_ANALYSIS_HPP
#define FRAMEKIT_ANALYSIS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framekit/model.hpp"

namespace framekit {

// How one attribute's activated values change from the old overlays
// (taken jointly) to the new one.
enum class AttrVerdict {
  Identical,         // same nonempty value set on both sides
  Generalized,       // old side is a proper subset of the new
  Specialized,       // new side is a proper subset of the old
  Disjoint,          // both sides nonempty, no common value
  Recombined,        // new side re-draws from >= 2 old overlays, covered
                     // by their union but by no single one
  IrrelevantBefore,  // activated only on the new side
  IrrelevantAfter,   // activated only on the old side
  Mixed,             // anything else (partial overlap, both sides empty)
};

std::string to_string(AttrVerdict v);

struct AttrComparison {
  std::string attribute;
  AttrVerdict verdict = AttrVerdict::Mixed;
  bool strict = false;  // for Disjoint: both sides are singletons
  // Partition of the attribute's old/new activation union, in value
  // declaration order.
  std::vector<std::string> old_only;
  std::vector<std::string> new_only;
  std::vector<std::string> shared;

  friend bool operator==(const AttrComparison&, const AttrComparison&) =
      default;
};

// A constraint stripped of its scope, for structural comparison.
struct ConstraintPair {
  ValueRef antecedent;
  ValueRef consequent;

  friend auto operator<=>(const ConstraintPair&, const ConstraintPair&) =
      default;
};

// Partition of old-scoped vs new-scoped constraints by structural identity,
// each side sorted and deduplicated.
struct ConstraintDelta {
  std::vector<ConstraintPair> only_old;
  std::vector<ConstraintPair> only_new;
  std::vector<ConstraintPair> shared;

  bool changed() const { return !only_old.empty() || !only_new.empty(); }

  friend bool operator==(const ConstraintDelta&, const ConstraintDelta&) =
      default;
};

// Frame-level transition pattern.
enum class PatternKind {
  CategoricalGeneralization,
  ValueDisjunction,
  ConstraintChange,
  Continuity,
  Mixed,
};

std::string to_string(PatternKind k);

struct FramePattern {
  std::string frame;
  OverlaySplit split;
  std::vector<AttrComparison> per_attribute;
  std::map<std::string, int> distribution;  // verdict name -> count (nonzero)
  PatternKind dominant = PatternKind::Mixed;
  ConstraintDelta constraint_delta;
};

bool operator==(const FramePattern& a, const FramePattern& b);

enum class SimilarityVerdict {
  Same,                // equal nonempty activated value sets
  Different,           // both sides relevant, different sets
  OneSidedIrrelevant,  // at least one side activates nothing
};

std::string to_string(SimilarityVerdict v);

struct SimilarityEntry {
  std::string attribute;
  SimilarityVerdict verdict = SimilarityVerdict::Different;

  friend bool operator==(const SimilarityEntry&, const SimilarityEntry&) =
      default;
};

// Attribute-wise similarity of two overlays; symmetric in the pair.
struct SimilarityReport {
  std::array<std::string, 2> overlays;  // sorted
  std::vector<SimilarityEntry> per_attribute;
  int same_count = 0;
  int comparable_count = 0;  // attributes relevant on both sides

  // Undefined (nullopt) when no attribute is relevant on both sides.
  std::optional<double> score() const;

  friend bool operator==(const SimilarityReport&, const SimilarityReport&) =
      default;
};

// Attribute-node diff of two frames for the same superordinate concept,
// recursing through values both frames expand.
struct IncommensurabilityReport {
  std::string frame_a;
  std::string frame_b;
  std::vector<std::string> added;    // attributes of b missing from a
  std::vector<std::string> deleted;  // attributes of a missing from b
  std::vector<std::string> shared;
  // Key: "attribute.value" of the expanding value pair.
  std::map<std::string, IncommensurabilityReport> children;
  bool incommensurable = false;
  // Depth-exceeded notices collected from the whole tree (root only).
  std::vector<Diagnostic> warnings;
};

bool operator==(const IncommensurabilityReport& a,
                const IncommensurabilityReport& b);

// Classifies one attribute under a split. Throws Error("unknown-attribute",
// "unknown-overlay", "invalid-split").
AttrComparison classify_attribute(const Frame& frame,
                                  std::string_view attribute,
                                  const OverlaySplit& split);

// Classifies the whole frame: per-attribute breakdown, verdict counts,
// constraint delta, and the dominant pattern.
FramePattern classify_frame(const Frame& frame, const OverlaySplit& split);

// True iff activation(inner) is contained in activation(outer) frame-wide.
bool subset_check(const Frame& frame, std::string_view inner,
                  std::string_view outer);

// Partitions constraints scoped to the split's overlays by structural
// identity of their (attribute, value) endpoints.
ConstraintDelta detect_constraint_change(const Frame& frame,
                                         const OverlaySplit& split);

// Attribute-wise similarity of two distinct overlays of one frame.
SimilarityReport similarity(const Frame& frame, std::string_view a,
                            std::string_view b);

// Diffs two frames' attribute sets, recursing through `expands` pairs up to
// max_depth. Throws Error("cycle-detected") when an expansion chain loops;
// exhausted depth yields a "depth-exceeded" warning on the report.
IncommensurabilityReport compare_frames(const Corpus& corpus, const Frame& a,
                                        const Frame& b, int max_depth);

}  // namespace framekit

#endif  // FRAMEKIT_ANALYSIS_HPP
