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

#ifndef FRAMEKIT_EMIT_HPP
#define FRAMEKIT_EMIT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "framekit/analysis.hpp"
#include "framekit/model.hpp"

namespace framekit {

// Rendering controls shared by emit_dot and emit_table.
struct RenderOptions {
  // Two-theory view when set; all declared overlays otherwise.
  std::optional<OverlaySplit> split;
  // Table only: leave this overlay's cells empty (worksheet mode). Must be
  // a declared overlay.
  std::optional<std::string> blank_column;
  bool include_constraints = false;
  bool include_links = false;
};

// DOT digraph of one frame: an ellipse for the superordinate concept, a box
// per attribute, a box per value. Under a split, value fills follow
// derive_color (white = old only, black = new only, gray = shared) and
// values outside the split are dashed; without a split each distinct
// membership set gets a palette fill and the set is printed in the label.
// Node and edge order is declaration order, so output is byte-stable.
std::string emit_dot(const Frame& frame, const RenderOptions& opts);

// GitHub-flavored Markdown: a heading, the frame note in italics when
// present, then one table row per attribute with one column per rendered
// overlay. Cells comma-join the activated value names.
std::string emit_table(const Frame& frame, const RenderOptions& opts);

// Stable JSON for each report type (two-space indent, trailing newline)
// and a line-oriented text form. Scores print with two decimals.
std::string emit_report_json(const FramePattern& report);
std::string emit_report_json(const SimilarityReport& report);
std::string emit_report_json(const IncommensurabilityReport& report);
std::string emit_report_text(const FramePattern& report);
std::string emit_report_text(const SimilarityReport& report);
std::string emit_report_text(const IncommensurabilityReport& report);

// Inverses of emit_report_json, for round-trip checks and tooling. Throw
// Error("json-parse" / "missing-field" / "type-mismatch" / "bad-report").
FramePattern frame_pattern_from_json(std::string_view text);
SimilarityReport similarity_from_json(std::string_view text);
IncommensurabilityReport incommensurability_from_json(std::string_view text);

}  // namespace framekit

#endif  // FRAMEKIT_EMIT_HPP
