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

#include "golden_manifest.hpp"

#include "framekit/analysis.hpp"
#include "framekit/emit.hpp"
#include "framekit/sequencing.hpp"
#include "test_util.hpp"

namespace framekit::testing {

namespace {

// Frames rendered in both plain views, keyed by the golden file stem.
struct FrameEntry {
  const char* stem;
  const char* frame;
};

const FrameEntry kFrames[] = {
    {"earth", "Concept of the Earth"},
    {"generic", "GENERIC CONCEPT"},
    {"birds_ray", "BIRD (Ray)"},
    {"birds_sundevall", "BIRD (Sundevall)"},
    {"system_quantity", "SYSTEM QUANTITY"},
    {"measurement", "MEASUREMENT"},
    {"state", "STATE"},
    {"time_evolution", "TIME EVOLUTION"},
    {"duality", "GENERAL MODEL (duality)"},
    {"interference", "GENERAL MODEL (interference)"},
    {"vector", "VECTOR"},
    {"vector_superposition", "VECTOR SUPERPOSITION"},
    {"operator", "OPERATOR"},
};

const Corpus& fixtures() {
  static const Corpus corpus = load_fixtures(all_fixture_files());
  return corpus;
}

std::vector<GoldenArtifact> build() {
  std::vector<GoldenArtifact> artifacts;
  for (const FrameEntry& entry : kFrames) {
    const std::string frame = entry.frame;
    artifacts.push_back({std::string(entry.stem) + ".dot", [frame] {
                           return emit_dot(fixtures().require(frame), {});
                         }});
    artifacts.push_back({std::string(entry.stem) + ".md", [frame] {
                           return emit_table(fixtures().require(frame), {});
                         }});
  }

  artifacts.push_back({"earth_split.dot", [] {
                         RenderOptions opts;
                         opts.split = OverlaySplit{{"initial"}, "scientific"};
                         return emit_dot(
                             fixtures().require("Concept of the Earth"), opts);
                       }});
  artifacts.push_back({"earth_blank.md", [] {
                         RenderOptions opts;
                         opts.blank_column = "scientific";
                         return emit_table(
                             fixtures().require("Concept of the Earth"), opts);
                       }});
  artifacts.push_back({"duality_split.dot", [] {
                         RenderOptions opts;
                         opts.split =
                             OverlaySplit{{"wave", "particle"}, "quantum"};
                         opts.include_constraints = true;
                         return emit_dot(
                             fixtures().require("GENERAL MODEL (duality)"),
                             opts);
                       }});
  artifacts.push_back({"state_links.dot", [] {
                         RenderOptions opts;
                         opts.include_links = true;
                         return emit_dot(fixtures().require("STATE"), opts);
                       }});
  artifacts.push_back(
      {"generic_split.dot", [] {
         RenderOptions opts;
         opts.split = OverlaySplit{{"classical"}, "quantum"};
         opts.include_constraints = true;
         opts.include_links = true;
         return emit_dot(fixtures().require("GENERIC CONCEPT"), opts);
       }});
  artifacts.push_back({"cmqm_graph.dot", [] {
                         const Corpus corpus = load_fixtures(cmqm_files());
                         return graph_dot(dependency_graph(corpus));
                       }});
  artifacts.push_back(
      {"earth_classify.json", [] {
         const FramePattern pattern =
             classify_frame(fixtures().require("Concept of the Earth"),
                            {{"initial"}, "scientific"});
         return emit_report_json(pattern);
       }});
  return artifacts;
}

}  // namespace

const std::vector<GoldenArtifact>& golden_artifacts() {
  static const std::vector<GoldenArtifact> artifacts = build();
  return artifacts;
}

}  // namespace framekit::testing
