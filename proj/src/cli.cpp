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

#include "framekit/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "framekit/analysis.hpp"
#include "framekit/dsl.hpp"
#include "framekit/emit.hpp"
#include "framekit/model.hpp"
#include "framekit/sequencing.hpp"

namespace framekit {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kCycle = 3;

// ANSI only when stderr is a live terminal and the user has not opted out.
bool color_enabled() {
  if (std::getenv("FRAMEKIT_NO_COLOR") != nullptr) return false;
  return isatty(2) != 0;
}

void print_line(std::ostream& err, bool is_error, const std::string& line) {
  if (!color_enabled()) {
    err << line << "\n";
    return;
  }
  err << (is_error ? "\x1b[31m" : "\x1b[33m") << line << "\x1b[0m\n";
}

void print_diagnostics(std::ostream& err,
                       const std::vector<Diagnostic>& diags) {
  for (const Diagnostic& d : diags)
    print_line(err, d.is_error(), format_diagnostic(d));
}

void print_error(std::ostream& err, const Error& e) {
  print_line(err, true, "error[" + e.code() + "]: " + e.what());
}

// "a,b" and repeated flags both work; empty pieces from stray commas drop.
std::vector<std::string> split_commas(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& arg : args) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = arg.find(',', start);
      const std::string piece = arg.substr(
          start, comma == std::string::npos ? comma : comma - start);
      if (!piece.empty()) out.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

// Parses, merges, and validates the input files. On failure prints every
// diagnostic and returns nullopt. Warnings print but do not fail.
std::optional<Corpus> load_corpus(const std::vector<std::string>& files,
                                  std::ostream& err) {
  std::vector<Diagnostic> diags;
  std::vector<Corpus> parts;
  bool parse_failed = false;
  for (const std::string& file : files) {
    ParseResult result = parse_file(file);
    diags.insert(diags.end(), result.diagnostics.begin(),
                 result.diagnostics.end());
    if (result.ok())
      parts.push_back(std::move(*result.corpus));
    else
      parse_failed = true;
  }
  print_diagnostics(err, diags);
  if (parse_failed) return std::nullopt;

  Corpus corpus;
  try {
    corpus = merge_corpora(parts);
  } catch (const Error& e) {
    print_error(err, e);
    return std::nullopt;
  }

  const std::vector<Diagnostic> checks = validate(corpus);
  print_diagnostics(err, checks);
  if (has_errors(checks)) return std::nullopt;
  return corpus;
}

int write_artifact(const std::string& text,
                   const std::optional<std::string>& out_path,
                   std::ostream& out, std::ostream& err) {
  if (!out_path) {
    out << text;
    return kOk;
  }
  std::ofstream file(*out_path, std::ios::binary);
  file << text;
  if (!file) {
    print_error(err, Error("io-error", "cannot write '" + *out_path + "'"));
    return kFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Author, check, compare, and render dynamic-frame corpora"};
  app.name("framekit");
  app.set_version_flag("--version", "framekit 0.1.0");
  app.require_subcommand(1);

  struct {
    std::vector<std::string> files;
    std::string frame;
    std::vector<std::string> old_overlays;
    std::string new_overlay;
    std::string frame_a;
    std::string frame_b;
    int depth = 8;
    std::vector<std::string> overlays;
    std::optional<std::string> blank;
    std::optional<std::string> out_path;
    bool as_json = false;
    bool graph = false;
    bool constraints = false;
    bool links = false;
  } opt;

  const auto add_files = [&](CLI::App* cmd) {
    cmd->add_option("files", opt.files, ".frame files to load")
        ->required()
        ->check(CLI::ExistingFile);
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check inputs and report diagnostics");
  add_files(validate_cmd);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Label the change pattern of one frame under a split");
  add_files(classify_cmd);
  classify_cmd->add_option("--frame", opt.frame, "frame name")->required();
  classify_cmd
      ->add_option("--old", opt.old_overlays,
                   "old-side overlay(s), comma-separated or repeated")
      ->required();
  classify_cmd->add_option("--new", opt.new_overlay, "new-side overlay")
      ->required();
  classify_cmd->add_flag("--json", opt.as_json, "emit the JSON report");

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Diff the attribute sets of two frames, recursively");
  add_files(compare_cmd);
  compare_cmd->add_option("--a", opt.frame_a, "first frame")->required();
  compare_cmd->add_option("--b", opt.frame_b, "second frame")->required();
  compare_cmd->add_option("--depth", opt.depth,
                          "recursion limit through expanded values");
  compare_cmd->add_flag("--json", opt.as_json, "emit the JSON report");

  CLI::App* similarity_cmd = app.add_subcommand(
      "similarity", "Attribute-wise agreement of two overlays");
  add_files(similarity_cmd);
  similarity_cmd->add_option("--frame", opt.frame, "frame name")->required();
  similarity_cmd
      ->add_option("--overlays", opt.overlays, "the two overlays, as A,B")
      ->required();
  similarity_cmd->add_flag("--json", opt.as_json, "emit the JSON report");

  CLI::App* sequence_cmd = app.add_subcommand(
      "sequence", "Print a presentation order honoring all references");
  add_files(sequence_cmd);
  sequence_cmd->add_flag("--graph", opt.graph,
                         "print the reference graph as DOT instead");

  CLI::App* render_cmd =
      app.add_subcommand("render", "Emit one frame as a DOT diagram");
  add_files(render_cmd);
  render_cmd->add_option("--frame", opt.frame, "frame name")->required();
  render_cmd->add_option("--old", opt.old_overlays,
                         "old-side overlay(s) of a split view");
  render_cmd->add_option("--new", opt.new_overlay,
                         "new-side overlay of a split view");
  render_cmd->add_flag("--constraints", opt.constraints,
                       "include constraint edges");
  render_cmd->add_flag("--links", opt.links, "include attribute links");
  render_cmd->add_option("--out", opt.out_path, "write to a file");

  CLI::App* table_cmd = app.add_subcommand(
      "table", "Emit one frame as a Markdown comparison table");
  add_files(table_cmd);
  table_cmd->add_option("--frame", opt.frame, "frame name")->required();
  table_cmd->add_option("--blank", opt.blank,
                        "leave this overlay's column empty");
  table_cmd->add_option("--out", opt.out_path, "write to a file");

  CLI::App* export_cmd =
      app.add_subcommand("export", "Emit the merged corpus as JSON");
  add_files(export_cmd);
  export_cmd->add_flag("--json", opt.as_json,
                       "accepted for symmetry; export always emits JSON");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::optional<Corpus> corpus = load_corpus(opt.files, err);
  if (!corpus) return kFailure;

  try {
    if (app.got_subcommand(validate_cmd)) {
      return kOk;  // diagnostics already printed, none fatal
    }

    if (app.got_subcommand(classify_cmd)) {
      const Frame& frame = corpus->require(opt.frame);
      OverlaySplit split{split_commas(opt.old_overlays), opt.new_overlay};
      const FramePattern report = classify_frame(frame, split);
      out << (opt.as_json ? emit_report_json(report)
                          : emit_report_text(report));
      return kOk;
    }

    if (app.got_subcommand(compare_cmd)) {
      const IncommensurabilityReport report =
          compare_frames(*corpus, corpus->require(opt.frame_a),
                         corpus->require(opt.frame_b), opt.depth);
      out << (opt.as_json ? emit_report_json(report)
                          : emit_report_text(report));
      return kOk;
    }

    if (app.got_subcommand(similarity_cmd)) {
      const Frame& frame = corpus->require(opt.frame);
      const std::vector<std::string> pair = split_commas(opt.overlays);
      if (pair.size() != 2) {
        print_error(err, Error("usage", "--overlays needs exactly two "
                                        "names, as A,B"));
        return kUsage;
      }
      const SimilarityReport report = similarity(frame, pair[0], pair[1]);
      out << (opt.as_json ? emit_report_json(report)
                          : emit_report_text(report));
      return kOk;
    }

    if (app.got_subcommand(sequence_cmd)) {
      if (opt.graph) {
        out << graph_dot(dependency_graph(*corpus));
        return kOk;
      }
      for (const std::string& name : sequence(*corpus)) out << name << "\n";
      return kOk;
    }

    if (app.got_subcommand(render_cmd)) {
      const Frame& frame = corpus->require(opt.frame);
      RenderOptions render;
      render.include_constraints = opt.constraints;
      render.include_links = opt.links;
      const bool has_old = !opt.old_overlays.empty();
      const bool has_new = !opt.new_overlay.empty();
      if (has_old != has_new) {
        print_error(err,
                    Error("usage", "--old and --new must be given together"));
        return kUsage;
      }
      if (has_old)
        render.split =
            OverlaySplit{split_commas(opt.old_overlays), opt.new_overlay};
      return write_artifact(emit_dot(frame, render), opt.out_path, out, err);
    }

    if (app.got_subcommand(table_cmd)) {
      const Frame& frame = corpus->require(opt.frame);
      RenderOptions render;
      render.blank_column = opt.blank;
      return write_artifact(emit_table(frame, render), opt.out_path, out,
                            err);
    }

    if (app.got_subcommand(export_cmd)) {
      out << export_json(*corpus);
      return kOk;
    }
  } catch (const CycleError& e) {
    print_error(err, e);
    return kCycle;
  } catch (const Error& e) {
    if (e.code() == "cycle-detected") {
      print_error(err, e);
      return kCycle;
    }
    print_error(err, e);
    return kFailure;
  }
  return kUsage;
}

}  // namespace framekit
