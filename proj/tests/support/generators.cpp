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

#include "generators.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace framekit::testing {

namespace {

// rng() % n is not uniform but is deterministic everywhere, which matters
// more here than bias.
int pick(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

bool chance(std::mt19937& rng, int percent) {
  return pick(rng, 1, 100) <= percent;
}

// Base names are unique per call site via the counter; awkward variants
// exercise quoting, escapes, and keyword collisions.
std::string make_name(std::mt19937& rng, const std::string& stem, int n,
                      bool awkward) {
  std::string base = stem + std::to_string(n);
  if (!awkward || !chance(rng, 25)) return base;
  switch (pick(rng, 0, 4)) {
    case 0: return base + " with spaces";
    case 1: return base + "-hy-phen";
    case 2: return "value";  // keyword; printers must quote it
    case 3: return base + " \"quoted\" \\ back";
    default: return base + "\ttab\nline";
  }
}

// A keyword-named sibling can collide with a plain one only through the
// awkward pool; retry until unique within `taken`.
std::string unique_name(std::mt19937& rng, const std::string& stem, int n,
                        bool awkward, std::vector<std::string>& taken) {
  for (;;) {
    std::string name = make_name(rng, stem, n, awkward);
    if (std::find(taken.begin(), taken.end(), name) == taken.end()) {
      taken.push_back(name);
      return name;
    }
    n += 100;
  }
}

std::optional<std::string> maybe_annotation(std::mt19937& rng,
                                            const GenOptions& opts, int n) {
  if (!opts.allow_annotations || !chance(rng, 30)) return std::nullopt;
  return "note " + std::to_string(n) + (chance(rng, 20) ? " \"q\"" : "");
}

Attribute random_attribute(std::mt19937& rng, const GenOptions& opts,
                           const std::vector<std::string>& overlays,
                           const std::string& name, int salt) {
  Attribute attr;
  attr.name = name;
  const bool exclusive = opts.allow_exclusive && chance(rng, 30);
  attr.kind = exclusive ? AttributeKind::Exclusive : AttributeKind::Multi;

  const int k = static_cast<int>(overlays.size());
  int num_values = pick(rng, 1, opts.max_values);
  // An exclusive attribute activates at most one value per overlay, so its
  // memberships partition a subset of the overlays.
  if (exclusive) num_values = std::min(num_values, k);

  std::vector<std::string> taken;
  if (exclusive) {
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    for (int i = k - 1; i > 0; --i)
      std::swap(order[i], order[pick(rng, 0, i)]);
    // First num_values overlays become singleton owners; the rest join a
    // random owner or stay inactive.
    std::vector<std::vector<std::string>> groups(num_values);
    for (int i = 0; i < k; ++i) {
      if (i < num_values)
        groups[i].push_back(overlays[order[i]]);
      else if (chance(rng, 50))
        groups[pick(rng, 0, num_values - 1)].push_back(overlays[order[i]]);
    }
    for (int v = 0; v < num_values; ++v) {
      Value value;
      value.name = unique_name(rng, "v", v, opts.awkward_names, taken);
      value.membership = groups[v];
      value.annotation = maybe_annotation(rng, opts, salt + v);
      attr.values.push_back(std::move(value));
    }
  } else {
    for (int v = 0; v < num_values; ++v) {
      Value value;
      value.name = unique_name(rng, "v", v, opts.awkward_names, taken);
      for (int o = 0; o < k; ++o)
        if (chance(rng, 50)) value.membership.push_back(overlays[o]);
      if (value.membership.empty())
        value.membership.push_back(overlays[pick(rng, 0, k - 1)]);
      value.annotation = maybe_annotation(rng, opts, salt + v);
      attr.values.push_back(std::move(value));
    }
  }
  return attr;
}

}  // namespace

Corpus random_corpus(std::mt19937& rng, const GenOptions& opts) {
  Corpus corpus;
  const int num_frames = pick(rng, 1, opts.max_frames);
  std::vector<std::string> frame_names;
  for (int f = 0; f < num_frames; ++f) {
    Frame frame;
    frame.name = unique_name(rng, "frame_", f, opts.awkward_names, frame_names);
    frame.annotation = maybe_annotation(rng, opts, f);

    const int k = pick(rng, 2, std::max(2, opts.max_overlays));
    std::vector<std::string> overlay_names;
    for (int o = 0; o < k; ++o)
      frame.overlays.push_back(
          unique_name(rng, "o", o, opts.awkward_names, overlay_names));

    const int num_attrs = pick(rng, 1, opts.max_attributes);
    std::vector<std::string> attr_names;
    for (int a = 0; a < num_attrs; ++a) {
      std::string name =
          unique_name(rng, "attr_", a, opts.awkward_names, attr_names);
      frame.attributes.push_back(
          random_attribute(rng, opts, frame.overlays, name, f * 100 + a));
    }

    // expands/refers target earlier frames only: no self loops, no cycles.
    if (opts.allow_references && f > 0) {
      for (Attribute& attr : frame.attributes)
        for (Value& value : attr.values) {
          if (chance(rng, 15))
            value.expands = corpus.frames[pick(rng, 0, f - 1)].name;
          if (chance(rng, 15))
            value.refers = corpus.frames[pick(rng, 0, f - 1)].name;
        }
    }

    if (opts.allow_constraints && frame.attributes.size() >= 2 &&
        chance(rng, 60)) {
      const int n = pick(rng, 1, 3);
      for (int c = 0; c < n; ++c) {
        int ai = pick(rng, 0, num_attrs - 1);
        int bi = pick(rng, 0, num_attrs - 1);
        if (ai == bi) bi = (bi + 1) % num_attrs;
        const Attribute& a = frame.attributes[ai];
        const Attribute& b = frame.attributes[bi];
        Constraint con;
        con.scope = frame.overlays[pick(rng, 0, k - 1)];
        con.antecedent = {
            a.name,
            a.values[pick(rng, 0, static_cast<int>(a.values.size()) - 1)]
                .name};
        con.consequent = {
            b.name,
            b.values[pick(rng, 0, static_cast<int>(b.values.size()) - 1)]
                .name};
        frame.constraints.push_back(std::move(con));
      }
    }

    if (opts.allow_links && frame.attributes.size() >= 2 && chance(rng, 40)) {
      int ai = pick(rng, 0, num_attrs - 1);
      int bi = pick(rng, 0, num_attrs - 1);
      if (ai == bi) bi = (bi + 1) % num_attrs;
      AttributeLink link;
      link.from = frame.attributes[ai].name;
      link.to = frame.attributes[bi].name;
      if (chance(rng, 50)) link.label = "relates " + std::to_string(f);
      frame.links.push_back(std::move(link));
    }

    corpus.frames.push_back(std::move(frame));
  }
  return corpus;
}

Frame membership_frame(int num_overlays,
                       const std::vector<unsigned>& membership_sets) {
  assert(num_overlays >= 2);
  Frame frame;
  frame.name = "F";
  for (int o = 0; o < num_overlays; ++o)
    frame.overlays.push_back("o" + std::to_string(o + 1));
  Attribute attr;
  attr.name = "A";
  for (std::size_t v = 0; v < membership_sets.size(); ++v) {
    assert(membership_sets[v] != 0);
    Value value;
    value.name = "v" + std::to_string(v + 1);
    for (int o = 0; o < num_overlays; ++o)
      if (membership_sets[v] & (1u << o))
        value.membership.push_back(frame.overlays[o]);
    attr.values.push_back(std::move(value));
  }
  frame.attributes.push_back(std::move(attr));
  return frame;
}

void for_each_membership_assignment(
    int num_overlays, int num_values,
    const std::function<void(const Frame&)>& fn) {
  const unsigned per_value = (1u << num_overlays) - 1;  // nonempty masks
  std::vector<unsigned> masks(num_values, 1u);
  for (;;) {
    fn(membership_frame(num_overlays, masks));
    int i = num_values - 1;
    while (i >= 0 && masks[i] == per_value) masks[i--] = 1u;
    if (i < 0) return;
    ++masks[i];
  }
}

std::vector<OverlaySplit> all_splits(int num_overlays) {
  std::vector<std::string> overlays;
  for (int o = 0; o < num_overlays; ++o)
    overlays.push_back("o" + std::to_string(o + 1));
  std::vector<OverlaySplit> splits;
  for (int n = 0; n < num_overlays; ++n) {
    std::vector<std::string> rest;
    for (int o = 0; o < num_overlays; ++o)
      if (o != n) rest.push_back(overlays[o]);
    const unsigned limit = 1u << rest.size();
    for (unsigned mask = 1; mask < limit; ++mask) {
      OverlaySplit split;
      split.new_overlay = overlays[n];
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask & (1u << i)) split.old_overlays.push_back(rest[i]);
      splits.push_back(std::move(split));
    }
  }
  return splits;
}

}  // namespace framekit::testing
