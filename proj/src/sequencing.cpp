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

#include "framekit/sequencing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace framekit {

namespace {

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

}  // namespace

std::string CycleError::describe(const std::vector<std::string>& cycle) {
  std::string out = "frames form a reference cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += " -> ";
    out += cycle[i];
  }
  return out;
}

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("cycle", describe(cycle)), cycle_(std::move(cycle)) {}

DependencyGraph dependency_graph(const Corpus& corpus) {
  DependencyGraph graph;
  for (const Frame& frame : corpus.frames) graph.nodes.push_back(frame.name);
  for (const Frame& frame : corpus.frames) {
    // Collapse parallel references while keeping every witness.
    std::vector<DependencyEdge> local;
    for (const Attribute& attr : frame.attributes)
      for (const Value& value : attr.values)
        for (const std::optional<std::string>* ref :
             {&value.expands, &value.refers}) {
          if (!ref->has_value()) continue;
          const std::string& target = **ref;
          if (target == frame.name || corpus.find(target) == nullptr)
            continue;
          auto it = std::find_if(
              local.begin(), local.end(),
              [&](const DependencyEdge& e) { return e.to == target; });
          if (it == local.end()) {
            local.push_back({frame.name, target, {}});
            it = std::prev(local.end());
          }
          const ValueRef witness{attr.name, value.name};
          if (std::find(it->via.begin(), it->via.end(), witness) ==
              it->via.end())
            it->via.push_back(witness);
        }
    for (DependencyEdge& e : local) graph.edges.push_back(std::move(e));
  }
  return graph;
}

std::vector<std::string> sequence(const Corpus& corpus) {
  const DependencyGraph graph = dependency_graph(corpus);
  const int n = static_cast<int>(graph.nodes.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[graph.nodes[i]] = i;

  // deps[i] = declaration indices frame i depends on; reverse adjacency
  // drives the Kahn wavefront.
  std::vector<std::vector<int>> dependents(n);
  std::vector<int> pending(n, 0);
  for (const DependencyEdge& e : graph.edges) {
    const int from = index.at(e.from);
    const int to = index.at(e.to);
    dependents[to].push_back(from);
    ++pending[from];
  }

  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (pending[i] == 0) ready.insert(i);

  std::vector<std::string> order;
  while (!ready.empty()) {
    const int i = *ready.begin();  // earliest declared wins ties
    ready.erase(ready.begin());
    order.push_back(graph.nodes[i]);
    for (int d : dependents[i])
      if (--pending[d] == 0) ready.insert(d);
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Walk dependency edges among the stuck frames; the first repeat closes
  // the witness cycle. Smallest indices keep the walk deterministic.
  std::vector<std::vector<int>> deps(n);
  for (const DependencyEdge& e : graph.edges) {
    const int from = index.at(e.from);
    const int to = index.at(e.to);
    if (pending[from] > 0 && pending[to] > 0) deps[from].push_back(to);
  }
  for (auto& d : deps) std::sort(d.begin(), d.end());
  int start = 0;
  while (pending[start] == 0) ++start;
  std::vector<int> path;
  std::vector<int> seen_at(n, -1);
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    cur = deps[cur].front();
  }
  std::vector<std::string> cycle;
  for (std::size_t i = seen_at[cur]; i < path.size(); ++i)
    cycle.push_back(graph.nodes[path[i]]);
  cycle.push_back(graph.nodes[cur]);
  throw CycleError(std::move(cycle));
}

bool check_order(const Corpus& corpus,
                 const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!pos.emplace(order[i], i).second)
      throw Error("not-a-permutation",
                  "'" + order[i] + "' appears twice in the order");
  if (pos.size() != corpus.frames.size())
    throw Error("not-a-permutation",
                "order has " + std::to_string(pos.size()) + " names, corpus " +
                    std::to_string(corpus.frames.size()) + " frames");
  for (const Frame& frame : corpus.frames)
    if (pos.find(frame.name) == pos.end())
      throw Error("not-a-permutation",
                  "order is missing frame '" + frame.name + "'");

  for (const DependencyEdge& e : dependency_graph(corpus).edges)
    if (pos.at(e.to) >= pos.at(e.from)) return false;
  return true;
}

std::string graph_dot(const DependencyGraph& graph) {
  std::string out = "digraph dependencies {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const std::string& node : graph.nodes)
    out += "  " + dot_quote(node) + ";\n";
  for (const DependencyEdge& e : graph.edges) {
    std::string label;
    for (std::size_t i = 0; i < e.via.size(); ++i) {
      if (i > 0) label += "\n";
      label += e.via[i].attribute + "." + e.via[i].value;
    }
    out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) + " [label=" +
           dot_quote(label) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace framekit
