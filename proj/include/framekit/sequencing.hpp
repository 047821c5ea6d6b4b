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

#ifndef FRAMEKIT_SEQUENCING_HPP
#define FRAMEKIT_SEQUENCING_HPP

#include <string>
#include <vector>

#include "framekit/model.hpp"

namespace framekit {

// One collapsed dependency: `from` mentions `to` through the values in
// `via` (their expands/refers), kept in declaration order.
struct DependencyEdge {
  std::string from;
  std::string to;
  std::vector<ValueRef> via;

  friend bool operator==(const DependencyEdge&, const DependencyEdge&) =
      default;
};

// Frame-level reference graph. Nodes keep corpus order; edges are grouped
// by source frame, then by first witnessing value.
struct DependencyGraph {
  std::vector<std::string> nodes;
  std::vector<DependencyEdge> edges;
};

// Thrown by sequence() when the reference graph has no linear order.
// cycle() lists the witness with its first frame repeated at the end,
// e.g. {A, B, A}.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<std::string>& cycle);
  std::vector<std::string> cycle_;
};

// Collects one edge per (frame, referenced frame) pair from every value's
// expands/refers. References leaving the corpus are ignored; validate()
// reports them.
DependencyGraph dependency_graph(const Corpus& corpus);

// A presentation order in which every frame follows everything it depends
// on. Deterministic: among ready frames the earliest-declared wins. Throws
// CycleError.
std::vector<std::string> sequence(const Corpus& corpus);

// True iff every dependency of order[i] appears at an index before i.
// Throws Error("not-a-permutation") unless `order` is a permutation of the
// corpus frame names.
bool check_order(const Corpus& corpus, const std::vector<std::string>& order);

// DOT digraph of the reference graph; edges labeled with their witnessing
// values.
std::string graph_dot(const DependencyGraph& graph);

}  // namespace framekit

#endif  // FRAMEKIT_SEQUENCING_HPP
