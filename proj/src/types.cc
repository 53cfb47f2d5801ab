// Copyright 2026 The SynG2G Authors.
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

#include "syng2g/types.h"

#include <algorithm>

namespace syng2g {

const char *StyleName(SrlStyle style) {
  return style == SrlStyle::kSpan ? "span" : "dependency";
}

SrlStyle ParseStyle(const std::string &name) {
  if (name == "span") return SrlStyle::kSpan;
  if (name == "dependency" || name == "dep") return SrlStyle::kDependency;
  throw Error("unknown SRL style '" + name + "'");
}

const char *ModeName(PredicateMode mode) {
  return mode == PredicateMode::kEndToEnd ? "end-to-end" : "predefined";
}

PredicateMode ParseMode(const std::string &name) {
  if (name == "end-to-end" || name == "e2e") return PredicateMode::kEndToEnd;
  if (name == "predefined" || name == "pre-defined") {
    return PredicateMode::kPredefined;
  }
  throw Error("unknown predicate mode '" + name + "'");
}

void SrlGraph::Canonicalize() {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

void ValidateSrlGraph(const SrlGraph &graph, int num_words) {
  for (const SrlTuple &t : graph.tuples) {
    auto in_range = [&](int p) { return p >= 1 && p <= num_words; };
    if (!in_range(t.predicate) || !in_range(t.start) || !in_range(t.end)) {
      throw Error("SRL tuple index outside words 1.." +
                  std::to_string(num_words));
    }
    if (t.start > t.end) throw Error("SRL span start after end");
    if (graph.style == SrlStyle::kDependency && t.start != t.end) {
      throw Error("dependency-style SRL argument must be a single token");
    }
  }
}

void ValidateDependencyGraph(const DependencyGraph &graph, int num_words) {
  std::vector<int> heads(num_words + 2, 0);
  for (const Arc &arc : graph.arcs) {
    if (arc.dependent < 1 || arc.dependent > num_words) {
      throw Error("arc dependent " + std::to_string(arc.dependent) +
                  " outside words 1.." + std::to_string(num_words));
    }
    if (arc.head < 0 || arc.head > num_words) {
      throw Error("arc head " + std::to_string(arc.head) +
                  " outside 0.." + std::to_string(num_words));
    }
    if (++heads[arc.dependent] > 1) {
      throw Error("word " + std::to_string(arc.dependent) +
                  " has more than one head");
    }
  }
  for (int w = 1; w <= num_words; ++w) {
    if (heads[w] != 1) {
      throw Error("word " + std::to_string(w) + " has no head");
    }
  }
}

}  // namespace syng2g
