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

#include "syng2g/relation_matrix.h"

#include <sstream>

#include "syng2g/types.h"

namespace syng2g {

RelationMatrix::RelationMatrix(int size, int num_labels)
    : ids_(IndexMatrix::Constant(size, size, 2 * num_labels)),
      num_labels_(num_labels) {}

int RelationMatrix::CountRelations() const {
  return static_cast<int>((ids_.array() != none_id()).count());
}

std::string RelationMatrix::ToCsv() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) out << (j ? "," : "") << ids_(i, j);
    out << '\n';
  }
  return out.str();
}

RelationMatrix BuildRelationMatrix(const std::vector<LabeledArc> &arcs,
                                   int size, int num_labels) {
  if (size < 0 || num_labels < 0) throw Error("negative relation matrix shape");
  RelationMatrix m(size, num_labels);
  std::vector<bool> has_head(size, false);
  for (const LabeledArc &arc : arcs) {
    if (arc.head < 0 || arc.head >= size || arc.dependent < 0 ||
        arc.dependent >= size || arc.head == arc.dependent) {
      throw Error("arc " + std::to_string(arc.head) + "->" +
                  std::to_string(arc.dependent) + " outside sequence of size " +
                  std::to_string(size));
    }
    if (arc.label < 0 || arc.label >= num_labels) {
      throw Error("relation label " + std::to_string(arc.label) +
                  " outside [0, " + std::to_string(num_labels) + ")");
    }
    if (has_head[arc.dependent]) {
      throw Error("duplicate arc for dependent " + std::to_string(arc.dependent));
    }
    if (m.ids_(arc.head, arc.dependent) != m.none_id()) {
      throw Error("arcs in both directions between " +
                  std::to_string(arc.head) + " and " +
                  std::to_string(arc.dependent));
    }
    has_head[arc.dependent] = true;
    m.ids_(arc.head, arc.dependent) = arc.label;
    m.ids_(arc.dependent, arc.head) = arc.label + num_labels;
  }
  return m;
}

}  // namespace syng2g
