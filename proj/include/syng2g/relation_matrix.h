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

#ifndef SYNG2G_RELATION_MATRIX_H_
#define SYNG2G_RELATION_MATRIX_H_

#include <string>
#include <vector>

#include <Eigen/Core>

namespace syng2g {

// Arc with an integer relation label in [0, num_labels).
struct LabeledArc {
  int head = 0;
  int dependent = 0;
  int label = 0;
};

using IndexMatrix =
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Pairwise relation ids over a sequence. For an arc head -> dependent with
// label l: ids(head, dependent) = l, ids(dependent, head) = l + num_labels.
// Every other entry, the diagonal included, is none_id() = 2 * num_labels.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(int size, int num_labels);

  int size() const { return static_cast<int>(ids_.rows()); }
  int num_labels() const { return num_labels_; }
  int none_id() const { return 2 * num_labels_; }
  // Rows of the relation embedding table this matrix indexes into.
  int table_rows() const { return 2 * num_labels_ + 1; }

  int operator()(int i, int j) const { return ids_(i, j); }
  const IndexMatrix &ids() const { return ids_; }

  int CountRelations() const;
  // Row-per-line CSV of ids.
  std::string ToCsv() const;

 private:
  friend RelationMatrix BuildRelationMatrix(const std::vector<LabeledArc> &,
                                            int, int);
  IndexMatrix ids_;
  int num_labels_ = 0;
};

// Throws Error for out-of-range positions or labels and for a dependent
// that receives more than one arc.
RelationMatrix BuildRelationMatrix(const std::vector<LabeledArc> &arcs,
                                   int size, int num_labels);

}  // namespace syng2g

#endif  // SYNG2G_RELATION_MATRIX_H_
