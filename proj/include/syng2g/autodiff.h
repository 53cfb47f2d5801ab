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

#ifndef SYNG2G_AUTODIFF_H_
#define SYNG2G_AUTODIFF_H_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "syng2g/relation_matrix.h"

namespace syng2g {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Optimiser groups: encoder tensors and randomly initialised task tensors
// are trained with different learning rates.
enum class ParamGroup { kEncoder, kHead };

// A named trainable tensor together with its accumulated gradient.
struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;
  ParamGroup group = ParamGroup::kHead;
  bool decay = true;

  int64_t size() const { return value.size(); }
  void ZeroGrad() { grad.setZero(value.rows(), value.cols()); }
};

namespace ad {

class Tape;

// Handle to a node recorded on a Tape.
class Var {
 public:
  Var() = default;
  Var(Tape *tape, int id) : tape_(tape), id_(id) {}

  Tape *tape() const { return tape_; }
  int id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }
  const Matrix &value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  // Shorthand for a 1x1 node.
  double scalar() const { return value()(0, 0); }

 private:
  Tape *tape_ = nullptr;
  int id_ = -1;
};

// Records a computation for reverse-mode differentiation. Nodes are kept in
// creation order, which is a topological order of the computation.
class Tape {
 public:
  using BackwardFn = std::function<void(Tape &tape, int self)>;

  Tape() = default;
  Tape(const Tape &) = delete;
  Tape &operator=(const Tape &) = delete;

  Var Constant(Matrix value);
  // Leaf bound to a parameter; Backward() adds into param->grad. With copy_value = false the node only
  // marks the parameter as trainable and carries no value (see Embed).
  Var Leaf(Parameter *param, bool copy_value = true);
  Var Record(Matrix value, const std::vector<Var> &inputs, BackwardFn backward);

  // Reverse sweep from a 1x1 output.
  void Backward(Var output);

  const Matrix &value(int id) const { return nodes_[id].value; }
  // Gradient buffer of a node, zero-initialised on first access.
  Matrix &grad(int id);
  bool requires_grad(int id) const { return nodes_[id].requires_grad; }
  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    BackwardFn backward;
    Parameter *param = nullptr;
    bool requires_grad = false;
  };
  std::vector<Node> nodes_;
};

Var MatMul(Var a, Var b);
// a * b^T.
Var MatMulNT(Var a, Var b);
Var Transpose(Var a);
Var Add(Var a, Var b);
Var Sub(Var a, Var b);
Var Mul(Var a, Var b);
Var Scale(Var a, double factor);
// Adds a 1 x c row to every row of a.
Var AddRow(Var a, Var row);
// Multiplies every row of a element-wise by a 1 x c row.
Var MulRow(Var a, Var row);
// Adds an r x 1 column to every column of a.
Var AddCol(Var a, Var col);
Var Relu(Var a);
Var Gelu(Var a);
Var SoftmaxRows(Var a);
// Per-row standardisation (x - mean) / sqrt(var + eps), no affine terms.
Var NormalizeRows(Var a, double eps = 1e-12);
// Normalisation followed by a per-column gain and bias.
Var LayerNorm(Var a, Var gain, Var bias, double eps = 1e-12);
Var GatherRows(Var a, const std::vector<int> &rows);
// Row lookup straight from a parameter table, without copying the table
// onto the tape. Gradients are scattered into table->grad.
Var Embed(Tape *tape, Parameter *table, const std::vector<int> &rows);
// out(i, j) = a(i, index(i, j)).
Var Select(Var a, const IndexMatrix &index);
Var ConcatCols(const std::vector<Var> &parts);
Var SliceCols(Var a, int start, int count);
Var Sum(Var a);
// Sum over rows of -log softmax(row)[target].
Var SoftmaxCrossEntropy(Var logits, const std::vector<int> &targets);
// Inverted dropout with keep-probability 1 - rate.
Var Dropout(Var a, double rate, std::mt19937_64 *rng);

// Eigen-level helpers shared with non-differentiable code paths.
Matrix SoftmaxRowsValue(const Matrix &a);
Matrix NormalizeRowsValue(const Matrix &a, double eps = 1e-12);

}  // namespace ad
}  // namespace syng2g

#endif  // SYNG2G_AUTODIFF_H_
