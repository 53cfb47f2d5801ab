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

#include "syng2g/autodiff.h"

#include <cmath>

#include "syng2g/types.h"

namespace syng2g {
namespace ad {
namespace {

void CheckSameTape(Var a, Var b) {
  if (a.tape() != b.tape()) throw Error("autodiff: operands on different tapes");
}

void CheckShape(bool ok, const char *op) {
  if (!ok) throw Error(std::string("autodiff: shape mismatch in ") + op);
}

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

}  // namespace

const Matrix &Var::value() const { return tape_->value(id_); }

Var Tape::Constant(Matrix value) {
  nodes_.push_back({std::move(value), Matrix(), nullptr, nullptr, false});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Var Tape::Leaf(Parameter *param, bool copy_value) {
  nodes_.push_back({copy_value ? param->value : Matrix(), Matrix(), nullptr,
                    copy_value ? param : nullptr, true});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Var Tape::Record(Matrix value, const std::vector<Var> &inputs,
                 BackwardFn backward) {
  bool needs = false;
  for (Var v : inputs) {
    if (v.tape() != this) throw Error("autodiff: input from another tape");
    needs = needs || nodes_[v.id()].requires_grad;
  }
  nodes_.push_back({std::move(value), Matrix(),
                    needs ? std::move(backward) : nullptr, nullptr, needs});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Matrix &Tape::grad(int id) {
  Node &node = nodes_[id];
  if (node.grad.size() == 0 && node.value.size() != 0) {
    node.grad.setZero(node.value.rows(), node.value.cols());
  }
  return node.grad;
}

void Tape::Backward(Var output) {
  if (output.tape() != this) throw Error("autodiff: output from another tape");
  if (output.value().size() != 1) throw Error("autodiff: Backward needs a scalar");
  grad(output.id()).setOnes();
  for (int id = output.id(); id >= 0; --id) {
    Node &node = nodes_[id];
    if (!node.requires_grad || node.grad.size() == 0) continue;
    if (node.backward) node.backward(*this, id);
    if (node.param != nullptr) {
      Parameter *param = node.param;
      if (param->grad.size() == 0) param->ZeroGrad();
      param->grad += node.grad;
    }
  }
}

Var MatMul(Var a, Var b) {
  CheckSameTape(a, b);
  CheckShape(a.cols() == b.rows(), "MatMul");
  int ia = a.id(), ib = b.id();
  return a.tape()->Record(a.value() * b.value(), {a, b}, [ia, ib](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) t.grad(ia).noalias() += g * t.value(ib).transpose();
    if (t.requires_grad(ib)) t.grad(ib).noalias() += t.value(ia).transpose() * g;
  });
}

Var MatMulNT(Var a, Var b) {
  CheckSameTape(a, b);
  CheckShape(a.cols() == b.cols(), "MatMulNT");
  int ia = a.id(), ib = b.id();
  return a.tape()->Record(a.value() * b.value().transpose(), {a, b},
                          [ia, ib](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) t.grad(ia).noalias() += g * t.value(ib);
    if (t.requires_grad(ib)) t.grad(ib).noalias() += g.transpose() * t.value(ia);
  });
}

Var Transpose(Var a) {
  int ia = a.id();
  return a.tape()->Record(a.value().transpose(), {a}, [ia](Tape &t, int self) {
    t.grad(ia) += t.grad(self).transpose();
  });
}

Var Add(Var a, Var b) {
  CheckSameTape(a, b);
  CheckShape(a.rows() == b.rows() && a.cols() == b.cols(), "Add");
  int ia = a.id(), ib = b.id();
  return a.tape()->Record(a.value() + b.value(), {a, b}, [ia, ib](Tape &t, int self) {
    if (t.requires_grad(ia)) t.grad(ia) += t.grad(self);
    if (t.requires_grad(ib)) t.grad(ib) += t.grad(self);
  });
}

Var Sub(Var a, Var b) {
  CheckSameTape(a, b);
  CheckShape(a.rows() == b.rows() && a.cols() == b.cols(), "Sub");
  int ia = a.id(), ib = b.id();
  return a.tape()->Record(a.value() - b.value(), {a, b}, [ia, ib](Tape &t, int self) {
    if (t.requires_grad(ia)) t.grad(ia) += t.grad(self);
    if (t.requires_grad(ib)) t.grad(ib) -= t.grad(self);
  });
}

Var Mul(Var a, Var b) {
  CheckSameTape(a, b);
  CheckShape(a.rows() == b.rows() && a.cols() == b.cols(), "Mul");
  int ia = a.id(), ib = b.id();
  return a.tape()->Record(a.value().cwiseProduct(b.value()), {a, b},
                          [ia, ib](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) t.grad(ia) += g.cwiseProduct(t.value(ib));
    if (t.requires_grad(ib)) t.grad(ib) += g.cwiseProduct(t.value(ia));
  });
}

Var Scale(Var a, double factor) {
  int ia = a.id();
  return a.tape()->Record(a.value() * factor, {a}, [ia, factor](Tape &t, int self) {
    t.grad(ia) += factor * t.grad(self);
  });
}

Var AddRow(Var a, Var row) {
  CheckSameTape(a, row);
  CheckShape(row.rows() == 1 && row.cols() == a.cols(), "AddRow");
  int ia = a.id(), ir = row.id();
  Matrix out = a.value().rowwise() + row.value().row(0);
  return a.tape()->Record(std::move(out), {a, row}, [ia, ir](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) t.grad(ia) += g;
    if (t.requires_grad(ir)) t.grad(ir) += g.colwise().sum();
  });
}

Var MulRow(Var a, Var row) {
  CheckSameTape(a, row);
  CheckShape(row.rows() == 1 && row.cols() == a.cols(), "MulRow");
  int ia = a.id(), ir = row.id();
  Matrix out = a.value().array().rowwise() * row.value().row(0).array();
  return a.tape()->Record(std::move(out), {a, row}, [ia, ir](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) {
      t.grad(ia).array() += g.array().rowwise() * t.value(ir).row(0).array();
    }
    if (t.requires_grad(ir)) {
      t.grad(ir) += g.cwiseProduct(t.value(ia)).colwise().sum();
    }
  });
}

Var AddCol(Var a, Var col) {
  CheckSameTape(a, col);
  CheckShape(col.cols() == 1 && col.rows() == a.rows(), "AddCol");
  int ia = a.id(), ic = col.id();
  Matrix out = a.value().colwise() + col.value().col(0);
  return a.tape()->Record(std::move(out), {a, col}, [ia, ic](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (t.requires_grad(ia)) t.grad(ia) += g;
    if (t.requires_grad(ic)) t.grad(ic) += g.rowwise().sum();
  });
}

Var Relu(Var a) {
  int ia = a.id();
  return a.tape()->Record(a.value().cwiseMax(0.0), {a}, [ia](Tape &t, int self) {
    t.grad(ia).array() +=
        t.grad(self).array() * (t.value(ia).array() > 0.0).cast<double>();
  });
}

Var Gelu(Var a) {
  int ia = a.id();
  Matrix out = a.value().unaryExpr(
      [](double x) { return 0.5 * x * (1.0 + std::erf(x * kInvSqrt2)); });
  return a.tape()->Record(std::move(out), {a}, [ia](Tape &t, int self) {
    Matrix d = t.value(ia).unaryExpr([](double x) {
      return 0.5 * (1.0 + std::erf(x * kInvSqrt2)) +
             x * kInvSqrt2Pi * std::exp(-0.5 * x * x);
    });
    t.grad(ia) += t.grad(self).cwiseProduct(d);
  });
}

Matrix SoftmaxRowsValue(const Matrix &a) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double max = a.row(r).maxCoeff();
    out.row(r) = (a.row(r).array() - max).exp();
    out.row(r) /= out.row(r).sum();
  }
  return out;
}

Var SoftmaxRows(Var a) {
  int ia = a.id();
  return a.tape()->Record(SoftmaxRowsValue(a.value()), {a}, [ia](Tape &t, int self) {
    const Matrix &y = t.value(self);
    const Matrix &g = t.grad(self);
    Vector dot = g.cwiseProduct(y).rowwise().sum();
    t.grad(ia).array() += y.array() * (g.colwise() - dot).array();
  });
}

Matrix NormalizeRowsValue(const Matrix &a, double eps) {
  Matrix out(a.rows(), a.cols());
  const double cols = static_cast<double>(a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double mean = a.row(r).mean();
    double var = (a.row(r).array() - mean).square().sum() / cols;
    out.row(r) = (a.row(r).array() - mean) / std::sqrt(var + eps);
  }
  return out;
}

Var NormalizeRows(Var a, double eps) {
  int ia = a.id();
  return a.tape()->Record(NormalizeRowsValue(a.value(), eps), {a},
                          [ia, eps](Tape &t, int self) {
    const Matrix &x = t.value(ia);
    const Matrix &y = t.value(self);
    const Matrix &g = t.grad(self);
    const double cols = static_cast<double>(x.cols());
    Matrix &gx = t.grad(ia);
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      double mean = x.row(r).mean();
      double var = (x.row(r).array() - mean).square().sum() / cols;
      double inv_std = 1.0 / std::sqrt(var + eps);
      double g_mean = g.row(r).mean();
      double gy_mean = g.row(r).dot(y.row(r)) / cols;
      gx.row(r).array() +=
          inv_std * (g.row(r).array() - g_mean - y.row(r).array() * gy_mean);
    }
  });
}

Var LayerNorm(Var a, Var gain, Var bias, double eps) {
  return AddRow(MulRow(NormalizeRows(a, eps), gain), bias);
}

Var GatherRows(Var a, const std::vector<int> &rows) {
  const Matrix &v = a.value();
  Matrix out(static_cast<Eigen::Index>(rows.size()), v.cols());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 0 || rows[r] >= v.rows()) {
      throw Error("autodiff: GatherRows index " + std::to_string(rows[r]) +
                  " outside table of " + std::to_string(v.rows()) + " rows");
    }
    out.row(r) = v.row(rows[r]);
  }
  int ia = a.id();
  return a.tape()->Record(std::move(out), {a}, [ia, rows](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    Matrix &ga = t.grad(ia);
    for (size_t r = 0; r < rows.size(); ++r) ga.row(rows[r]) += g.row(r);
  });
}

Var Embed(Tape *tape, Parameter *table, const std::vector<int> &rows) {
  const Matrix &v = table->value;
  Matrix out(static_cast<Eigen::Index>(rows.size()), v.cols());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 0 || rows[r] >= v.rows()) {
      throw Error("embedding id " + std::to_string(rows[r]) + " outside table '" +
                  table->name + "' of " + std::to_string(v.rows()) + " rows");
    }
    out.row(r) = v.row(rows[r]);
  }
  Var anchor = tape->Leaf(table, /*copy_value=*/false);
  return tape->Record(std::move(out), {anchor}, [table, rows](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    if (table->grad.size() == 0) table->ZeroGrad();
    for (size_t r = 0; r < rows.size(); ++r) table->grad.row(rows[r]) += g.row(r);
  });
}

Var Select(Var a, const IndexMatrix &index) {
  const Matrix &v = a.value();
  CheckShape(index.rows() == v.rows(), "Select");
  Matrix out(index.rows(), index.cols());
  for (Eigen::Index i = 0; i < index.rows(); ++i) {
    for (Eigen::Index j = 0; j < index.cols(); ++j) {
      int k = index(i, j);
      if (k < 0 || k >= v.cols()) throw Error("autodiff: Select index out of range");
      out(i, j) = v(i, k);
    }
  }
  int ia = a.id();
  return a.tape()->Record(std::move(out), {a}, [ia, index](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    Matrix &ga = t.grad(ia);
    for (Eigen::Index i = 0; i < index.rows(); ++i) {
      for (Eigen::Index j = 0; j < index.cols(); ++j) ga(i, index(i, j)) += g(i, j);
    }
  });
}

Var ConcatCols(const std::vector<Var> &parts) {
  if (parts.empty()) throw Error("autodiff: ConcatCols of nothing");
  Eigen::Index rows = parts[0].rows(), cols = 0;
  for (Var p : parts) {
    CheckSameTape(parts[0], p);
    CheckShape(p.rows() == rows, "ConcatCols");
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::vector<int> ids;
  Eigen::Index offset = 0;
  for (Var p : parts) {
    out.middleCols(offset, p.cols()) = p.value();
    offset += p.cols();
    ids.push_back(p.id());
  }
  return parts[0].tape()->Record(std::move(out), parts, [ids](Tape &t, int self) {
    const Matrix &g = t.grad(self);
    Eigen::Index offset = 0;
    for (int id : ids) {
      Eigen::Index c = t.value(id).cols();
      if (t.requires_grad(id)) t.grad(id) += g.middleCols(offset, c);
      offset += c;
    }
  });
}

Var SliceCols(Var a, int start, int count) {
  CheckShape(start >= 0 && count >= 0 && start + count <= a.cols(), "SliceCols");
  int ia = a.id();
  return a.tape()->Record(a.value().middleCols(start, count), {a},
                          [ia, start, count](Tape &t, int self) {
    t.grad(ia).middleCols(start, count) += t.grad(self);
  });
}

Var Sum(Var a) {
  int ia = a.id();
  Matrix out(1, 1);
  out(0, 0) = a.value().sum();
  return a.tape()->Record(std::move(out), {a}, [ia](Tape &t, int self) {
    t.grad(ia).array() += t.grad(self)(0, 0);
  });
}

Var SoftmaxCrossEntropy(Var logits, const std::vector<int> &targets) {
  const Matrix &z = logits.value();
  CheckShape(static_cast<Eigen::Index>(targets.size()) == z.rows(),
             "SoftmaxCrossEntropy");
  Matrix probs = SoftmaxRowsValue(z);
  double loss = 0.0;
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    int target = targets[r];
    if (target < 0 || target >= z.cols()) throw Error("autodiff: bad target");
    double max = z.row(r).maxCoeff();
    double lse = max + std::log((z.row(r).array() - max).exp().sum());
    loss += lse - z(r, target);
  }
  Matrix out(1, 1);
  out(0, 0) = loss;
  int il = logits.id();
  return logits.tape()->Record(std::move(out), {logits},
                               [il, targets, probs](Tape &t, int self) {
    Matrix g = probs;
    for (size_t r = 0; r < targets.size(); ++r) g(r, targets[r]) -= 1.0;
    t.grad(il) += t.grad(self)(0, 0) * g;
  });
}

Var Dropout(Var a, double rate, std::mt19937_64 *rng) {
  if (rate <= 0.0 || rng == nullptr) return a;
  std::bernoulli_distribution keep(1.0 - rate);
  Matrix mask(a.rows(), a.cols());
  const double scale = 1.0 / (1.0 - rate);
  for (Eigen::Index i = 0; i < mask.size(); ++i) {
    mask.data()[i] = keep(*rng) ? scale : 0.0;
  }
  return Mul(a, a.tape()->Constant(std::move(mask)));
}

}  // namespace ad
}  // namespace syng2g
