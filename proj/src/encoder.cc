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

#include "syng2g/encoder.h"

#include <cmath>
#include <sstream>

#include "syng2g/types.h"

namespace syng2g {
namespace {

void CheckAttentionShapes(const Matrix &x, const RelationMatrix &relations,
                          const Matrix &query_w, const Matrix &key_w,
                          const Matrix &relation_table, bool needs_relations) {
  bool ok = query_w.rows() == x.cols() && key_w.rows() == x.cols() &&
            query_w.cols() == key_w.cols();
  if (needs_relations) {
    ok = ok && relations.size() == x.rows() &&
         relation_table.rows() == relations.table_rows() &&
         relation_table.cols() == query_w.cols();
  }
  if (!ok) throw Error("attention: shape mismatch");
}

}  // namespace

std::string AttentionTrace::ToCsv() const {
  std::ostringstream out;
  out << "layer,head,i,j,score,weight\n";
  out.precision(17);
  for (size_t l = 0; l < scores.size(); ++l) {
    for (size_t h = 0; h < scores[l].size(); ++h) {
      const Matrix &e = scores[l][h];
      const Matrix &a = weights[l][h];
      for (Eigen::Index i = 0; i < e.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
          out << l << ',' << h << ',' << i << ',' << j << ',' << e(i, j) << ','
              << a(i, j) << '\n';
        }
      }
    }
  }
  return out.str();
}

ParamBinder::ParamBinder(ad::Tape *tape, ModelParams *params)
    : tape_(tape), params_(params), leaves_(params->tensors.size()) {}

ad::Var ParamBinder::operator()(int id) {
  if (id < 0 || id >= static_cast<int>(leaves_.size())) {
    throw Error("parameter index " + std::to_string(id) + " not bound");
  }
  if (!leaves_[id].valid()) leaves_[id] = tape_->Leaf(&(*params_)[id]);
  return leaves_[id];
}

Matrix AttentionScoresFull(const Matrix &x, const RelationMatrix &relations,
                           const Matrix &query_w, const Matrix &key_w,
                           const Matrix &relation_table) {
  CheckAttentionShapes(x, relations, query_w, key_w, relation_table, true);
  const Eigen::Index n = x.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(query_w.cols()));
  Matrix e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::RowVectorXd r = relation_table.row(relations(i, j));
      Eigen::RowVectorXd q = x.row(i) * query_w + r;
      Eigen::RowVectorXd k = x.row(j) * key_w + r;
      e(i, j) = scale * (q.dot(k) - r.dot(r));
    }
  }
  return e;
}

Matrix AttentionScoresReformulated(const Matrix &x,
                                   const RelationMatrix &relations,
                                   const Matrix &query_w, const Matrix &key_w,
                                   const Matrix &relation_table,
                                   Variant variant) {
  const bool relational = UsesRelationAttention(variant);
  CheckAttentionShapes(x, relations, query_w, key_w, relation_table, relational);
  const Eigen::Index n = x.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(query_w.cols()));
  Matrix q = x * query_w;
  Matrix k = x * key_w;
  Matrix e = q * k.transpose();
  if (relational) {
    Matrix qr = q * relation_table.transpose();  // n x table_rows
    Matrix kr = k * relation_table.transpose();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        e(i, j) += qr(i, relations(i, j));
        if (variant == Variant::kSynG2G) e(i, j) += kr(j, relations(i, j));
      }
    }
  }
  return scale * e;
}

Matrix AttentionValues(const Matrix &alpha, const Matrix &x,
                       const Matrix &value_w) {
  if (alpha.cols() != x.rows() || value_w.rows() != x.cols()) {
    throw Error("attention values: shape mismatch");
  }
  return alpha * (x * value_w);
}

ad::Var EmbedInput(ParamBinder &bind, const ModelConfig &config,
                   const EncoderInput &input) {
  const size_t n = input.token_ids.size();
  if (input.pos_ids.size() != n || input.position_ids.size() != n) {
    throw Error("embed: token, PoS and position ids differ in length");
  }
  ModelParams &params = *bind.params();
  ad::Tape *tape = bind.tape();
  ad::Var x = ad::Add(
      ad::Embed(tape, &params[params.token_embedding], input.token_ids),
      ad::Embed(tape, &params[params.pos_embedding], input.pos_ids));
  x = ad::Add(x, ad::Embed(tape, &params[params.position_embedding],
                           input.position_ids));
  if (config.variant == Variant::kSynEmb) {
    if (input.syn_label_ids.size() != n) {
      throw Error("embed: SynEmb needs one dependency label per token");
    }
    x = ad::Add(x, ad::Embed(tape, &params[params.label_embedding],
                             input.syn_label_ids));
  }
  return x;
}

EncoderOutput Encode(ParamBinder &bind, const ModelConfig &config,
                     const EncoderInput &input, const EncodeOptions &options) {
  const bool relational = UsesRelationAttention(config.variant);
  if (relational && (input.relations.size() != input.size() ||
                     input.relations.num_labels() != config.num_syn_labels)) {
    throw Error("encode: relation matrix does not match input/config");
  }
  ModelParams &params = *bind.params();
  std::mt19937_64 *rng = options.training ? options.rng : nullptr;
  const double dropout = config.dropout;
  const int d = config.head_size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  EncoderOutput out;
  out.input = EmbedInput(bind, config, input);
  ad::Var h = ad::Dropout(out.input, dropout, rng);

  IndexMatrix relations_t;
  if (relational) relations_t = input.relations.ids().transpose();

  for (int l = 0; l < config.num_layers; ++l) {
    const LayerParams &lp = params.layers[l];
    ad::Var q = ad::AddRow(ad::MatMul(h, bind(lp.query_w)), bind(lp.query_b));
    ad::Var k = ad::AddRow(ad::MatMul(h, bind(lp.key_w)), bind(lp.key_b));
    ad::Var v = ad::AddRow(ad::MatMul(h, bind(lp.value_w)), bind(lp.value_b));
    ad::Var table;
    if (relational) table = bind(lp.relation);

    if (options.record_trace) {
      out.trace.scores.emplace_back();
      out.trace.weights.emplace_back();
    }
    std::vector<ad::Var> heads;
    for (int hd = 0; hd < config.num_heads; ++hd) {
      ad::Var qh = ad::SliceCols(q, hd * d, d);
      ad::Var kh = ad::SliceCols(k, hd * d, d);
      ad::Var vh = ad::SliceCols(v, hd * d, d);
      ad::Var e = ad::MatMulNT(qh, kh);
      if (relational) {
        // x_i Wq (r_ij Wr)^T
        e = ad::Add(e, ad::Select(ad::MatMulNT(qh, table), input.relations.ids()));
        if (config.variant == Variant::kSynG2G) {
          // r_ij Wr (x_j Wk)^T
          e = ad::Add(e, ad::Transpose(ad::Select(ad::MatMulNT(kh, table),
                                                  relations_t)));
        }
      }
      e = ad::Scale(e, scale);
      ad::Var alpha = ad::SoftmaxRows(e);
      if (options.record_trace) {
        out.trace.scores.back().push_back(e.value());
        out.trace.weights.back().push_back(alpha.value());
      }
      heads.push_back(ad::MatMul(ad::Dropout(alpha, dropout, rng), vh));
    }
    ad::Var attn = ad::AddRow(ad::MatMul(ad::ConcatCols(heads), bind(lp.output_w)),
                              bind(lp.output_b));
    h = ad::LayerNorm(ad::Add(h, ad::Dropout(attn, dropout, rng)),
                      bind(lp.attn_norm_gain), bind(lp.attn_norm_bias));
    ad::Var ffn = ad::Gelu(
        ad::AddRow(ad::MatMul(h, bind(lp.ffn_in_w)), bind(lp.ffn_in_b)));
    ffn = ad::AddRow(ad::MatMul(ffn, bind(lp.ffn_out_w)), bind(lp.ffn_out_b));
    h = ad::LayerNorm(ad::Add(h, ad::Dropout(ffn, dropout, rng)),
                      bind(lp.ffn_norm_gain), bind(lp.ffn_norm_bias));
    if (!h.value().allFinite()) {
      throw Error("encode: non-finite activations after layer " +
                  std::to_string(l));
    }
  }
  out.z = h;
  return out;
}

}  // namespace syng2g
