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

#ifndef SYNG2G_ENCODER_H_
#define SYNG2G_ENCODER_H_

#include <random>
#include <vector>

#include "syng2g/autodiff.h"
#include "syng2g/config.h"
#include "syng2g/params.h"
#include "syng2g/relation_matrix.h"

namespace syng2g {

// Id-level view of one boundary-augmented sequence.
struct EncoderInput {
  std::vector<int> token_ids;
  std::vector<int> pos_ids;
  std::vector<int> position_ids;
  // Incoming dependency label per token for the SynEmb variant; tokens
  // without a head use num_syn_labels.
  std::vector<int> syn_label_ids;
  RelationMatrix relations;

  int size() const { return static_cast<int>(token_ids.size()); }
};

// Raw scores and softmax weights per layer and head.
struct AttentionTrace {
  std::vector<std::vector<Matrix>> scores;
  std::vector<std::vector<Matrix>> weights;

  // "layer,head,i,j,score,weight" rows.
  std::string ToCsv() const;
};

struct EncodeOptions {
  // Dropout is applied only when training and rng is set.
  bool training = false;
  std::mt19937_64 *rng = nullptr;
  bool record_trace = false;
};

struct EncoderOutput {
  ad::Var input;  // x
  ad::Var z;      // Z, one row per token
  AttentionTrace trace;
};

// Binds parameters to tape leaves, creating each leaf at most once.
class ParamBinder {
 public:
  ParamBinder(ad::Tape *tape, ModelParams *params);
  ad::Var operator()(int id);
  ad::Tape *tape() const { return tape_; }
  ModelParams *params() const { return params_; }

 private:
  ad::Tape *tape_;
  ModelParams *params_;
  std::vector<ad::Var> leaves_;
};

// Attention scores of one head written out term by term:
//   e_ij = [(x_i Wq + R_ij)(x_j Wk + R_ij)^T - R_ij R_ij^T] / sqrt(d)
// with R_ij the relation embedding row selected by relations(i, j).
Matrix AttentionScoresFull(const Matrix &x, const RelationMatrix &relations,
                           const Matrix &query_w, const Matrix &key_w,
                           const Matrix &relation_table);

// The same scores as three matrix products computed side by side:
//   e = [Q K^T + (Q . R) + (R . K)] / sqrt(d).
// SynG2G-key drops the (R . K) term; SynEmb and Plain keep only Q K^T.
Matrix AttentionScoresReformulated(const Matrix &x,
                                   const RelationMatrix &relations,
                                   const Matrix &query_w, const Matrix &key_w,
                                   const Matrix &relation_table,
                                   Variant variant);

// v_i = sum_j alpha_ij x_j Wv.
Matrix AttentionValues(const Matrix &alpha, const Matrix &x,
                       const Matrix &value_w);

// x_i = b_i + f_i + o_i, plus r_i W_emb for SynEmb.
ad::Var EmbedInput(ParamBinder &bind, const ModelConfig &config,
                   const EncoderInput &input);

// Multi-head, post-norm Transformer stack over the embedded input.
EncoderOutput Encode(ParamBinder &bind, const ModelConfig &config,
                     const EncoderInput &input,
                     const EncodeOptions &options = {});

}  // namespace syng2g

#endif  // SYNG2G_ENCODER_H_
