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

#ifndef SYNG2G_PARAMS_H_
#define SYNG2G_PARAMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "syng2g/autodiff.h"
#include "syng2g/config.h"

namespace syng2g {

// Indices into ModelParams::tensors for one Transformer layer.
struct LayerParams {
  int query_w, query_b, key_w, key_b, value_w, value_b;
  int output_w, output_b, attn_norm_gain, attn_norm_bias;
  int ffn_in_w, ffn_in_b, ffn_out_w, ffn_out_b, ffn_norm_gain, ffn_norm_bias;
  // (2 * num_syn_labels + 1) x head_size table shared by the layer's heads;
  // -1 for variants without relation attention.
  int relation = -1;
};

// Indices of the SRL scorer tensors.
struct HeadParams {
  int span_w, span_b;                       // s -> a
  int arg_hidden_w, arg_hidden_b, arg_out_w, arg_out_b;     // argument score
  int pred_hidden_w, pred_hidden_b, pred_out_w, pred_out_b; // predicate score
  int label_w, label_b, label_norm_gain, label_norm_bias;   // [a; p] -> hidden
  int label_out_w, label_out_b;                             // hidden -> labels
};

// All learned tensors. Roles are referenced by index so the structure stays
// copyable by value.
struct ModelParams {
  std::vector<Parameter> tensors;
  int token_embedding = -1;
  int pos_embedding = -1;
  int position_embedding = -1;
  // (num_syn_labels + 1) x hidden_size, SynEmb only.
  int label_embedding = -1;
  std::vector<LayerParams> layers;
  HeadParams head{};

  Parameter &operator[](int id) { return tensors.at(id); }
  const Parameter &operator[](int id) const { return tensors.at(id); }

  int Find(const std::string &name) const;
  int64_t TotalSize() const;
  void ZeroGrad();
};

// Weight matrices and tables are drawn from a normal truncated at two
// standard deviations; biases start at zero and normalisation gains at one.
ModelParams CreateParams(const ModelConfig &config, uint64_t seed);

struct ParamShape {
  std::string name;
  int rows = 0;
  int cols = 0;
};

// Names and shapes CreateParams would allocate, without allocating.
std::vector<ParamShape> EnumerateParamShapes(const ModelConfig &config);
int64_t CountParams(const ModelConfig &config);

struct AddedParamCount {
  int64_t synemb = 0;
  int64_t syng2g = 0;

  bool operator==(const AddedParamCount &) const = default;
};

// Parameters the syntax-aware variants add on top of the plain encoder:
// (|L_syn| + 1) * d_x for SynEmb and (2 |L_syn| + 1) * m * d for SynG2G.
AddedParamCount CountAddedParams(const ModelConfig &config);
// The same quantities by diffing enumerated tensor sizes of the Plain,
// SynEmb and SynG2G variants.
AddedParamCount EnumerateAddedParams(const ModelConfig &config);

}  // namespace syng2g

#endif  // SYNG2G_PARAMS_H_
