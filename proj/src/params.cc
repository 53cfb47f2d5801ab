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

#include "syng2g/params.h"

#include <random>

#include "syng2g/types.h"

namespace syng2g {
namespace {

class Initializer {
 public:
  // With `shapes` set, tensors are only described, not allocated.
  Initializer(ModelParams *params, double stddev, uint64_t seed,
              std::vector<ParamShape> *shapes = nullptr)
      : params_(params), stddev_(stddev), rng_(seed), shapes_(shapes) {}

  int Weight(const std::string &name, int rows, int cols, ParamGroup group) {
    if (shapes_ != nullptr) return Describe(name, rows, cols);
    Matrix m(rows, cols);
    std::normal_distribution<double> normal(0.0, stddev_);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      double v;
      do {
        v = normal(rng_);
      } while (std::abs(v) > 2.0 * stddev_);
      m.data()[i] = v;
    }
    return Add(name, std::move(m), group, true);
  }

  int Constant(const std::string &name, int rows, int cols, double value,
               ParamGroup group) {
    if (shapes_ != nullptr) return Describe(name, rows, cols);
    return Add(name, Matrix::Constant(rows, cols, value), group, false);
  }

 private:
  int Add(const std::string &name, Matrix value, ParamGroup group, bool decay) {
    Parameter p;
    p.name = name;
    p.value = std::move(value);
    p.grad = Matrix::Zero(p.value.rows(), p.value.cols());
    p.group = group;
    p.decay = decay;
    params_->tensors.push_back(std::move(p));
    return static_cast<int>(params_->tensors.size()) - 1;
  }

  int Describe(const std::string &name, int rows, int cols) {
    shapes_->push_back({name, rows, cols});
    return static_cast<int>(shapes_->size()) - 1;
  }

  ModelParams *params_;
  double stddev_;
  std::mt19937_64 rng_;
  std::vector<ParamShape> *shapes_;
};

}  // namespace

int ModelParams::Find(const std::string &name) const {
  for (size_t i = 0; i < tensors.size(); ++i) {
    if (tensors[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int64_t ModelParams::TotalSize() const {
  int64_t total = 0;
  for (const Parameter &p : tensors) total += p.size();
  return total;
}

void ModelParams::ZeroGrad() {
  for (Parameter &p : tensors) p.ZeroGrad();
}

namespace {

ModelParams BuildParams(const ModelConfig &config, uint64_t seed,
                        std::vector<ParamShape> *shapes) {
  config.Validate();
  ModelParams params;
  Initializer init(&params, config.init_std, seed, shapes);
  const int dx = config.hidden_size;
  const int d = config.head_size();
  const auto kEnc = ParamGroup::kEncoder;
  const auto kHead = ParamGroup::kHead;

  params.token_embedding = init.Weight("embeddings.token", config.num_subwords, dx, kEnc);
  params.pos_embedding = init.Weight("embeddings.pos", config.num_pos, dx, kHead);
  params.position_embedding =
      init.Weight("embeddings.position", config.max_positions, dx, kEnc);
  if (config.variant == Variant::kSynEmb) {
    params.label_embedding = init.Weight("embeddings.syn_label",
                                         config.num_syn_labels + 1, dx, kHead);
  }

  for (int l = 0; l < config.num_layers; ++l) {
    const std::string prefix = "layer" + std::to_string(l) + ".";
    LayerParams lp;
    lp.query_w = init.Weight(prefix + "query.w", dx, dx, kEnc);
    lp.query_b = init.Constant(prefix + "query.b", 1, dx, 0.0, kEnc);
    lp.key_w = init.Weight(prefix + "key.w", dx, dx, kEnc);
    lp.key_b = init.Constant(prefix + "key.b", 1, dx, 0.0, kEnc);
    lp.value_w = init.Weight(prefix + "value.w", dx, dx, kEnc);
    lp.value_b = init.Constant(prefix + "value.b", 1, dx, 0.0, kEnc);
    lp.output_w = init.Weight(prefix + "attn_out.w", dx, dx, kEnc);
    lp.output_b = init.Constant(prefix + "attn_out.b", 1, dx, 0.0, kEnc);
    lp.attn_norm_gain = init.Constant(prefix + "attn_norm.gain", 1, dx, 1.0, kEnc);
    lp.attn_norm_bias = init.Constant(prefix + "attn_norm.bias", 1, dx, 0.0, kEnc);
    lp.ffn_in_w = init.Weight(prefix + "ffn_in.w", dx, config.ffn_size, kEnc);
    lp.ffn_in_b = init.Constant(prefix + "ffn_in.b", 1, config.ffn_size, 0.0, kEnc);
    lp.ffn_out_w = init.Weight(prefix + "ffn_out.w", config.ffn_size, dx, kEnc);
    lp.ffn_out_b = init.Constant(prefix + "ffn_out.b", 1, dx, 0.0, kEnc);
    lp.ffn_norm_gain = init.Constant(prefix + "ffn_norm.gain", 1, dx, 1.0, kEnc);
    lp.ffn_norm_bias = init.Constant(prefix + "ffn_norm.bias", 1, dx, 0.0, kEnc);
    if (UsesRelationAttention(config.variant)) {
      lp.relation = init.Weight(prefix + "relation",
                                2 * config.num_syn_labels + 1, d, kHead);
    }
    params.layers.push_back(lp);
  }

  const int sh = config.span_hidden;
  const int lh = config.label_hidden;
  HeadParams &h = params.head;
  h.span_w = init.Weight("srl.span.w", dx, sh, kHead);
  h.span_b = init.Constant("srl.span.b", 1, sh, 0.0, kHead);
  h.arg_hidden_w = init.Weight("srl.arg_score.hidden.w", sh, sh, kHead);
  h.arg_hidden_b = init.Constant("srl.arg_score.hidden.b", 1, sh, 0.0, kHead);
  h.arg_out_w = init.Weight("srl.arg_score.out.w", sh, 1, kHead);
  h.arg_out_b = init.Constant("srl.arg_score.out.b", 1, 1, 0.0, kHead);
  h.pred_hidden_w = init.Weight("srl.pred_score.hidden.w", dx, sh, kHead);
  h.pred_hidden_b = init.Constant("srl.pred_score.hidden.b", 1, sh, 0.0, kHead);
  h.pred_out_w = init.Weight("srl.pred_score.out.w", sh, 1, kHead);
  h.pred_out_b = init.Constant("srl.pred_score.out.b", 1, 1, 0.0, kHead);
  h.label_w = init.Weight("srl.label.hidden.w", sh + dx, lh, kHead);
  h.label_b = init.Constant("srl.label.hidden.b", 1, lh, 0.0, kHead);
  h.label_norm_gain = init.Constant("srl.label.norm.gain", 1, lh, 1.0, kHead);
  h.label_norm_bias = init.Constant("srl.label.norm.bias", 1, lh, 0.0, kHead);
  h.label_out_w = init.Weight("srl.label.out.w", lh, config.num_srl_labels, kHead);
  h.label_out_b =
      init.Constant("srl.label.out.b", 1, config.num_srl_labels, 0.0, kHead);
  return params;
}

}  // namespace

ModelParams CreateParams(const ModelConfig &config, uint64_t seed) {
  return BuildParams(config, seed, nullptr);
}

std::vector<ParamShape> EnumerateParamShapes(const ModelConfig &config) {
  std::vector<ParamShape> shapes;
  BuildParams(config, 0, &shapes);
  return shapes;
}

int64_t CountParams(const ModelConfig &config) {
  int64_t total = 0;
  for (const ParamShape &s : EnumerateParamShapes(config)) {
    total += static_cast<int64_t>(s.rows) * s.cols;
  }
  return total;
}

AddedParamCount EnumerateAddedParams(const ModelConfig &config) {
  ModelConfig plain = config, synemb = config, syng2g = config;
  plain.variant = Variant::kPlain;
  synemb.variant = Variant::kSynEmb;
  syng2g.variant = Variant::kSynG2G;
  const int64_t base = CountParams(plain);
  return {CountParams(synemb) - base, CountParams(syng2g) - base};
}

AddedParamCount CountAddedParams(const ModelConfig &config) {
  const int64_t labels = config.num_syn_labels;
  AddedParamCount count;
  count.synemb = (labels + 1) * config.hidden_size;
  count.syng2g = (2 * labels + 1) * config.num_layers * config.head_size();
  return count;
}

}  // namespace syng2g
