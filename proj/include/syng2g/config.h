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

#ifndef SYNG2G_CONFIG_H_
#define SYNG2G_CONFIG_H_

#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "syng2g/types.h"

namespace syng2g {

// Encoder variants. kSynG2G conditions every attention head on the
// dependency graph through query and key interactions, kSynG2GNoKey drops
// the key interaction, kSynEmb adds a label embedding to the input layer and
// kPlain ignores syntax.
enum class Variant { kSynG2G, kSynG2GNoKey, kSynEmb, kPlain };

const char *VariantName(Variant variant);
Variant ParseVariant(const std::string &name);

inline bool UsesRelationAttention(Variant v) {
  return v == Variant::kSynG2G || v == Variant::kSynG2GNoKey;
}

struct ModelConfig {
  Variant variant = Variant::kSynG2G;

  // Encoder shape. hidden_size must equal num_heads * head_size.
  int num_layers = 4;
  int num_heads = 4;
  int hidden_size = 128;
  int ffn_size = 512;
  int max_positions = 512;
  double dropout = 0.1;
  double init_std = 0.02;

  // Vocabulary sizes. num_syn_labels counts every relation label that can
  // appear in the relation matrix, including the subword alignment label.
  int num_subwords = 1;
  int num_pos = 1;
  int num_syn_labels = 1;
  int num_srl_labels = 1;

  // SRL head. `style` selects span- or dependency-based argument candidates.
  SrlStyle style = SrlStyle::kSpan;
  int span_hidden = 512;
  int label_hidden = 250;
  double lambda_verb = 0.6;
  double lambda_span = 0.6;
  int max_spans = 300;
  int max_verbs = 30;
  int max_span_width = 0;  // 0 means the whole sentence.
  // End-to-end decoding drops kept predicates scoring at or below this.
  double predicate_threshold = -std::numeric_limits<double>::infinity();
  // When nonzero, training appends pruned-away gold spans and predicates to
  // the candidate set so every gold tuple contributes to the loss.
  int train_gold_candidates = 1;

  // Optimisation.
  double base_lr = 1.5e-3;
  double encoder_lr = 1e-5;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-5;
  double weight_decay = 0.01;
  double max_grad_norm = 1.0;
  double warmup = 0.001;
  int epochs = 100;
  int batch_size = 8;
  int patience = 20;

  uint64_t seed = 1;

  int head_size() const { return hidden_size / num_heads; }

  // Throws Error on inconsistent or non-positive settings.
  void Validate() const;

  bool operator==(const ModelConfig &) const = default;
};

// Key/value form: one "key = value" per line, '#' starts a comment.
std::map<std::string, std::string> ConfigToMap(const ModelConfig &config);
std::string FormatConfig(const ModelConfig &config);

// Applies the given keys on top of `config`. Unknown keys are rejected.
void ApplyConfigValues(const std::map<std::string, std::string> &values,
                       ModelConfig *config);
std::map<std::string, std::string> ParseConfigText(const std::string &text);
ModelConfig LoadConfigFile(const std::string &path);

}  // namespace syng2g

#endif  // SYNG2G_CONFIG_H_
