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

#include "syng2g/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "syng2g/types.h"

namespace syng2g {
namespace {

struct Field {
  const char *key;
  std::function<std::string(const ModelConfig &)> get;
  std::function<void(const std::string &, ModelConfig *)> set;
};

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
T ParseNumber(const std::string &key, const std::string &text) {
  T value{};
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error("config key '" + key + "': cannot parse '" + text + "'");
  }
  return value;
}

template <typename T>
Field NumberField(const char *key, T ModelConfig::*member) {
  return Field{
      key,
      [member](const ModelConfig &c) {
        if constexpr (std::is_floating_point_v<T>) {
          return FormatDouble(c.*member);
        } else {
          return std::to_string(c.*member);
        }
      },
      [key, member](const std::string &v, ModelConfig *c) {
        c->*member = ParseNumber<T>(key, v);
      }};
}

// Names follow the hyper-parameter table the defaults come from.
const std::vector<Field> &Fields() {
  static const std::vector<Field> fields = {
      {"variant",
       [](const ModelConfig &c) { return std::string(VariantName(c.variant)); },
       [](const std::string &v, ModelConfig *c) {
         c->variant = ParseVariant(v);
       }},
      {"srl_style",
       [](const ModelConfig &c) { return std::string(StyleName(c.style)); },
       [](const std::string &v, ModelConfig *c) { c->style = ParseStyle(v); }},
      NumberField("base_learning_rate", &ModelConfig::base_lr),
      NumberField("encoder_learning_rate", &ModelConfig::encoder_lr),
      NumberField("adam_beta1", &ModelConfig::adam_beta1),
      NumberField("adam_beta2", &ModelConfig::adam_beta2),
      NumberField("adam_epsilon", &ModelConfig::adam_epsilon),
      NumberField("weight_decay", &ModelConfig::weight_decay),
      NumberField("max_grad_norm", &ModelConfig::max_grad_norm),
      NumberField("warm_up", &ModelConfig::warmup),
      NumberField("num_layers", &ModelConfig::num_layers),
      NumberField("num_heads", &ModelConfig::num_heads),
      NumberField("embedding_size", &ModelConfig::hidden_size),
      NumberField("feed_forward_size", &ModelConfig::ffn_size),
      NumberField("max_position_embedding", &ModelConfig::max_positions),
      NumberField("dropout", &ModelConfig::dropout),
      NumberField("init_std", &ModelConfig::init_std),
      NumberField("span_hidden_size", &ModelConfig::span_hidden),
      NumberField("label_hidden_size", &ModelConfig::label_hidden),
      NumberField("lambda_verb", &ModelConfig::lambda_verb),
      NumberField("lambda_span", &ModelConfig::lambda_span),
      NumberField("max_num_span", &ModelConfig::max_spans),
      NumberField("max_num_verb", &ModelConfig::max_verbs),
      NumberField("max_span_width", &ModelConfig::max_span_width),
      NumberField("predicate_threshold", &ModelConfig::predicate_threshold),
      NumberField("train_gold_candidates", &ModelConfig::train_gold_candidates),
      NumberField("epoch", &ModelConfig::epochs),
      NumberField("batch_size", &ModelConfig::batch_size),
      NumberField("patience", &ModelConfig::patience),
      NumberField("seed", &ModelConfig::seed),
      NumberField("num_subwords", &ModelConfig::num_subwords),
      NumberField("num_pos_tags", &ModelConfig::num_pos),
      NumberField("num_syn_labels", &ModelConfig::num_syn_labels),
      NumberField("num_srl_labels", &ModelConfig::num_srl_labels),
  };
  return fields;
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const char *VariantName(Variant variant) {
  switch (variant) {
    case Variant::kSynG2G: return "SynG2G";
    case Variant::kSynG2GNoKey: return "SynG2G-key";
    case Variant::kSynEmb: return "SynEmb";
    case Variant::kPlain: return "Plain";
  }
  return "?";
}

Variant ParseVariant(const std::string &name) {
  if (name == "SynG2G") return Variant::kSynG2G;
  if (name == "SynG2G-key" || name == "SynG2G_NoKey") {
    return Variant::kSynG2GNoKey;
  }
  if (name == "SynEmb") return Variant::kSynEmb;
  if (name == "Plain") return Variant::kPlain;
  throw Error("unknown variant '" + name +
              "' (expected SynG2G, SynG2G-key, SynEmb or Plain)");
}

void ModelConfig::Validate() const {
  auto require = [](bool ok, const std::string &what) {
    if (!ok) throw Error("invalid config: " + what);
  };
  require(num_layers >= 0, "num_layers must be non-negative");
  require(num_heads > 0, "num_heads must be positive");
  require(hidden_size > 0, "embedding_size must be positive");
  require(hidden_size % num_heads == 0,
          "embedding_size must equal num_heads * head size");
  require(hidden_size % 2 == 0, "embedding_size must be even");
  require(ffn_size > 0, "feed_forward_size must be positive");
  require(max_positions > 2, "max_position_embedding too small");
  require(dropout >= 0 && dropout < 1, "dropout must lie in [0, 1)");
  require(num_subwords > 0 && num_pos > 0, "vocabulary sizes must be positive");
  require(num_syn_labels >= 0, "num_syn_labels must be non-negative");
  require(num_srl_labels > 0, "num_srl_labels must include NONE");
  require(span_hidden > 0 && label_hidden > 0, "hidden sizes must be positive");
  require(lambda_verb > 0, "lambda_verb must be positive");
  require(lambda_span > 0, "lambda_span must be positive");
  require(max_spans > 0 && max_verbs > 0, "pruning caps must be positive");
  require(max_span_width >= 0, "max_span_width must be non-negative");
  require(base_lr >= 0 && encoder_lr >= 0, "learning rates must be >= 0");
  require(adam_epsilon > 0, "adam_epsilon must be positive");
  require(warmup >= 0 && warmup <= 1, "warm_up must lie in [0, 1]");
  require(epochs >= 0 && batch_size > 0, "epoch/batch_size invalid");
  require(patience > 0, "patience must be positive");
}

std::map<std::string, std::string> ConfigToMap(const ModelConfig &config) {
  std::map<std::string, std::string> out;
  for (const Field &f : Fields()) out[f.key] = f.get(config);
  return out;
}

std::string FormatConfig(const ModelConfig &config) {
  std::ostringstream out;
  for (const Field &f : Fields()) {
    out << f.key << " = " << f.get(config) << "\n";
  }
  return out.str();
}

void ApplyConfigValues(const std::map<std::string, std::string> &values,
                       ModelConfig *config) {
  for (const auto &[key, value] : values) {
    bool found = false;
    for (const Field &f : Fields()) {
      if (key == f.key) {
        f.set(value, config);
        found = true;
        break;
      }
    }
    if (!found) throw Error("unknown config key '" + key + "'");
  }
}

std::map<std::string, std::string> ParseConfigText(const std::string &text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config", lineno, "expected 'key = value'");
    }
    values[Trim(line.substr(0, eq))] = Trim(line.substr(eq + 1));
  }
  return values;
}

ModelConfig LoadConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ModelConfig config;
  ApplyConfigValues(ParseConfigText(buf.str()), &config);
  return config;
}

}  // namespace syng2g
