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

#ifndef SYNG2G_MODEL_H_
#define SYNG2G_MODEL_H_

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "syng2g/config.h"
#include "syng2g/decoder.h"
#include "syng2g/encoder.h"
#include "syng2g/params.h"
#include "syng2g/srl_head.h"
#include "syng2g/subword.h"
#include "syng2g/types.h"
#include "syng2g/vocab.h"

namespace syng2g {

// A corpus record converted to encoder ids, built once per sentence.
struct PreparedExample {
  AlignedSentence aligned;
  EncoderInput input;
  int num_words = 0;
  SrlGraph gold;
  std::optional<std::vector<int>> predicates_given;
};

struct ForwardOptions {
  bool training = false;
  std::mt19937_64 *rng = nullptr;
  PredicateMode mode = PredicateMode::kEndToEnd;
  bool compute_loss = false;
};

struct ForwardResult {
  EncoderOutput encoder;
  ad::Var word_z;
  CandidateScores candidate_scores;
  CandidateSet candidates;
  ScoreTensor scores;
  ad::Var loss;  // valid when compute_loss and at least one pair was kept
  double gold_recall = 1.0;
};

// Encoder, scorer and decoder bundled with the vocabulary and tokenizer
// they were trained with.
class Model {
 public:
  // Fresh parameters. config.num_* sizes are overwritten from `vocab`.
  Model(ModelConfig config, Vocabulary vocab, std::string tokenizer_spec);
  Model(ModelConfig config, Vocabulary vocab, std::string tokenizer_spec,
        ModelParams params);

  const ModelConfig &config() const { return config_; }
  const Vocabulary &vocab() const { return vocab_; }
  const std::string &tokenizer_spec() const { return tokenizer_spec_; }
  const Tokenizer &tokenizer() const { return *tokenizer_; }
  ModelParams &params() { return params_; }
  const ModelParams &params() const { return params_; }

  PreparedExample Prepare(const CorpusRecord &record) const;

  // `candidates` overrides pruning, which keeps the computation smooth for
  // finite-difference checks.
  ForwardResult Forward(ParamBinder &bind, const PreparedExample &example,
                        const ForwardOptions &options,
                        const CandidateSet *candidates = nullptr);

  SrlGraph Predict(const PreparedExample &example, PredicateMode mode);

 private:
  ModelConfig config_;
  Vocabulary vocab_;
  std::string tokenizer_spec_;
  std::shared_ptr<const Tokenizer> tokenizer_;
  ModelParams params_;
};

// Overwrites token-embedding rows from a text file of "token v1 ... vd"
// lines whose width matches the model. Returns the number of rows replaced.
int LoadExternalEmbeddings(Model *model, const std::string &path);

// Copies vocabulary-derived sizes into `config`.
void SizeConfigToVocab(const Vocabulary &vocab, ModelConfig *config);

}  // namespace syng2g

#endif  // SYNG2G_MODEL_H_
