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

#include "syng2g/model.h"

#include <fstream>
#include <set>
#include <sstream>

#include "syng2g/relation_matrix.h"

namespace syng2g {

void SizeConfigToVocab(const Vocabulary &vocab, ModelConfig *config) {
  config->num_subwords = vocab.subwords.size();
  config->num_pos = vocab.pos_tags.size();
  config->num_syn_labels = vocab.num_relation_labels();
  config->num_srl_labels = vocab.srl_labels.size();
}

Model::Model(ModelConfig config, Vocabulary vocab, std::string tokenizer_spec)
    : config_(std::move(config)),
      vocab_(std::move(vocab)),
      tokenizer_spec_(std::move(tokenizer_spec)),
      tokenizer_(MakeTokenizer(tokenizer_spec_)) {
  SizeConfigToVocab(vocab_, &config_);
  params_ = CreateParams(config_, config_.seed);
}

Model::Model(ModelConfig config, Vocabulary vocab, std::string tokenizer_spec,
             ModelParams params)
    : config_(std::move(config)),
      vocab_(std::move(vocab)),
      tokenizer_spec_(std::move(tokenizer_spec)),
      tokenizer_(MakeTokenizer(tokenizer_spec_)),
      params_(std::move(params)) {
  ModelConfig sized = config_;
  SizeConfigToVocab(vocab_, &sized);
  if (!(sized == config_)) {
    throw Error("model config does not match its vocabulary sizes");
  }
  std::vector<ParamShape> shapes = EnumerateParamShapes(config_);
  bool ok = shapes.size() == params_.tensors.size();
  for (size_t i = 0; ok && i < shapes.size(); ++i) {
    const Parameter &p = params_.tensors[i];
    ok = p.name == shapes[i].name && p.value.rows() == shapes[i].rows &&
         p.value.cols() == shapes[i].cols;
  }
  if (!ok) throw Error("model parameters do not match the config");
}

PreparedExample Model::Prepare(const CorpusRecord &record) const {
  PreparedExample ex;
  ex.num_words = record.sentence.num_words();
  if (ex.num_words == 0) throw Error("cannot encode an empty sentence");
  if (static_cast<int>(record.sentence.pos_tags.size()) != ex.num_words) {
    throw Error("sentence has a different number of words and PoS tags");
  }
  ex.aligned = AlignSubwords(record.sentence, record.syn, *tokenizer_);
  ex.gold = record.gold_srl;
  ex.predicates_given = record.predicates_given;

  const int n = ex.aligned.size();
  if (n > config_.max_positions) {
    throw Error("sequence of " + std::to_string(n) +
                " subwords exceeds max_position_embedding " +
                std::to_string(config_.max_positions));
  }
  EncoderInput &in = ex.input;
  const int none_label = vocab_.num_relation_labels();
  in.syn_label_ids.assign(n, none_label);
  std::vector<LabeledArc> arcs;
  for (int i = 0; i < n; ++i) {
    in.token_ids.push_back(
        vocab_.subwords.Lookup(ex.aligned.subwords[i], Vocabulary::kUnknownId));
    in.pos_ids.push_back(
        vocab_.pos_tags.Lookup(ex.aligned.pos_tags[i], Vocabulary::kUnknownId));
    in.position_ids.push_back(i);
  }
  for (const Arc &arc : ex.aligned.graph.arcs) {
    int label = vocab_.RelationLabelId(arc.label);
    if (label < 0) continue;  // unseen label: no relation
    arcs.push_back({arc.head, arc.dependent, label});
    in.syn_label_ids[arc.dependent] = label;
  }
  in.relations = BuildRelationMatrix(arcs, n, vocab_.num_relation_labels());
  return ex;
}

ForwardResult Model::Forward(ParamBinder &bind, const PreparedExample &example,
                             const ForwardOptions &options,
                             const CandidateSet *candidates) {
  ForwardResult out;
  EncodeOptions enc_options;
  enc_options.training = options.training;
  enc_options.rng = options.rng;
  out.encoder = Encode(bind, config_, example.input, enc_options);
  out.word_z = ad::GatherRows(out.encoder.z, example.aligned.word_to_first_subword);
  out.candidate_scores = ScoreCandidates(bind, config_, out.word_z, config_.style);

  if (candidates != nullptr) {
    out.candidates = *candidates;
  } else {
    std::optional<std::vector<int>> given;
    if (options.mode == PredicateMode::kPredefined) {
      if (example.predicates_given) {
        given = example.predicates_given;
      } else {
        std::set<int> preds;
        for (const SrlTuple &t : example.gold.tuples) preds.insert(t.predicate);
        given = std::vector<int>(preds.begin(), preds.end());
      }
    }
    out.candidates =
        PruneCandidates(out.candidate_scores, config_, example.num_words, given);
  }
  out.gold_recall = GoldRecall(out.candidates, example.gold);
  if (candidates == nullptr && options.training && options.compute_loss &&
      config_.train_gold_candidates) {
    AddGoldCandidates(out.candidate_scores, example.gold, &out.candidates);
  }
  out.scores = ScorePairs(bind, out.candidate_scores, out.candidates);
  if (options.compute_loss && out.scores.logits.rows() > 0) {
    out.loss = SrlLoss(out.scores,
                       PairTargets(out.candidates, example.gold, vocab_.srl_labels));
  }
  return out;
}

SrlGraph Model::Predict(const PreparedExample &example, PredicateMode mode) {
  ad::Tape tape;
  ParamBinder bind(&tape, &params_);
  ForwardOptions options;
  options.mode = mode;
  ForwardResult result = Forward(bind, example, options);
  auto problems =
      BuildDecodeProblems(result.candidates, result.scores, example.num_words,
                          config_.style, mode, config_.predicate_threshold);
  return DecodeSentence(problems, vocab_.srl_labels, config_.style);
}

int LoadExternalEmbeddings(Model *model, const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings " + path);
  Parameter &table = model->params()[model->params().token_embedding];
  const int dim = static_cast<int>(table.value.cols());
  int replaced = 0, lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (static_cast<int>(values.size()) != dim) {
      throw ParseError(path, lineno, "expected " + std::to_string(dim) +
                                         " values, found " +
                                         std::to_string(values.size()));
    }
    int id = model->vocab().subwords.Find(token);
    if (id < 0) continue;
    for (int c = 0; c < dim; ++c) table.value(id, c) = values[c];
    ++replaced;
  }
  return replaced;
}

}  // namespace syng2g
