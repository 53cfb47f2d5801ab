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

#include "syng2g/trainer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

namespace syng2g {

std::vector<std::vector<int>> BucketBatches(
    const std::vector<PreparedExample> &examples, int batch_size) {
  std::vector<int> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return examples[a].aligned.size() < examples[b].aligned.size();
  });
  std::vector<std::vector<int>> batches;
  for (size_t i = 0; i < order.size(); i += batch_size) {
    size_t end = std::min(order.size(), i + batch_size);
    batches.emplace_back(order.begin() + i, order.begin() + end);
  }
  return batches;
}

double ExampleLoss(Model *model, const PreparedExample &example) {
  ad::Tape tape;
  ParamBinder bind(&tape, &model->params());
  ForwardOptions options;
  options.compute_loss = true;
  ForwardResult result = model->Forward(bind, example, options);
  return result.loss.valid() ? result.loss.scalar() : 0.0;
}

std::vector<SrlGraph> PredictAll(Model *model,
                                 const std::vector<PreparedExample> &examples,
                                 PredicateMode mode) {
  std::vector<SrlGraph> out;
  out.reserve(examples.size());
  for (const PreparedExample &ex : examples) out.push_back(model->Predict(ex, mode));
  return out;
}

EvalReport EvaluateModel(Model *model, const std::vector<CorpusRecord> &records,
                         PredicateMode mode, std::vector<SrlGraph> *predictions) {
  std::vector<SrlGraph> preds;
  double recall = 0.0;
  for (const CorpusRecord &r : records) {
    PreparedExample ex = model->Prepare(r);
    ad::Tape tape;
    ParamBinder bind(&tape, &model->params());
    ForwardOptions options;
    options.mode = mode;
    ForwardResult result = model->Forward(bind, ex, options);
    recall += result.gold_recall;
    const ModelConfig &config = model->config();
    auto problems = BuildDecodeProblems(result.candidates, result.scores,
                                        ex.num_words, config.style, mode,
                                        config.predicate_threshold);
    preds.push_back(DecodeSentence(problems, model->vocab().srl_labels, config.style));
  }
  EvalReport report = Evaluate(preds, records, mode);
  report.style = model->config().style;
  if (!records.empty()) report.gold_recall = recall / records.size();
  if (predictions != nullptr) *predictions = std::move(preds);
  return report;
}

TrainState Train(Model *model, const std::vector<CorpusRecord> &train,
                 const TrainOptions &options) {
  if (train.empty()) throw Error("cannot train on an empty corpus");
  const ModelConfig &config = model->config();
  std::vector<PreparedExample> examples;
  examples.reserve(train.size());
  for (const CorpusRecord &r : train) examples.push_back(model->Prepare(r));

  std::vector<std::vector<int>> batches = BucketBatches(examples, config.batch_size);
  BertAdam optimizer(config, static_cast<int64_t>(config.epochs) * batches.size());
  std::mt19937_64 rng(config.seed);

  TrainState state;
  state.seed = config.seed;
  ModelParams best = model->params();
  if (options.log) *options.log << "epoch,step,loss,dev_f1,seconds\n";

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    auto started = std::chrono::steady_clock::now();
    std::shuffle(batches.begin(), batches.end(), rng);
    double epoch_loss = 0.0;
    for (const std::vector<int> &batch : batches) {
      model->params().ZeroGrad();
      for (int idx : batch) {
        ad::Tape tape;
        ParamBinder bind(&tape, &model->params());
        ForwardOptions fwd;
        fwd.training = true;
        fwd.rng = &rng;
        fwd.compute_loss = true;
        ForwardResult result = model->Forward(bind, examples[idx], fwd);
        if (!result.loss.valid()) continue;
        const double loss = result.loss.scalar();
        if (!std::isfinite(loss)) {
          throw Error("non-finite loss at epoch " + std::to_string(epoch) +
                      ", step " + std::to_string(optimizer.steps_taken()) +
                      ", sentence " + std::to_string(idx));
        }
        epoch_loss += loss;
        tape.Backward(result.loss);
      }
      ClipGradNorm(&model->params(), config.max_grad_norm);
      optimizer.Step(&model->params());
    }

    EpochLog log;
    log.epoch = epoch;
    log.step = optimizer.steps_taken();
    log.loss = epoch_loss;
    bool stop = false;
    if (options.dev != nullptr) {
      log.dev_f1 =
          EvaluateModel(model, *options.dev, options.dev_mode).overall.Score().f1;
      if (log.dev_f1 > state.best_dev_f1) {
        state.best_dev_f1 = log.dev_f1;
        state.best_epoch = epoch;
        state.epochs_without_improvement = 0;
        best = model->params();
      } else if (++state.epochs_without_improvement >= config.patience) {
        stop = true;
      }
      if (options.target_f1 && log.dev_f1 >= *options.target_f1) stop = true;
    }
    log.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - started).count();
    state.epoch = epoch;
    state.steps = log.step;
    state.history.push_back(log);
    if (options.log) {
      *options.log << log.epoch << ',' << log.step << ',' << log.loss << ','
                   << log.dev_f1 << ',' << log.seconds << '\n';
    }
    if (options.on_epoch) options.on_epoch(log);
    if (stop) break;
  }
  if (options.dev != nullptr) model->params() = std::move(best);
  return state;
}

}  // namespace syng2g
