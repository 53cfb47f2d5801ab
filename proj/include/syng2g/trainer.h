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

#ifndef SYNG2G_TRAINER_H_
#define SYNG2G_TRAINER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "syng2g/evaluate.h"
#include "syng2g/model.h"
#include "syng2g/optimizer.h"

namespace syng2g {

struct EpochLog {
  int epoch = 0;
  int64_t step = 0;
  double loss = 0.0;
  double dev_f1 = -1.0;  // negative when no dev set was evaluated
  double seconds = 0.0;
};

struct TrainOptions {
  // Early stopping and model selection use F1 on this set.
  const std::vector<CorpusRecord> *dev = nullptr;
  PredicateMode dev_mode = PredicateMode::kEndToEnd;
  // Stop as soon as dev F1 reaches this value.
  std::optional<double> target_f1;
  // Receives "epoch,step,loss,dev_f1,seconds" lines.
  std::ostream *log = nullptr;
  std::function<void(const EpochLog &)> on_epoch;
};

struct TrainState {
  int epoch = 0;
  int64_t steps = 0;
  double best_dev_f1 = -1.0;
  int best_epoch = 0;
  int epochs_without_improvement = 0;
  uint64_t seed = 0;
  std::vector<EpochLog> history;
};

// Sentence indices grouped into batches of similar length; batch order is
// the caller's to shuffle.
std::vector<std::vector<int>> BucketBatches(
    const std::vector<PreparedExample> &examples, int batch_size);

// Mini-batch training with gradient clipping and BertAdam. With a dev set
// the parameters of the best dev epoch are restored at the end. Throws on a
// non-finite loss.
TrainState Train(Model *model, const std::vector<CorpusRecord> &train,
                 const TrainOptions &options = {});

// Summed SRL loss of one example without dropout.
double ExampleLoss(Model *model, const PreparedExample &example);

std::vector<SrlGraph> PredictAll(Model *model,
                                 const std::vector<PreparedExample> &examples,
                                 PredicateMode mode);

// Decodes and scores `records`, including mean gold recall after pruning.
EvalReport EvaluateModel(Model *model, const std::vector<CorpusRecord> &records,
                         PredicateMode mode,
                         std::vector<SrlGraph> *predictions = nullptr);

}  // namespace syng2g

#endif  // SYNG2G_TRAINER_H_
