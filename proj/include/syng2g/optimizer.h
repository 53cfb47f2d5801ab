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

#ifndef SYNG2G_OPTIMIZER_H_
#define SYNG2G_OPTIMIZER_H_

#include <cstdint>
#include <vector>

#include "syng2g/config.h"
#include "syng2g/params.h"

namespace syng2g {

// Scales every gradient so the global L2 norm is at most `max_norm`.
// Returns the norm before clipping.
double ClipGradNorm(ModelParams *params, double max_norm);

// Adam without bias correction and with decoupled weight decay, driven by a
// linear warm-up/decay schedule over `total_steps`. Encoder tensors use
// encoder_lr and everything else base_lr.
class BertAdam {
 public:
  BertAdam(const ModelConfig &config, int64_t total_steps);

  // Multiplier on the learning rate for the next step.
  double ScheduleFactor() const;
  void Step(ModelParams *params);
  int64_t steps_taken() const { return step_; }

  struct Moments {
    Matrix first;
    Matrix second;
  };
  const std::vector<Moments> &moments() const { return moments_; }

 private:
  ModelConfig config_;
  int64_t total_steps_;
  int64_t step_ = 0;
  std::vector<Moments> moments_;
};

}  // namespace syng2g

#endif  // SYNG2G_OPTIMIZER_H_
