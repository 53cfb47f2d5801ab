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

#include "syng2g/optimizer.h"

#include <algorithm>
#include <cmath>

namespace syng2g {

double ClipGradNorm(ModelParams *params, double max_norm) {
  double sq = 0.0;
  for (const Parameter &p : params->tensors) {
    if (p.grad.size() != 0) sq += p.grad.squaredNorm();
  }
  const double norm = std::sqrt(sq);
  if (max_norm > 0.0 && norm > max_norm) {
    const double factor = max_norm / (norm + 1e-6);
    for (Parameter &p : params->tensors) p.grad *= factor;
  }
  return norm;
}

BertAdam::BertAdam(const ModelConfig &config, int64_t total_steps)
    : config_(config), total_steps_(std::max<int64_t>(total_steps, 1)) {}

double BertAdam::ScheduleFactor() const {
  const double x = static_cast<double>(step_ + 1) / total_steps_;
  const double warmup = config_.warmup;
  if (warmup > 0.0 && x < warmup) return x / warmup;
  if (warmup >= 1.0) return 1.0;
  return std::max((x - 1.0) / (warmup - 1.0), 0.0);
}

void BertAdam::Step(ModelParams *params) {
  if (moments_.empty()) {
    for (const Parameter &p : params->tensors) {
      moments_.push_back({Matrix::Zero(p.value.rows(), p.value.cols()),
                          Matrix::Zero(p.value.rows(), p.value.cols())});
    }
  }
  const double factor = ScheduleFactor();
  const double b1 = config_.adam_beta1, b2 = config_.adam_beta2;
  for (size_t i = 0; i < params->tensors.size(); ++i) {
    Parameter &p = params->tensors[i];
    if (p.grad.size() == 0) continue;
    Moments &m = moments_[i];
    m.first = b1 * m.first + (1.0 - b1) * p.grad;
    m.second = b2 * m.second + (1.0 - b2) * p.grad.cwiseAbs2();
    Matrix update = m.first.array() / (m.second.array().sqrt() + config_.adam_epsilon);
    if (p.decay && config_.weight_decay > 0.0) update += config_.weight_decay * p.value;
    const double lr =
        (p.group == ParamGroup::kEncoder ? config_.encoder_lr : config_.base_lr) *
        factor;
    p.value -= lr * update;
  }
  ++step_;
}

}  // namespace syng2g
