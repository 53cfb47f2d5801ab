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

#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "syng2g/optimizer.h"
#include "syng2g/params.h"
#include "syng2g/synthetic.h"
#include "syng2g/trainer.h"
#include "testing.h"

namespace syng2g {
namespace {

TEST_CASE("schedule warms up linearly then decays to zero") {
  ModelConfig c;
  c.warmup = 0.1;
  BertAdam opt(c, 100);
  ModelParams none;
  std::vector<double> factors;
  for (int s = 0; s < 100; ++s) {
    factors.push_back(opt.ScheduleFactor());
    opt.Step(&none);
  }
  CHECK(factors[0] == doctest::Approx(0.1));
  CHECK(factors[4] == doctest::Approx(0.5));
  CHECK(factors[9] == doctest::Approx(1.0));
  CHECK(factors[49] == doctest::Approx((0.5 - 1.0) / (0.1 - 1.0)));
  CHECK(factors[99] == doctest::Approx(0.0));
  CHECK(opt.steps_taken() == 100);
}

TEST_CASE("adam step matches a scalar re-derivation") {
  ModelConfig c;
  c.base_lr = 0.1;
  c.encoder_lr = 0.01;
  c.warmup = 0.0;
  c.weight_decay = 0.05;
  ModelParams params;
  for (int i = 0; i < 2; ++i) {
    Parameter p;
    p.name = i ? "encoder.w" : "head.b";
    p.value = Matrix::Constant(1, 1, 0.5);
    p.group = i ? ParamGroup::kEncoder : ParamGroup::kHead;
    p.decay = i == 1;
    params.tensors.push_back(p);
  }
  const int total = 4;
  BertAdam opt(c, total);
  double w[2] = {0.5, 0.5}, m[2] = {0, 0}, v[2] = {0, 0};
  const double grads[] = {0.3, -1.2, 0.7};
  for (int step = 0; step < 3; ++step) {
    const double schedule = std::max((static_cast<double>(step + 1) / total - 1.0) / -1.0, 0.0);
    for (int i = 0; i < 2; ++i) {
      const double g = grads[step] * (i + 1);
      params.tensors[i].grad = Matrix::Constant(1, 1, g);
      m[i] = 0.9 * m[i] + 0.1 * g;
      v[i] = 0.999 * v[i] + 0.001 * g * g;
      double update = m[i] / (std::sqrt(v[i]) + c.adam_epsilon);
      if (i == 1) update += c.weight_decay * w[i];
      w[i] -= (i == 1 ? c.encoder_lr : c.base_lr) * schedule * update;
    }
    opt.Step(&params);
    for (int i = 0; i < 2; ++i) {
      CHECK(params.tensors[i].value(0, 0) == doctest::Approx(w[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("gradient clipping bounds the global norm") {
  ModelParams params;
  Parameter a, b;
  a.value = a.grad = Matrix::Constant(1, 2, 3.0);
  b.value = b.grad = Matrix::Constant(2, 1, 4.0);
  params.tensors = {a, b};
  const double norm = ClipGradNorm(&params, 1.0);
  CHECK(norm == doctest::Approx(std::sqrt(9.0 * 2 + 16.0 * 2)));
  double after = std::sqrt(params.tensors[0].grad.squaredNorm() + params.tensors[1].grad.squaredNorm());
  CHECK(after == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(params.tensors[1].grad(0, 0) / params.tensors[0].grad(0, 0) == doctest::Approx(4.0 / 3.0));
  const Matrix before = params.tensors[0].grad;
  ClipGradNorm(&params, 10.0);
  CHECK(params.tensors[0].grad == before);
}

TEST_CASE("bucket batches cover every sentence once") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(23, SrlStyle::kSpan, 3);
  Model model = testing::TinyModel(Variant::kPlain, SrlStyle::kSpan, corpus);
  std::vector<PreparedExample> examples;
  for (const CorpusRecord &r : corpus) examples.push_back(model.Prepare(r));
  auto batches = BucketBatches(examples, 4);
  CHECK(batches.size() == 6);
  std::multiset<int> seen;
  int previous_max = 0;
  for (const auto &batch : batches) {
    CHECK(batch.size() <= 4);
    int lo = 1 << 30, hi = 0;
    for (int i : batch) {
      seen.insert(i);
      lo = std::min(lo, examples[i].input.size());
      hi = std::max(hi, examples[i].input.size());
    }
    CHECK(lo >= previous_max);
    previous_max = hi;
  }
  CHECK(seen.size() == 23);
  CHECK(std::set<int>(seen.begin(), seen.end()).size() == 23);
}

ModelConfig QuickConfig(SrlStyle style) {
  ModelConfig c = testing::TinyConfig(Variant::kSynG2G, style);
  c.init_std = 0.02;
  c.hidden_size = 16;
  c.span_hidden = 16;
  c.label_hidden = 16;
  c.base_lr = c.encoder_lr = 1.5e-3;
  c.warmup = 0.2;
  c.batch_size = 4;
  c.epochs = 6;
  return c;
}

TEST_CASE("training is deterministic and lowers the loss") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(8, SrlStyle::kDependency, 2);
  IdentityTokenizer tok;
  Vocabulary vocab = BuildVocab(corpus, tok);
  Model a(QuickConfig(SrlStyle::kDependency), vocab, "identity");
  Model b(QuickConfig(SrlStyle::kDependency), vocab, "identity");
  std::ostringstream log;
  int callbacks = 0;
  TrainOptions options;
  options.log = &log;
  options.on_epoch = [&](const EpochLog &) { ++callbacks; };
  TrainState sa = Train(&a, corpus, options);
  TrainState sb = Train(&b, corpus);
  CHECK(sa.epoch == 6);
  CHECK(sa.steps == 12);
  CHECK(callbacks == 6);
  const std::string text = log.str();
  CHECK(text.rfind("epoch,step,loss,dev_f1,seconds\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  for (size_t i = 0; i < a.params().tensors.size(); ++i) {
    CHECK(a.params().tensors[i].value == b.params().tensors[i].value);
  }
  CHECK(sa.history.back().loss < sa.history.front().loss);

  double total = 0.0;
  for (const CorpusRecord &r : corpus) total += ExampleLoss(&a, a.Prepare(r));
  CHECK(std::isfinite(total));
  EvalReport report = EvaluateModel(&a, corpus, PredicateMode::kPredefined);
  CHECK(report.gold_recall >= 0.0);
  CHECK(report.gold_recall <= 1.0);
  CHECK(report.overall.gold == [&] {
    int64_t n = 0;
    for (const CorpusRecord &r : corpus) n += r.gold_srl.tuples.size();
    return n;
  }());
}

TEST_CASE("early stopping and target f1") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(6, SrlStyle::kDependency, 5);
  IdentityTokenizer tok;
  Vocabulary vocab = BuildVocab(corpus, tok);
  ModelConfig c = QuickConfig(SrlStyle::kDependency);
  c.epochs = 50;
  c.patience = 2;
  c.base_lr = c.encoder_lr = 0.0;  // dev F1 never improves after epoch 1
  Model frozen(c, vocab, "identity");
  TrainOptions options;
  options.dev = &corpus;
  TrainState s = Train(&frozen, corpus, options);
  CHECK(s.epoch == 3);
  CHECK(s.best_epoch == 1);

  c = QuickConfig(SrlStyle::kDependency);
  c.epochs = 50;
  Model target(c, vocab, "identity");
  options.target_f1 = 0.0;
  s = Train(&target, corpus, options);
  CHECK(s.epoch == 1);
}

TEST_CASE("training refuses a non-finite loss") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(2, SrlStyle::kSpan, 1);
  IdentityTokenizer tok;
  Model model(QuickConfig(SrlStyle::kSpan), BuildVocab(corpus, tok), "identity");
  ModelParams &p = model.params();
  p[p.head.label_out_b].value(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Train(&model, corpus), Error);
}

}  // namespace
}  // namespace syng2g
