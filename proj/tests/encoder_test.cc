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
#include <random>

#include "doctest.h"
#include "syng2g/encoder.h"
#include "syng2g/params.h"
#include "testing.h"

namespace syng2g {
namespace {

constexpr Variant kVariants[] = {Variant::kSynG2G, Variant::kSynG2GNoKey,
                                 Variant::kSynEmb, Variant::kPlain};

// Per-pair attention score written out term by term.
double OracleScore(const Eigen::RowVectorXd &xi, const Eigen::RowVectorXd &xj,
                   const Matrix &wq, const Matrix &wk,
                   const Eigen::RowVectorXd &r, Variant variant) {
  Eigen::RowVectorXd q = xi * wq, k = xj * wk;
  double e = q.dot(k);
  if (UsesRelationAttention(variant)) {
    e += q.dot(r);
    if (variant == Variant::kSynG2G) e += r.dot(k);
  }
  return e / std::sqrt(static_cast<double>(wq.cols()));
}

TEST_CASE("encoder attention scores match the per-pair oracle") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  for (Variant variant : kVariants) {
    CAPTURE(VariantName(variant));
    Model model = testing::TinyModel(variant, SrlStyle::kSpan, {record});
    ModelParams &params = model.params();
    std::mt19937_64 rng(2);
    // Non-zero biases would break the oracle; everything else stays random.
    for (Parameter &p : params.tensors) {
      if (p.name.find(".b") != std::string::npos && p.name.find("layer0.") == 0) {
        p.value.setZero();
      }
    }
    PreparedExample ex = model.Prepare(record);
    ad::Tape tape;
    ParamBinder bind(&tape, &params);
    EncodeOptions options;
    options.record_trace = true;
    EncoderOutput out = Encode(bind, model.config(), ex.input, options);
    const ModelConfig &c = model.config();
    REQUIRE(out.trace.scores.size() == static_cast<size_t>(c.num_layers));
    const Matrix &x = out.input.value();
    const LayerParams &lp = params.layers[0];
    const int d = c.head_size();
    for (int h = 0; h < c.num_heads; ++h) {
      Matrix wq = params[lp.query_w].value.middleCols(h * d, d);
      Matrix wk = params[lp.key_w].value.middleCols(h * d, d);
      const Matrix &e = out.trace.scores[0][h];
      for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.rows(); ++j) {
          Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(d);
          if (lp.relation >= 0) r = params[lp.relation].value.row(ex.input.relations(i, j));
          CHECK(e(i, j) == doctest::Approx(OracleScore(x.row(i), x.row(j), wq, wk, r, variant))
                               .epsilon(1e-12));
        }
      }
      Matrix w = out.trace.weights[0][h];
      CHECK((w.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-12);
    }
    CHECK(out.z.rows() == ex.input.size());
    CHECK(out.z.cols() == c.hidden_size);
  }
}

TEST_CASE("standalone score functions agree with the oracle") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6, dx = 6, d = 3, labels = 2;
    std::vector<int> heads = testing::RandomHeads(n - 1, rng);
    std::vector<LabeledArc> arcs;
    for (int w = 1; w < n; ++w) arcs.push_back({heads[w], w, w % labels});
    RelationMatrix rel = BuildRelationMatrix(arcs, n, labels);
    Matrix x = testing::RandomMatrix(n, dx, rng);
    Matrix wq = testing::RandomMatrix(dx, d, rng), wk = testing::RandomMatrix(dx, d, rng);
    Matrix table = testing::RandomMatrix(rel.table_rows(), d, rng);
    Matrix full = AttentionScoresFull(x, rel, wq, wk, table);
    for (Variant v : kVariants) {
      Matrix e = AttentionScoresReformulated(x, rel, wq, wk, table, v);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double oracle = OracleScore(x.row(i), x.row(j), wq, wk, table.row(rel(i, j)), v);
          CHECK(e(i, j) == doctest::Approx(oracle).epsilon(1e-12));
          if (v == Variant::kSynG2G) CHECK(full(i, j) == doctest::Approx(oracle).epsilon(1e-12));
        }
      }
    }
    Matrix alpha = ad::SoftmaxRowsValue(full);
    Matrix wv = testing::RandomMatrix(dx, d, rng);
    CHECK((AttentionValues(alpha, x, wv) - alpha * x * wv).norm() < 1e-12);
  }
  RelationMatrix rel = BuildRelationMatrix({}, 3, 1);
  Matrix x = Matrix::Ones(3, 4);
  CHECK_THROWS_AS(AttentionScoresFull(x, rel, Matrix::Ones(4, 2), Matrix::Ones(4, 3),
                                      Matrix::Ones(3, 2)),
                  Error);
  CHECK_THROWS_AS(AttentionScoresFull(x, rel, Matrix::Ones(4, 2), Matrix::Ones(4, 2),
                                      Matrix::Ones(2, 2)),
                  Error);
  CHECK_THROWS_AS(AttentionValues(Matrix::Ones(3, 2), x, Matrix::Ones(4, 2)), Error);
}

TEST_CASE("SynEmb input adds the incoming-label embedding") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model synemb = testing::TinyModel(Variant::kSynEmb, SrlStyle::kSpan, {record});
  ModelConfig plain_config = synemb.config();
  plain_config.variant = Variant::kPlain;
  PreparedExample ex = synemb.Prepare(record);
  ad::Tape tape;
  ParamBinder bind(&tape, &synemb.params());
  Matrix with = EmbedInput(bind, synemb.config(), ex.input).value();
  Matrix without = EmbedInput(bind, plain_config, ex.input).value();
  const Matrix &table = synemb.params()[synemb.params().label_embedding].value;
  CHECK(table.rows() == synemb.config().num_syn_labels + 1);
  for (int i = 0; i < ex.input.size(); ++i) {
    CHECK((with.row(i) - without.row(i) - table.row(ex.input.syn_label_ids[i])).norm() < 1e-15);
  }
  // ROOT and SEP have no head and use the extra row.
  CHECK(ex.input.syn_label_ids.front() == synemb.config().num_syn_labels);
  CHECK(ex.input.syn_label_ids.back() == synemb.config().num_syn_labels);
}

TEST_CASE("encoder rejects bad inputs and non-finite activations") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, {record});
  PreparedExample ex = model.Prepare(record);
  {
    ad::Tape tape;
    ParamBinder bind(&tape, &model.params());
    EncoderInput bad = ex.input;
    bad.relations = BuildRelationMatrix({}, 3, model.config().num_syn_labels);
    CHECK_THROWS_AS(Encode(bind, model.config(), bad), Error);
    bad = ex.input;
    bad.pos_ids.pop_back();
    CHECK_THROWS_AS(Encode(bind, model.config(), bad), Error);
  }
  ModelParams &params = model.params();
  params[params.layers[1].ffn_out_w].value(0, 0) = std::nan("");
  ad::Tape tape;
  ParamBinder bind(&tape, &params);
  try {
    Encode(bind, model.config(), ex.input);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("layer 1") != std::string::npos);
  }
}

TEST_CASE("dropout only acts in training mode") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, {record});
  ModelConfig config = model.config();
  config.dropout = 0.5;
  PreparedExample ex = model.Prepare(record);
  auto run = [&](bool training, uint64_t seed) {
    ad::Tape tape;
    ParamBinder bind(&tape, &model.params());
    std::mt19937_64 rng(seed);
    EncodeOptions options;
    options.training = training;
    options.rng = &rng;
    return Matrix(Encode(bind, config, ex.input, options).z.value());
  };
  CHECK(run(false, 1) == run(false, 2));
  CHECK(run(true, 1) == run(true, 1));
  CHECK(run(true, 1) != run(true, 2));
}

TEST_CASE("model gradients match finite differences") {
  for (SrlStyle style : {SrlStyle::kSpan, SrlStyle::kDependency}) {
    CorpusRecord record = testing::FiveWordRecord(style);
    for (Variant variant : {Variant::kSynG2GNoKey, Variant::kPlain}) {
      Model model = testing::TinyModel(variant, style, {record});
      for (const auto &t : testing::CheckModelGradients(
               &model, record, PredicateMode::kEndToEnd)) {
        CAPTURE(t.name);
        CHECK(t.error < 1e-4);
      }
    }
  }
}

TEST_CASE("parameter initialisation") {
  ModelConfig c = testing::TinyConfig(Variant::kSynG2G, SrlStyle::kSpan);
  c.init_std = 0.02;
  c.num_subwords = 40;
  c.num_pos = 7;
  c.num_syn_labels = 5;
  c.num_srl_labels = 4;
  ModelParams a = CreateParams(c, 1), b = CreateParams(c, 1), other = CreateParams(c, 2);
  REQUIRE(a.tensors.size() == b.tensors.size());
  for (size_t i = 0; i < a.tensors.size(); ++i) CHECK(a.tensors[i].value == b.tensors[i].value);
  CHECK(a[a.token_embedding].value != other[other.token_embedding].value);

  std::vector<double> weights;
  for (const Parameter &p : a.tensors) {
    CAPTURE(p.name);
    const bool bias_or_norm = p.name.size() >= 2 && (p.name.ends_with(".b") ||
                                                     p.name.ends_with(".gain") ||
                                                     p.name.ends_with(".bias"));
    CHECK(p.decay == !bias_or_norm);
    if (p.name.ends_with(".gain")) CHECK(p.value.isOnes());
    if (p.name.ends_with(".b") || p.name.ends_with(".bias")) CHECK(p.value.isZero());
    if (!bias_or_norm) {
      CHECK(p.value.cwiseAbs().maxCoeff() <= 2 * c.init_std);
      for (Eigen::Index i = 0; i < p.value.size(); ++i) weights.push_back(p.value.data()[i]);
    }
    const bool encoder = p.name == "embeddings.token" || p.name == "embeddings.position" ||
                         (p.name.starts_with("layer") && !p.name.ends_with(".relation"));
    CHECK((p.group == ParamGroup::kEncoder) == encoder);
  }
  double sq = 0;
  for (double w : weights) sq += w * w;
  // Standard deviation of a normal truncated at two sigma.
  CHECK(std::sqrt(sq / weights.size()) == doctest::Approx(0.8796 * c.init_std).epsilon(0.03));

  CHECK(a[a.layers[0].relation].value.rows() == 2 * c.num_syn_labels + 1);
  CHECK(a[a.layers[0].relation].value.cols() == c.head_size());
  CHECK(a.label_embedding == -1);
  CHECK(a.Find("srl.label.out.b") >= 0);
  CHECK(a.Find("nope") == -1);
}

TEST_CASE("parameter counts agree with allocation and the added-size formula") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    ModelConfig c;
    c.num_layers = 1 + trial % 4;
    c.num_heads = 1 + trial % 3;
    c.hidden_size = c.num_heads * 2 * (1 + trial % 5);
    c.ffn_size = 3 + trial;
    c.max_positions = 20;
    c.span_hidden = 4;
    c.label_hidden = 3;
    c.num_subwords = 10 + trial;
    c.num_pos = 5;
    c.num_syn_labels = trial % 7;
    c.num_srl_labels = 3;
    for (Variant v : kVariants) {
      c.variant = v;
      ModelParams p = CreateParams(c, 3);
      CHECK(p.TotalSize() == CountParams(c));
      CHECK(EnumerateParamShapes(c).size() == p.tensors.size());
    }
    const int64_t L = c.num_syn_labels, dx = c.hidden_size;
    const int64_t m = c.num_layers, d = c.head_size();
    AddedParamCount expected{(L + 1) * dx, (2 * L + 1) * m * d};
    CHECK(CountAddedParams(c) == expected);
    CHECK(EnumerateAddedParams(c) == expected);
  }
}

}  // namespace
}  // namespace syng2g
