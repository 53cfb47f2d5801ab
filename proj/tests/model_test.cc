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

#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "doctest.h"
#include "syng2g/checkpoint.h"
#include "syng2g/model.h"
#include "syng2g/synthetic.h"
#include "testing.h"

namespace syng2g {
namespace {

namespace fs = std::filesystem;

TEST_CASE("prepared inputs place ROOT and SEP around the words") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, {record});
  const Vocabulary &v = model.vocab();
  CHECK(model.config().num_syn_labels == v.num_relation_labels());
  CHECK(model.config().num_srl_labels == v.srl_labels.size());
  CHECK(model.config().num_subwords == v.subwords.size());

  CorpusRecord unseen = record;
  unseen.sentence.words[1] = "dog";
  unseen.syn.arcs[0].label = "brand-new";
  PreparedExample ex = model.Prepare(unseen);
  const EncoderInput &in = ex.input;
  CHECK(in.size() == 7);
  CHECK(ex.num_words == 5);
  CHECK(in.token_ids.front() == Vocabulary::kRootId);
  CHECK(in.token_ids.back() == Vocabulary::kSepId);
  CHECK(in.pos_ids.front() == Vocabulary::kRootId);
  CHECK(in.token_ids[2] == Vocabulary::kUnknownId);
  CHECK(in.token_ids[3] == v.subwords.Find("sat"));
  CHECK(in.position_ids == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const RelationMatrix &r = in.relations;
  const int L = v.num_relation_labels();
  CHECK(r.num_labels() == L);
  CHECK(r(0, 3) == v.RelationLabelId("root"));
  CHECK(r(3, 0) == v.RelationLabelId("root") + L);
  CHECK(r(3, 2) == v.RelationLabelId("nsubj"));
  // The unseen label on 2 -> 1 is dropped.
  CHECK(r(2, 1) == r.none_id());
  CHECK(r(1, 2) == r.none_id());
  CHECK(in.syn_label_ids[1] == L);
  CHECK(r.CountRelations() == 2 * 4);
  for (int j = 0; j < 7; ++j) CHECK(r(6, j) == r.none_id());

  CorpusRecord long_record = record;
  for (int i = 0; i < 70; ++i) {
    long_record.sentence.words.push_back("x");
    long_record.sentence.pos_tags.push_back("X");
    long_record.syn.arcs.push_back({3, 6 + i, "dep"});
  }
  CHECK_THROWS_AS(model.Prepare(long_record), Error);
  CorpusRecord ragged = record;
  ragged.sentence.pos_tags.pop_back();
  CHECK_THROWS_AS(model.Prepare(ragged), Error);
}

TEST_CASE("subword tokenisation feeds the encoder") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  fs::path dir = fs::temp_directory_path() / "syng2g_model_pieces";
  fs::create_directories(dir);
  std::ofstream(dir / "pieces.txt") << "the\nc\n##at\ns\non\nmat\n##s\n";
  const std::string spec = "wordpiece:" + (dir / "pieces.txt").string();
  auto tokenizer = MakeTokenizer(spec);
  Model model(testing::TinyConfig(Variant::kSynG2G, SrlStyle::kSpan),
              BuildVocab({record}, *tokenizer), spec);
  PreparedExample ex = model.Prepare(record);
  // [ROOT] the c ##at s ##at on mat ##s [SEP]
  CHECK(ex.input.size() == 10);
  const int sub = model.vocab().subword_label_id();
  CHECK(ex.input.relations(2, 3) == sub);
  CHECK(ex.input.relations(7, 8) == sub);
  CHECK(ex.aligned.word_to_first_subword == std::vector<int>{0, 1, 2, 4, 6, 7, 9});
  ad::Tape tape;
  ParamBinder bind(&tape, &model.params());
  ForwardResult r = model.Forward(bind, ex, {});
  CHECK(r.word_z.rows() == 7);
  CHECK(r.word_z.value().row(3) == r.encoder.z.value().row(4));
}

TEST_CASE("predefined mode decodes exactly the given predicates") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(6, SrlStyle::kSpan, 4);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, corpus);
  for (CorpusRecord r : corpus) {
    PreparedExample ex = model.Prepare(r);
    ad::Tape tape;
    ParamBinder bind(&tape, &model.params());
    ForwardOptions options;
    options.mode = PredicateMode::kPredefined;
    CHECK(model.Forward(bind, ex, options).candidates.predicates == *r.predicates_given);
    r.predicates_given.reset();
    ex = model.Prepare(r);
    std::set<int> gold_preds;
    for (const SrlTuple &t : r.gold_srl.tuples) gold_preds.insert(t.predicate);
    CHECK(model.Forward(bind, ex, options).candidates.predicates ==
          std::vector<int>(gold_preds.begin(), gold_preds.end()));
    SrlGraph g = model.Predict(ex, PredicateMode::kPredefined);
    CHECK_NOTHROW(ValidateSrlGraph(g, r.sentence.num_words()));
    for (const SrlTuple &t : g.tuples) CHECK(gold_preds.count(t.predicate));
  }
}

TEST_CASE("training forward adds gold candidates after measuring recall") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(3, SrlStyle::kSpan, 9);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, corpus);
  PreparedExample ex = model.Prepare(corpus[0]);
  ad::Tape tape;
  ParamBinder bind(&tape, &model.params());
  ForwardOptions options;
  options.compute_loss = true;
  ForwardResult eval = model.Forward(bind, ex, options);
  options.training = true;
  ForwardResult train = model.Forward(bind, ex, options);
  CHECK(train.gold_recall == eval.gold_recall);
  CHECK(GoldRecall(train.candidates, ex.gold) == 1.0);
  CHECK(train.candidates.spans.size() >= eval.candidates.spans.size());
}

TEST_CASE("external embeddings overwrite matching rows") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model model = testing::TinyModel(Variant::kPlain, SrlStyle::kSpan, {record});
  fs::path file = fs::temp_directory_path() / "syng2g_embeddings.txt";
  std::ofstream(file) << "cat 1 2 3 4 5 6 7 8\nzebra 1 1 1 1 1 1 1 1\n";
  CHECK(LoadExternalEmbeddings(&model, file.string()) == 1);
  const Matrix &table = model.params()[model.params().token_embedding].value;
  CHECK(table(model.vocab().subwords.Find("cat"), 7) == 8.0);
  std::ofstream(file) << "cat 1 2 3\n";
  CHECK_THROWS_AS(LoadExternalEmbeddings(&model, file.string()), Error);
}

TEST_CASE("checkpoint round trip restores an identical model") {
  std::vector<CorpusRecord> corpus = SyntheticCorpus(5, SrlStyle::kDependency, 6);
  for (Variant variant : {Variant::kSynG2G, Variant::kSynEmb}) {
    Model model = testing::TinyModel(variant, SrlStyle::kDependency, corpus);
    std::stringstream buf;
    SaveCheckpoint(model, buf);
    Model back = LoadCheckpoint(buf);
    CHECK(back.config() == model.config());
    CHECK(back.vocab() == model.vocab());
    CHECK(back.tokenizer_spec() == model.tokenizer_spec());
    REQUIRE(back.params().tensors.size() == model.params().tensors.size());
    for (size_t i = 0; i < model.params().tensors.size(); ++i) {
      CHECK(back.params().tensors[i].name == model.params().tensors[i].name);
      CHECK(back.params().tensors[i].value == model.params().tensors[i].value);
    }
    for (const CorpusRecord &r : corpus) {
      CHECK(back.Predict(back.Prepare(r), PredicateMode::kEndToEnd) ==
            model.Predict(model.Prepare(r), PredicateMode::kEndToEnd));
    }
    std::string bytes = buf.str();
    std::istringstream truncated(bytes.substr(0, bytes.size() - 9));
    CHECK_THROWS_AS(LoadCheckpoint(truncated), Error);
    std::string wrong = bytes;
    wrong[0] = 'X';
    std::istringstream bad_magic(wrong);
    CHECK_THROWS_AS(LoadCheckpoint(bad_magic), Error);
  }
  CHECK_THROWS_AS(LoadCheckpoint(std::string("/nonexistent/model.ckpt")), Error);
}

TEST_CASE("model constructor rejects parameters of the wrong shape") {
  CorpusRecord record = testing::FiveWordRecord(SrlStyle::kSpan);
  Model model = testing::TinyModel(Variant::kSynG2G, SrlStyle::kSpan, {record});
  ModelParams params = model.params();
  params[params.head.label_out_w].value.resize(2, 2);
  CHECK_THROWS_AS(Model(model.config(), model.vocab(), "identity", params), Error);
}

}  // namespace
}  // namespace syng2g
