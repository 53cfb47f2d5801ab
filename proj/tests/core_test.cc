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
#include <limits>

#include "doctest.h"
#include "syng2g/config.h"
#include "syng2g/types.h"

namespace syng2g {
namespace {

TEST_CASE("names parse back to the same enum") {
  for (SrlStyle s : {SrlStyle::kSpan, SrlStyle::kDependency}) {
    CHECK(ParseStyle(StyleName(s)) == s);
  }
  for (PredicateMode m : {PredicateMode::kEndToEnd, PredicateMode::kPredefined}) {
    CHECK(ParseMode(ModeName(m)) == m);
  }
  for (Variant v : {Variant::kSynG2G, Variant::kSynG2GNoKey, Variant::kSynEmb,
                    Variant::kPlain}) {
    CHECK(ParseVariant(VariantName(v)) == v);
  }
  CHECK(ParseVariant("SynG2G_NoKey") == Variant::kSynG2GNoKey);
  CHECK(ParseStyle("dep") == SrlStyle::kDependency);
  CHECK_THROWS_AS(ParseStyle("tree"), Error);
  CHECK_THROWS_AS(ParseMode("auto"), Error);
  CHECK_THROWS_AS(ParseVariant("BERT"), Error);
}

TEST_CASE("only the syntax-aware variants use relation attention") {
  CHECK(UsesRelationAttention(Variant::kSynG2G));
  CHECK(UsesRelationAttention(Variant::kSynG2GNoKey));
  CHECK_FALSE(UsesRelationAttention(Variant::kSynEmb));
  CHECK_FALSE(UsesRelationAttention(Variant::kPlain));
}

TEST_CASE("srl graph validation") {
  SrlGraph g;
  g.tuples = {{2, 1, 3, "A0"}};
  CHECK_NOTHROW(ValidateSrlGraph(g, 3));
  CHECK_THROWS_AS(ValidateSrlGraph(g, 2), Error);
  g.tuples = {{2, 3, 1, "A0"}};
  CHECK_THROWS_AS(ValidateSrlGraph(g, 3), Error);
  g.tuples = {{0, 1, 1, "A0"}};
  CHECK_THROWS_AS(ValidateSrlGraph(g, 3), Error);
  g.style = SrlStyle::kDependency;
  g.tuples = {{2, 1, 2, "A0"}};
  CHECK_THROWS_AS(ValidateSrlGraph(g, 3), Error);
  g.tuples = {{2, 1, 1, "A0"}};
  CHECK_NOTHROW(ValidateSrlGraph(g, 3));
}

TEST_CASE("dependency graph validation") {
  DependencyGraph g;
  g.arcs = {{0, 1, "root"}, {1, 2, "obj"}};
  CHECK_NOTHROW(ValidateDependencyGraph(g, 2));
  CHECK_THROWS_AS(ValidateDependencyGraph(g, 3), Error);  // word 3 headless
  g.arcs.push_back({0, 2, "dup"});
  CHECK_THROWS_AS(ValidateDependencyGraph(g, 2), Error);
  g.arcs = {{0, 1, "root"}, {3, 2, "x"}};  // head is SEP
  CHECK_THROWS_AS(ValidateDependencyGraph(g, 2), Error);
}

TEST_CASE("canonical order sorts by predicate, start, end, label") {
  SrlGraph g;
  g.tuples = {{3, 1, 1, "A1"}, {2, 4, 5, "A0"}, {3, 1, 1, "A0"}, {2, 1, 2, "A1"}};
  g.Canonicalize();
  CHECK(g.tuples == std::vector<SrlTuple>{{2, 1, 2, "A1"}, {2, 4, 5, "A0"},
                                          {3, 1, 1, "A0"}, {3, 1, 1, "A1"}});
}

TEST_CASE("optimiser and srl defaults follow the published hyper-parameters") {
  ModelConfig c;
  CHECK(c.base_lr == 1.5e-3);
  CHECK(c.encoder_lr == 1e-5);
  CHECK(c.adam_beta1 == 0.9);
  CHECK(c.adam_beta2 == 0.999);
  CHECK(c.adam_epsilon == 1e-5);
  CHECK(c.weight_decay == 0.01);
  CHECK(c.max_grad_norm == 1.0);
  CHECK(c.warmup == 0.001);
  CHECK(c.max_positions == 512);
  CHECK(c.span_hidden == 512);
  CHECK(c.label_hidden == 250);
  CHECK(c.lambda_verb == 0.6);
  CHECK(c.lambda_span == 0.6);
  CHECK(c.max_spans == 300);
  CHECK(c.max_verbs == 30);
  CHECK(c.epochs == 100);
}

TEST_CASE("config text round trip is exact") {
  ModelConfig c;
  c.variant = Variant::kSynEmb;
  c.style = SrlStyle::kDependency;
  c.base_lr = 0.1 + 0.2;  // not representable in few digits
  c.init_std = 1.0 / 3.0;
  c.num_syn_labels = 47;
  c.seed = 1234567890123ULL;
  ModelConfig back;
  ApplyConfigValues(ParseConfigText(FormatConfig(c)), &back);
  CHECK(back == c);
  CHECK(std::isinf(back.predicate_threshold));
  CHECK(back.predicate_threshold < 0);
}

TEST_CASE("config text parsing") {
  auto values = ParseConfigText("# comment\n num_layers = 3 # trailing\n\nvariant=Plain\n");
  CHECK(values.size() == 2);
  ModelConfig c;
  ApplyConfigValues(values, &c);
  CHECK(c.num_layers == 3);
  CHECK(c.variant == Variant::kPlain);
  CHECK_THROWS_AS(ApplyConfigValues({{"no_such_key", "1"}}, &c), Error);
  CHECK_THROWS_AS(ApplyConfigValues({{"num_layers", "three"}}, &c), Error);
  CHECK_THROWS_AS(ApplyConfigValues({{"num_layers", "3.5"}}, &c), Error);
  CHECK_THROWS_AS(ParseConfigText("just words\n"), Error);
}

TEST_CASE("config validation") {
  ModelConfig c;
  CHECK_NOTHROW(c.Validate());
  CHECK(c.head_size() * c.num_heads == c.hidden_size);
  c.num_heads = 3;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = ModelConfig();
  c.dropout = 1.0;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = ModelConfig();
  c.lambda_span = 0.0;
  CHECK_THROWS_AS(c.Validate(), Error);
}

}  // namespace
}  // namespace syng2g
