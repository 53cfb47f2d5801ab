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

#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "syng2g/evaluate.h"
#include "syng2g/synthetic.h"

namespace syng2g {
namespace {

TEST_CASE("precision recall and f1") {
  TupleCounts c{3, 4, 6};
  Prf s = c.Score();
  CHECK(s.precision == doctest::Approx(0.75));
  CHECK(s.recall == doctest::Approx(0.5));
  CHECK(s.f1 == doctest::Approx(2 * 0.75 * 0.5 / 1.25));
  Prf zero = TupleCounts{0, 0, 0}.Score();
  CHECK(zero.precision == 0.0);
  CHECK(zero.recall == 0.0);
  CHECK(zero.f1 == 0.0);
  CHECK(TupleCounts{0, 2, 0}.Score().f1 == 0.0);
  TupleCounts sum = c;
  sum += TupleCounts{1, 1, 1};
  CHECK(sum == TupleCounts{4, 5, 7});
}

TEST_CASE("length bins") {
  CHECK(SentenceLengthBin(0) == 0);
  CHECK(SentenceLengthBin(9) == 0);
  CHECK(SentenceLengthBin(10) == 1);
  CHECK(SentenceLengthBin(39) == 3);
  CHECK(SentenceLengthBin(40) == 4);
  CHECK(SentenceLengthBin(400) == 4);
  CHECK(DependencyLength({5, 2, 2, "A0"}) == 3);
  CHECK(DependencyLength({2, 5, 5, "A0"}) == 3);
  CHECK(DependencyLength({5, 1, 3, "A0"}) == 2);
  CHECK(DependencyLength({1, 3, 4, "A0"}) == 2);
  CHECK(DependencyLength({2, 1, 3, "A0"}) == 0);
  CHECK(DependencyLength({2, 2, 2, "A0"}) == 0);
  CHECK(DependencyLengthBin(0) == 0);
  CHECK(DependencyLengthBin(1) == 0);
  CHECK(DependencyLengthBin(5) == 4);
  CHECK(DependencyLengthBin(6) == 5);
  CHECK(DependencyLengthBin(60) == 5);
}

TEST_CASE("tuple matching is exact and set based") {
  SrlGraph gold, pred;
  gold.tuples = {{2, 1, 1, "A0"}, {2, 3, 4, "A1"}};
  pred.tuples = {{2, 1, 1, "A0"}, {2, 1, 1, "A0"}, {2, 3, 4, "A0"}, {3, 3, 4, "A1"}};
  CHECK(CountTuples(pred, gold) == TupleCounts{1, 3, 2});
  CHECK(CountTuples(gold, gold) == TupleCounts{2, 2, 2});
}

// Drops, relabels and adds tuples at random.
SrlGraph Perturb(const SrlGraph &gold, int num_words, std::mt19937_64 &rng) {
  SrlGraph out;
  out.style = gold.style;
  std::bernoulli_distribution coin(0.3);
  std::uniform_int_distribution<int> word(1, num_words);
  for (SrlTuple t : gold.tuples) {
    if (coin(rng)) continue;
    if (coin(rng)) t.label = "A2";
    out.tuples.push_back(t);
  }
  for (int extra = 0; extra < 2; ++extra) {
    if (!coin(rng)) continue;
    int k = word(rng), i = word(rng);
    out.tuples.push_back({k, i, i, "A0"});
  }
  return out;
}

TEST_CASE("overall counts equal the sum over every bin") {
  std::mt19937_64 rng(5);
  for (SrlStyle style : {SrlStyle::kSpan, SrlStyle::kDependency}) {
    std::vector<CorpusRecord> gold = SyntheticCorpus(60, style, 13);
    std::vector<SrlGraph> pred;
    TupleCounts oracle;
    for (const CorpusRecord &r : gold) {
      pred.push_back(Perturb(r.gold_srl, r.sentence.num_words(), rng));
      std::set<SrlTuple> g(r.gold_srl.tuples.begin(), r.gold_srl.tuples.end());
      std::set<SrlTuple> p(pred.back().tuples.begin(), pred.back().tuples.end());
      for (const SrlTuple &t : p) oracle.correct += g.count(t);
      oracle.predicted += p.size();
      oracle.gold += g.size();
    }
    for (PredicateMode mode : {PredicateMode::kEndToEnd, PredicateMode::kPredefined}) {
      EvalReport report = Evaluate(pred, gold, mode);
      CHECK(report.overall == oracle);
      CHECK(report.bins.sentence_length.Total() == oracle);
      CHECK(report.bins.dependency_length.Total() == oracle);
      CHECK(report.bins.sentence_length.bins == SentenceLengthBins());
      CHECK(report.bins.dependency_length.bins == DependencyLengthBins());
      CHECK(report.mode == mode);
    }
  }
}

TEST_CASE("perfect predictions score one") {
  std::vector<CorpusRecord> gold = SyntheticCorpus(10, SrlStyle::kSpan, 1);
  std::vector<SrlGraph> pred;
  for (const CorpusRecord &r : gold) pred.push_back(r.gold_srl);
  for (PredicateMode mode : {PredicateMode::kEndToEnd, PredicateMode::kPredefined}) {
    Prf s = Evaluate(pred, gold, mode).overall.Score();
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 1.0);
    CHECK(s.f1 == 1.0);
  }
  pred.pop_back();
  CHECK_THROWS_AS(Evaluate(pred, gold, PredicateMode::kEndToEnd), Error);
}

TEST_CASE("report formats") {
  std::vector<CorpusRecord> gold = SyntheticCorpus(5, SrlStyle::kDependency, 2);
  std::vector<SrlGraph> pred;
  for (const CorpusRecord &r : gold) pred.push_back(r.gold_srl);
  EvalReport report = Evaluate(pred, gold, PredicateMode::kPredefined);
  report.gold_recall = 0.5;
  auto j = nlohmann::json::parse(report.ToJson());
  CHECK(j["f1"].get<double>() == 1.0);
  CHECK(j["gold_recall"].get<double>() == 0.5);
  CHECK(j["mode"].get<std::string>() == "predefined");

  std::istringstream csv(report.ToCsv());
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 1 + 1 + 5 + 6);

  BinTable a{SentenceLengthBins(), std::vector<TupleCounts>(5)};
  a.counts[0] = {1, 2, 2};
  BinTable b = a;
  b.counts[4] = {3, 3, 3};
  CHECK(BinComparisonCsv({"x", "y"}, {a, b}) ==
        "model,0-9,10-19,20-29,30-39,40+\n"
        "x,50.00,0.00,0.00,0.00,0.00\n"
        "y,50.00,0.00,0.00,0.00,100.00\n");
  std::string svg = BinComparisonSvg("F1", {"x", "y"}, {a, b});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find(">y<") != std::string::npos);
  CHECK_THROWS_AS(BinComparisonCsv({"x"}, {a, b}), Error);
}

}  // namespace
}  // namespace syng2g
