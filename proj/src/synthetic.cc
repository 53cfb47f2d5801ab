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

#include "syng2g/synthetic.h"

#include <random>
#include <set>
#include <string>

namespace syng2g {
namespace {

const std::vector<std::string> kDeterminers = {"the", "a"};
const std::vector<std::string> kAdjectives = {"big", "small", "red", "old"};
const std::vector<std::string> kNouns = {"dog", "cat", "man", "woman",
                                         "ball", "park", "book", "house"};
const std::vector<std::string> kVerbs = {"saw", "chased", "liked", "found",
                                         "took"};
const std::vector<std::string> kAdverbs = {"yesterday", "today", "quickly"};
const std::vector<std::string> kPrepositions = {"in", "near"};

// Builds one record word by word.
class Builder {
 public:
  explicit Builder(std::mt19937_64 *rng) : rng_(rng) {}

  int Add(const std::string &word, const std::string &pos) {
    record_.sentence.words.push_back(word);
    record_.sentence.pos_tags.push_back(pos);
    heads_.push_back({0, ""});
    return static_cast<int>(record_.sentence.words.size());
  }
  void Attach(int dependent, int head, const std::string &label) {
    heads_[dependent - 1] = {head, label};
  }
  const std::string &Pick(const std::vector<std::string> &items) {
    return items[std::uniform_int_distribution<size_t>(0, items.size() - 1)(*rng_)];
  }
  bool Coin(double p) { return std::bernoulli_distribution(p)(*rng_); }
  int size() const { return static_cast<int>(heads_.size()); }

  // Returns {first word, head noun}.
  std::pair<int, int> NounPhrase() {
    int det = Add(Pick(kDeterminers), "DT");
    int adj = Coin(0.4) ? Add(Pick(kAdjectives), "JJ") : 0;
    int noun = Add(Pick(kNouns), "NN");
    Attach(det, noun, "det");
    if (adj) Attach(adj, noun, "amod");
    return {det, noun};
  }

  void Argument(int predicate, int first, int last, int head,
                const std::string &label) {
    arguments_.push_back({predicate, first, last, head, label});
  }

  CorpusRecord Finish(SrlStyle style) {
    for (int w = 1; w <= size(); ++w) {
      record_.syn.arcs.push_back({heads_[w - 1].first, w, heads_[w - 1].second});
    }
    std::set<int> predicates;
    for (const Pending &a : arguments_) {
      predicates.insert(a.predicate);
      if (style == SrlStyle::kSpan) {
        record_.gold_srl.tuples.push_back({a.predicate, a.first, a.last, a.label});
      } else {
        record_.gold_srl.tuples.push_back({a.predicate, a.head, a.head, a.label});
      }
    }
    record_.gold_srl.style = style;
    record_.predicates_given = std::vector<int>(predicates.begin(), predicates.end());
    return std::move(record_);
  }

 private:
  struct Pending {
    int predicate, first, last, head;
    std::string label;
  };
  std::mt19937_64 *rng_;
  CorpusRecord record_;
  std::vector<std::pair<int, std::string>> heads_;
  std::vector<Pending> arguments_;
};

// subject verb object [prep NP] [adverb]; returns the verb position.
int Clause(Builder &b, int governor, const std::string &relation) {
  int leading_adverb = 0;
  if (b.Coin(0.2)) leading_adverb = b.Add(b.Pick(kAdverbs), "RB");
  auto [subj_first, subj] = b.NounPhrase();
  int verb = b.Add(b.Pick(kVerbs), "VBD");
  b.Attach(verb, governor, relation);
  b.Attach(subj, verb, "nsubj");
  b.Argument(verb, subj_first, subj, subj, "A0");
  auto [obj_first, obj] = b.NounPhrase();
  b.Attach(obj, verb, "dobj");
  b.Argument(verb, obj_first, obj, obj, "A1");
  if (b.Coin(0.5)) {
    int prep = b.Add(b.Pick(kPrepositions), "IN");
    auto [np_first, np] = b.NounPhrase();
    (void)np_first;
    b.Attach(prep, verb, "prep");
    b.Attach(np, prep, "pobj");
    b.Argument(verb, prep, np, prep, "AM-LOC");
  }
  if (leading_adverb) {
    b.Attach(leading_adverb, verb, "advmod");
    b.Argument(verb, leading_adverb, leading_adverb, leading_adverb, "AM-TMP");
  } else if (b.Coin(0.3)) {
    int adv = b.Add(b.Pick(kAdverbs), "RB");
    b.Attach(adv, verb, "advmod");
    b.Argument(verb, adv, adv, adv, "AM-TMP");
  }
  return verb;
}

}  // namespace

std::vector<CorpusRecord> SyntheticCorpus(int num_sentences, SrlStyle style,
                                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusRecord> corpus;
  for (int s = 0; s < num_sentences; ++s) {
    Builder b(&rng);
    int verb = Clause(b, 0, "root");
    if (b.Coin(0.35)) {
      int cc = b.Add("and", "CC");
      b.Attach(cc, verb, "cc");
      Clause(b, verb, "conj");
    }
    corpus.push_back(b.Finish(style));
  }
  return corpus;
}

}  // namespace syng2g
