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

#ifndef SYNG2G_VOCAB_H_
#define SYNG2G_VOCAB_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "syng2g/subword.h"
#include "syng2g/types.h"

namespace syng2g {

// Bidirectional string <-> id table.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string &token(int id) const { return tokens_.at(id); }
  const std::vector<std::string> &tokens() const { return tokens_; }

  // Returns -1 if absent.
  int Find(const std::string &token) const;
  // Returns `fallback` if absent.
  int Lookup(const std::string &token, int fallback) const;

  // One "token<TAB>id" line per entry, in id order.
  std::string Serialize() const;
  static Lexicon Parse(const std::string &text);

  bool operator==(const Lexicon &other) const {
    return tokens_ == other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

inline constexpr char kNoneLabel[] = "NONE";

// Subwords and PoS tags reserve 0 = [UNK], 1 = [ROOT], 2 = [SEP]. Syntactic
// labels are the sorted corpus labels; the subword alignment label sits just
// after them. SRL labels reserve 0 for NONE.
struct Vocabulary {
  static constexpr int kUnknownId = 0;
  static constexpr int kRootId = 1;
  static constexpr int kSepId = 2;
  static constexpr int kNoneSrlId = 0;

  Lexicon subwords;
  Lexicon pos_tags;
  Lexicon syn_labels;
  Lexicon srl_labels;

  int subword_label_id() const { return syn_labels.size(); }
  // Number of relation labels seen by the encoder (corpus labels + SUBWORD).
  int num_relation_labels() const { return syn_labels.size() + 1; }
  // Relation id of a syntactic label, or -1 for labels unseen in training.
  int RelationLabelId(const std::string &label) const;

  bool operator==(const Vocabulary &) const = default;
};

// Sorted, deterministic id assignment. Throws on an empty corpus.
Vocabulary BuildVocab(const std::vector<CorpusRecord> &corpus,
                      const Tokenizer &tokenizer);

// Writes subwords.vocab, pos.vocab, syn_labels.vocab and srl_labels.vocab.
void SaveVocabulary(const Vocabulary &vocab, const std::string &directory);
Vocabulary LoadVocabulary(const std::string &directory);

}  // namespace syng2g

#endif  // SYNG2G_VOCAB_H_
