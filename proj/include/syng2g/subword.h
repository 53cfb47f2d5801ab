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

#ifndef SYNG2G_SUBWORD_H_
#define SYNG2G_SUBWORD_H_

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "syng2g/types.h"

namespace syng2g {

inline constexpr char kRootToken[] = "[ROOT]";
inline constexpr char kSepToken[] = "[SEP]";
inline constexpr char kUnknownToken[] = "[UNK]";
// Relation label linking a non-first subword to its word's first subword.
inline constexpr char kSubwordLabel[] = "[SUBWORD]";

// Deterministic word -> subwords function.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::vector<std::string> Tokenize(const std::string &word) const = 0;
  virtual std::string Describe() const = 0;
};

// Every word is a single subword.
class IdentityTokenizer : public Tokenizer {
 public:
  std::vector<std::string> Tokenize(const std::string &word) const override;
  std::string Describe() const override { return "identity"; }
};

// Greedy longest-match-first segmentation against a fixed piece inventory.
// Continuation pieces carry a "##" prefix; a word that cannot be segmented
// becomes a single [UNK] piece.
class WordPieceTokenizer : public Tokenizer {
 public:
  explicit WordPieceTokenizer(std::vector<std::string> pieces,
                              std::string source = "inline");
  static std::unique_ptr<WordPieceTokenizer> FromFile(const std::string &path);

  std::vector<std::string> Tokenize(const std::string &word) const override;
  std::string Describe() const override { return "wordpiece:" + source_; }

 private:
  std::unordered_set<std::string> pieces_;
  size_t max_piece_length_ = 0;
  std::string source_;
};

// "identity" or "wordpiece:<path to one piece per line>".
std::unique_ptr<Tokenizer> MakeTokenizer(const std::string &spec);

// Subword-level view of a sentence. Position 0 is ROOT and the last position
// is SEP, mirroring the word-level layout.
struct AlignedSentence {
  std::vector<std::string> subwords;
  std::vector<std::string> pos_tags;
  // Token position (0 = ROOT, 1..n words, n+1 = SEP) -> subword position.
  std::vector<int> word_to_first_subword;
  // Subword position -> owning token position.
  std::vector<int> subword_to_word;
  DependencyGraph graph;

  int size() const { return static_cast<int>(subwords.size()); }
};

// Word-level arcs become arcs between first subwords. Each non-first subword
// receives an arc from its word's first subword labelled kSubwordLabel.
AlignedSentence AlignSubwords(const Sentence &sentence,
                              const DependencyGraph &syn,
                              const Tokenizer &tokenizer);

// Maps word-level SRL indices to first-subword positions.
SrlGraph ToSubwordPositions(const SrlGraph &graph,
                            const AlignedSentence &aligned);

}  // namespace syng2g

#endif  // SYNG2G_SUBWORD_H_
