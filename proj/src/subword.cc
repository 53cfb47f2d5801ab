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

#include "syng2g/subword.h"

#include <algorithm>
#include <fstream>

namespace syng2g {

std::vector<std::string> IdentityTokenizer::Tokenize(
    const std::string &word) const {
  if (word.empty()) return {};
  return {word};
}

WordPieceTokenizer::WordPieceTokenizer(std::vector<std::string> pieces,
                                       std::string source)
    : source_(std::move(source)) {
  for (std::string &p : pieces) {
    if (p.empty()) continue;
    max_piece_length_ = std::max(max_piece_length_, p.size());
    pieces_.insert(std::move(p));
  }
}

std::unique_ptr<WordPieceTokenizer> WordPieceTokenizer::FromFile(
    const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open wordpiece inventory " + path);
  std::vector<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pieces.push_back(line);
  }
  return std::make_unique<WordPieceTokenizer>(std::move(pieces), path);
}

std::vector<std::string> WordPieceTokenizer::Tokenize(
    const std::string &word) const {
  if (word.empty()) return {};
  std::vector<std::string> out;
  size_t start = 0;
  while (start < word.size()) {
    size_t len = std::min(word.size() - start, max_piece_length_);
    std::string match;
    for (; len > 0; --len) {
      std::string candidate = word.substr(start, len);
      if (start > 0) candidate = "##" + candidate;
      if (pieces_.count(candidate)) {
        match = std::move(candidate);
        break;
      }
    }
    if (match.empty()) return {kUnknownToken};
    out.push_back(std::move(match));
    start += len;
  }
  return out;
}

std::unique_ptr<Tokenizer> MakeTokenizer(const std::string &spec) {
  if (spec.empty() || spec == "identity") {
    return std::make_unique<IdentityTokenizer>();
  }
  const std::string prefix = "wordpiece:";
  if (spec.rfind(prefix, 0) == 0) {
    return WordPieceTokenizer::FromFile(spec.substr(prefix.size()));
  }
  throw Error("unknown tokenizer '" + spec + "'");
}

AlignedSentence AlignSubwords(const Sentence &sentence,
                              const DependencyGraph &syn,
                              const Tokenizer &tokenizer) {
  const int n = sentence.num_words();
  AlignedSentence out;
  out.word_to_first_subword.resize(n + 2);

  out.subwords.push_back(kRootToken);
  out.pos_tags.push_back(kRootToken);
  out.subword_to_word.push_back(kRootPosition);
  out.word_to_first_subword[kRootPosition] = 0;

  std::vector<std::pair<int, int>> continuation;  // (first, piece) positions
  for (int w = 1; w <= n; ++w) {
    std::vector<std::string> pieces = tokenizer.Tokenize(sentence.words[w - 1]);
    if (pieces.empty()) {
      throw Error("word " + std::to_string(w) + " ('" + sentence.words[w - 1] +
                  "') tokenises to zero subwords");
    }
    const int first = out.size();
    out.word_to_first_subword[w] = first;
    for (size_t p = 0; p < pieces.size(); ++p) {
      if (p > 0) continuation.emplace_back(first, out.size());
      out.subwords.push_back(std::move(pieces[p]));
      out.pos_tags.push_back(sentence.pos_tags[w - 1]);
      out.subword_to_word.push_back(w);
    }
  }
  out.word_to_first_subword[n + 1] = out.size();
  out.subwords.push_back(kSepToken);
  out.pos_tags.push_back(kSepToken);
  out.subword_to_word.push_back(n + 1);

  for (const Arc &arc : syn.arcs) {
    out.graph.arcs.push_back({out.word_to_first_subword.at(arc.head),
                              out.word_to_first_subword.at(arc.dependent),
                              arc.label});
  }
  for (auto [first, piece] : continuation) {
    out.graph.arcs.push_back({first, piece, kSubwordLabel});
  }
  return out;
}

SrlGraph ToSubwordPositions(const SrlGraph &graph,
                            const AlignedSentence &aligned) {
  SrlGraph out;
  out.style = graph.style;
  for (const SrlTuple &t : graph.tuples) {
    out.tuples.push_back({aligned.word_to_first_subword.at(t.predicate),
                          aligned.word_to_first_subword.at(t.start),
                          aligned.word_to_first_subword.at(t.end), t.label});
  }
  return out;
}

}  // namespace syng2g
