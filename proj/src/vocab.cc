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

#include "syng2g/vocab.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace syng2g {

Lexicon::Lexicon(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (int i = 0; i < size(); ++i) {
    if (!ids_.emplace(tokens_[i], i).second) {
      throw Error("duplicate lexicon entry '" + tokens_[i] + "'");
    }
  }
}

int Lexicon::Find(const std::string &token) const {
  auto it = ids_.find(token);
  return it == ids_.end() ? -1 : it->second;
}

int Lexicon::Lookup(const std::string &token, int fallback) const {
  int id = Find(token);
  return id < 0 ? fallback : id;
}

std::string Lexicon::Serialize() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) out << tokens_[i] << '\t' << i << '\n';
  return out.str();
}

Lexicon Lexicon::Parse(const std::string &text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw ParseError("vocab", lineno, "expected token<TAB>id");
    }
    if (std::stoi(line.substr(tab + 1)) != static_cast<int>(tokens.size())) {
      throw ParseError("vocab", lineno, "ids must be dense and ordered");
    }
    tokens.push_back(line.substr(0, tab));
  }
  return Lexicon(std::move(tokens));
}

int Vocabulary::RelationLabelId(const std::string &label) const {
  if (label == kSubwordLabel) return subword_label_id();
  return syn_labels.Find(label);
}

Vocabulary BuildVocab(const std::vector<CorpusRecord> &corpus,
                      const Tokenizer &tokenizer) {
  if (corpus.empty()) throw Error("cannot build vocabulary from empty corpus");
  std::set<std::string> subwords, pos, syn, srl;
  for (const CorpusRecord &r : corpus) {
    for (const std::string &w : r.sentence.words) {
      for (std::string &piece : tokenizer.Tokenize(w)) {
        subwords.insert(std::move(piece));
      }
    }
    pos.insert(r.sentence.pos_tags.begin(), r.sentence.pos_tags.end());
    for (const Arc &a : r.syn.arcs) syn.insert(a.label);
    for (const SrlTuple &t : r.gold_srl.tuples) srl.insert(t.label);
  }
  const std::vector<std::string> specials = {kUnknownToken, kRootToken,
                                             kSepToken};
  auto with_specials = [&](const std::set<std::string> &items) {
    std::vector<std::string> out = specials;
    for (const std::string &s : items) {
      if (std::find(specials.begin(), specials.end(), s) == specials.end()) {
        out.push_back(s);
      }
    }
    return Lexicon(std::move(out));
  };
  Vocabulary vocab;
  vocab.subwords = with_specials(subwords);
  vocab.pos_tags = with_specials(pos);
  syn.erase(kSubwordLabel);
  vocab.syn_labels = Lexicon({syn.begin(), syn.end()});
  std::vector<std::string> srl_tokens = {kNoneLabel};
  for (const std::string &s : srl) {
    if (s != kNoneLabel) srl_tokens.push_back(s);
  }
  vocab.srl_labels = Lexicon(std::move(srl_tokens));
  return vocab;
}

namespace {

const char *kVocabFiles[] = {"subwords.vocab", "pos.vocab", "syn_labels.vocab",
                             "srl_labels.vocab"};

}  // namespace

void SaveVocabulary(const Vocabulary &vocab, const std::string &directory) {
  std::filesystem::create_directories(directory);
  const Lexicon *lexicons[] = {&vocab.subwords, &vocab.pos_tags,
                               &vocab.syn_labels, &vocab.srl_labels};
  for (int i = 0; i < 4; ++i) {
    std::ofstream out(std::filesystem::path(directory) / kVocabFiles[i]);
    if (!out) throw Error("cannot write vocabulary to " + directory);
    out << lexicons[i]->Serialize();
  }
}

Vocabulary LoadVocabulary(const std::string &directory) {
  Vocabulary vocab;
  Lexicon *lexicons[] = {&vocab.subwords, &vocab.pos_tags, &vocab.syn_labels,
                         &vocab.srl_labels};
  for (int i = 0; i < 4; ++i) {
    std::ifstream in(std::filesystem::path(directory) / kVocabFiles[i]);
    if (!in) throw Error("cannot read vocabulary from " + directory);
    std::stringstream buf;
    buf << in.rdbuf();
    *lexicons[i] = Lexicon::Parse(buf.str());
  }
  return vocab;
}

}  // namespace syng2g
