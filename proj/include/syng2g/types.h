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

#ifndef SYNG2G_TYPES_H_
#define SYNG2G_TYPES_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syng2g {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by readers; carries the 1-based line number of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string &path, int line, const std::string &message)
      : Error(path + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Token positions are 0-based over the boundary-augmented sequence:
// position 0 is ROOT, words occupy 1..n and position n+1 is SEP. Word index w
// in the 1-based CoNLL numbering therefore lives at token position w.
inline constexpr int kRootPosition = 0;

struct Sentence {
  std::vector<std::string> words;
  std::vector<std::string> pos_tags;

  int num_words() const { return static_cast<int>(words.size()); }
  int num_tokens() const { return num_words() + 2; }
  int sep_position() const { return num_words() + 1; }

  bool operator==(const Sentence &) const = default;
};

// Labelled head -> dependent arc. The head may be ROOT (position 0).
struct Arc {
  int head = 0;
  int dependent = 0;
  std::string label;

  bool operator==(const Arc &) const = default;
};

struct DependencyGraph {
  std::vector<Arc> arcs;

  bool operator==(const DependencyGraph &) const = default;
};

enum class SrlStyle { kSpan, kDependency };

const char *StyleName(SrlStyle style);
SrlStyle ParseStyle(const std::string &name);

// Predicate k with argument span <start, end> (inclusive) and a role label.
struct SrlTuple {
  int predicate = 0;
  int start = 0;
  int end = 0;
  std::string label;

  auto operator<=>(const SrlTuple &) const = default;
};

struct SrlGraph {
  std::vector<SrlTuple> tuples;
  SrlStyle style = SrlStyle::kSpan;

  // Sorts tuples into canonical (predicate, start, end, label) order.
  void Canonicalize();
  bool operator==(const SrlGraph &) const = default;
};

// Throws Error if a tuple lies outside the word range [1, n], has
// start > end, or has start != end in a dependency-style graph.
void ValidateSrlGraph(const SrlGraph &graph, int num_words);

// Throws Error unless every word has exactly one head in [0, n] and no arc
// touches SEP.
void ValidateDependencyGraph(const DependencyGraph &graph, int num_words);

enum class PredicateMode { kEndToEnd, kPredefined };

const char *ModeName(PredicateMode mode);
PredicateMode ParseMode(const std::string &name);

struct CorpusRecord {
  Sentence sentence;
  DependencyGraph syn;
  SrlGraph gold_srl;
  std::optional<std::vector<int>> predicates_given;

  bool operator==(const CorpusRecord &) const = default;
};

}  // namespace syng2g

#endif  // SYNG2G_TYPES_H_
