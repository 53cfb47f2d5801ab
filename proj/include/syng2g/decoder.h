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

#ifndef SYNG2G_DECODER_H_
#define SYNG2G_DECODER_H_

#include <vector>

#include "syng2g/srl_head.h"
#include "syng2g/types.h"
#include "syng2g/vocab.h"

namespace syng2g {

// One argument candidate of a predicate with a score per SRL label; index
// Vocabulary::kNoneSrlId holds the NONE score.
struct DecodeCandidate {
  Span span;
  std::vector<double> scores;
};

struct DecodeProblem {
  int predicate = 0;
  int num_words = 0;
  SrlStyle style = SrlStyle::kSpan;
  std::vector<DecodeCandidate> candidates;
};

struct DecodedArgument {
  Span span;
  int label = 0;
  double margin = 0.0;  // score(label) - score(NONE)

  bool operator==(const DecodedArgument &) const = default;
};

// Picks labelled, pairwise non-overlapping arguments maximising the summed
// margin over NONE. Right-to-left dynamic program over word positions; on
// equal objective it prefers the earlier start, then the shorter span, then
// the lower label id. Arguments come back ordered by start.
std::vector<DecodedArgument> DecodePredicate(const DecodeProblem &problem);

// Sum of margins, accumulated in argument order.
double ObjectiveValue(const std::vector<DecodedArgument> &arguments);

// True if no two arguments share a token.
bool NonOverlapping(const std::vector<DecodedArgument> &arguments);

// Union of the per-predicate decodes with labels mapped through `labels`.
SrlGraph DecodeSentence(const std::vector<DecodeProblem> &problems,
                        const Lexicon &labels, SrlStyle style);

// Builds one problem per kept predicate from a score tensor. In end-to-end
// mode only predicates whose score exceeds `predicate_threshold` are
// admitted; predefined predicates are always decoded.
std::vector<DecodeProblem> BuildDecodeProblems(const CandidateSet &candidates,
                                               const ScoreTensor &scores,
                                               int num_words, SrlStyle style,
                                               PredicateMode mode,
                                               double predicate_threshold);

}  // namespace syng2g

#endif  // SYNG2G_DECODER_H_
