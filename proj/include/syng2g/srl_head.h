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

#ifndef SYNG2G_SRL_HEAD_H_
#define SYNG2G_SRL_HEAD_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syng2g/autodiff.h"
#include "syng2g/config.h"
#include "syng2g/encoder.h"
#include "syng2g/types.h"
#include "syng2g/vocab.h"

namespace syng2g {

// Inclusive argument span over token positions.
struct Span {
  int start = 0;
  int end = 0;
  auto operator<=>(const Span &) const = default;
};

// s_ij = [fz_{j+1}; fz_j] - [bz_i; bz_{i+1}] where fz and bz are the first
// and second halves of a row of Z. `z` holds one row per token position
// (ROOT, words, SEP), so j + 1 always exists for a word span.
Vector SpanRepresentation(const Matrix &z, int start, int end);
// Batched, differentiable form; one output row per span.
ad::Var SpanRepresentations(ad::Var z, const std::vector<Span> &spans);

// Every span of the sentence considered for pruning. Dependency-style
// arguments are single tokens; span-style arguments are bounded by
// max_span_width (0 = unbounded).
std::vector<Span> EnumerateSpans(int num_words, SrlStyle style,
                                 int max_span_width);

// Unary scores for every argument and predicate candidate.
struct CandidateScores {
  std::vector<Span> spans;
  ad::Var arg_reps;     // a_ij, |spans| x span_hidden
  ad::Var arg_scores;   // Phi_a, |spans| x 1
  ad::Var pred_reps;    // p_k = z_k for k = 1..n, n x hidden
  ad::Var pred_scores;  // Phi_p, n x 1
};

CandidateScores ScoreCandidates(ParamBinder &bind, const ModelConfig &config,
                                ad::Var word_z, SrlStyle style);

// Pruned candidates, each list sorted by score descending. Indices refer to
// CandidateScores::spans and to predicate positions (1-based words).
struct CandidateSet {
  std::vector<int> span_index;
  std::vector<Span> spans;
  std::vector<double> span_scores;
  std::vector<int> predicates;
  std::vector<double> predicate_scores;
};

// Number of candidates kept out of a sentence of n words.
int PruneLimit(double lambda, int cap, int num_words);

// Keeps the top min(cap, ceil(lambda * n)) spans and predicates. Ties go to
// the lower start, then the lower end (or lower position for predicates).
// With `predicates_given`, predicates are exactly that list, unpruned.
CandidateSet PruneCandidates(const CandidateScores &scores,
                             const ModelConfig &config, int num_words,
                             const std::optional<std::vector<int>> &predicates_given);

// Appends gold arguments and predicates missing from `candidates`. Gold spans
// that were never enumerated (wider than the width limit) are skipped.
void AddGoldCandidates(const CandidateScores &scores, const SrlGraph &gold,
                       CandidateSet *candidates);

// Label scores for every kept (predicate, span) pair, predicate-major.
struct ScoreTensor {
  int num_predicates = 0;
  int num_spans = 0;
  ad::Var label_scores;  // Phi_l, pairs x |L_srl|
  // Phi(p, a, l) = Phi_p + Phi_a + Phi_l for l != NONE; Phi(p, a, NONE) = 0.
  ad::Var logits;

  int pair(int predicate_slot, int span_slot) const {
    return predicate_slot * num_spans + span_slot;
  }
  double score(int predicate_slot, int span_slot, int label) const {
    return logits.value()(pair(predicate_slot, span_slot), label);
  }
};

// Phi_l(p, a) = W3 LN(W2 [a; p] + b2) + b3 for a batch of (a, p) rows.
ad::Var LabelScores(ParamBinder &bind, ad::Var arg_reps, ad::Var pred_reps);

ScoreTensor ScorePairs(ParamBinder &bind, const CandidateScores &scores,
                       const CandidateSet &candidates);

// Gold label id per pair (NONE when the pair is not a gold tuple).
std::vector<int> PairTargets(const CandidateSet &candidates,
                             const SrlGraph &gold, const Lexicon &srl_labels);

// Sum over kept pairs of -log softmax(Phi(p, a, .))[gold]. Throws on an
// empty pair set.
ad::Var SrlLoss(const ScoreTensor &scores, const std::vector<int> &targets);

// Fraction of gold tuples whose predicate and argument both survived
// pruning; 1 when there are no gold tuples.
double GoldRecall(const CandidateSet &candidates, const SrlGraph &gold);

}  // namespace syng2g

#endif  // SYNG2G_SRL_HEAD_H_
