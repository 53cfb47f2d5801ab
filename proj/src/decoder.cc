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

#include "syng2g/decoder.h"

#include <algorithm>
#include <limits>

namespace syng2g {

std::vector<DecodedArgument> DecodePredicate(const DecodeProblem &problem) {
  const int n = problem.num_words;
  // Best positive-margin label for each candidate span.
  std::vector<std::vector<DecodedArgument>> starting_at(n + 2);
  for (const DecodeCandidate &c : problem.candidates) {
    if (c.span.start < 1 || c.span.end > n || c.span.start > c.span.end) {
      throw Error("decode: candidate span outside sentence");
    }
    const double none = c.scores.at(Vocabulary::kNoneSrlId);
    DecodedArgument best{c.span, -1, 0.0};
    for (int l = 0; l < static_cast<int>(c.scores.size()); ++l) {
      if (l == Vocabulary::kNoneSrlId) continue;
      double margin = c.scores[l] - none;
      if (margin > 0.0 && (best.label < 0 || margin > best.margin)) {
        best.label = l;
        best.margin = margin;
      }
    }
    if (best.label >= 0) starting_at[c.span.start].push_back(best);
  }
  for (auto &list : starting_at) {
    std::sort(list.begin(), list.end(),
              [](const DecodedArgument &a, const DecodedArgument &b) {
                if (a.span.end != b.span.end) return a.span.end < b.span.end;
                return a.label < b.label;
              });
  }

  // best[p]: optimum over positions p..n; choice[p]: index into
  // starting_at[p] or -1 for leaving p unused.
  std::vector<double> best(n + 2, 0.0);
  std::vector<int> choice(n + 2, -1);
  for (int p = n; p >= 1; --p) {
    double value = best[p + 1];
    int pick = -1;
    const auto &list = starting_at[p];
    for (int c = static_cast<int>(list.size()) - 1; c >= 0; --c) {
      double v = list[c].margin + best[list[c].span.end + 1];
      if (v >= value) {
        value = v;
        pick = c;
      }
    }
    best[p] = value;
    choice[p] = pick;
  }

  std::vector<DecodedArgument> out;
  for (int p = 1; p <= n;) {
    if (choice[p] < 0) {
      ++p;
      continue;
    }
    const DecodedArgument &arg = starting_at[p][choice[p]];
    out.push_back(arg);
    p = arg.span.end + 1;
  }
  return out;
}

double ObjectiveValue(const std::vector<DecodedArgument> &arguments) {
  double total = 0.0;
  for (const DecodedArgument &a : arguments) total += a.margin;
  return total;
}

bool NonOverlapping(const std::vector<DecodedArgument> &arguments) {
  std::vector<Span> spans;
  for (const DecodedArgument &a : arguments) spans.push_back(a.span);
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].start <= spans[i - 1].end) return false;
  }
  return true;
}

SrlGraph DecodeSentence(const std::vector<DecodeProblem> &problems,
                        const Lexicon &labels, SrlStyle style) {
  SrlGraph graph;
  graph.style = style;
  for (const DecodeProblem &problem : problems) {
    for (const DecodedArgument &a : DecodePredicate(problem)) {
      graph.tuples.push_back(
          {problem.predicate, a.span.start, a.span.end, labels.token(a.label)});
    }
  }
  graph.Canonicalize();
  return graph;
}

std::vector<DecodeProblem> BuildDecodeProblems(const CandidateSet &candidates,
                                               const ScoreTensor &scores,
                                               int num_words, SrlStyle style,
                                               PredicateMode mode,
                                               double predicate_threshold) {
  std::vector<DecodeProblem> problems;
  const Matrix &logits = scores.logits.value();
  for (int p = 0; p < scores.num_predicates; ++p) {
    if (mode == PredicateMode::kEndToEnd &&
        !(candidates.predicate_scores[p] > predicate_threshold)) {
      continue;
    }
    DecodeProblem problem;
    problem.predicate = candidates.predicates[p];
    problem.num_words = num_words;
    problem.style = style;
    for (int s = 0; s < scores.num_spans; ++s) {
      const int row = scores.pair(p, s);
      DecodeCandidate c;
      c.span = candidates.spans[s];
      c.scores.resize(logits.cols());
      for (Eigen::Index l = 0; l < logits.cols(); ++l) c.scores[l] = logits(row, l);
      problem.candidates.push_back(std::move(c));
    }
    problems.push_back(std::move(problem));
  }
  return problems;
}

}  // namespace syng2g
