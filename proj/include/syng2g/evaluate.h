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

#ifndef SYNG2G_EVALUATE_H_
#define SYNG2G_EVALUATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "syng2g/types.h"

namespace syng2g {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct TupleCounts {
  int64_t correct = 0;
  int64_t predicted = 0;
  int64_t gold = 0;

  // Zero denominators give zero scores.
  Prf Score() const;
  TupleCounts &operator+=(const TupleCounts &other);
  bool operator==(const TupleCounts &) const = default;
};

struct BinTable {
  std::vector<std::string> bins;
  std::vector<TupleCounts> counts;

  TupleCounts Total() const;
};

inline const std::vector<std::string> &SentenceLengthBins() {
  static const std::vector<std::string> bins = {"0-9", "10-19", "20-29",
                                                "30-39", "40+"};
  return bins;
}
inline const std::vector<std::string> &DependencyLengthBins() {
  static const std::vector<std::string> bins = {"1", "2", "3", "4", "5", "6+"};
  return bins;
}

int SentenceLengthBin(int num_words);
// Predicate-argument distance: |k - i| for single-token arguments, distance
// to the nearest endpoint (0 inside the span) otherwise.
int DependencyLength(const SrlTuple &tuple);
// Distances below 1 fall into the first bin.
int DependencyLengthBin(int distance);

struct ErrorBins {
  BinTable sentence_length;
  BinTable dependency_length;
};

// Tuples of each sentence are binned by its word count and by predicate-
// argument distance. Throws on list length mismatch.
ErrorBins ComputeErrorBins(const std::vector<SrlGraph> &predictions,
                           const std::vector<CorpusRecord> &gold);

struct EvalReport {
  PredicateMode mode = PredicateMode::kEndToEnd;
  SrlStyle style = SrlStyle::kSpan;
  TupleCounts overall;
  ErrorBins bins;
  // Mean fraction of gold tuples surviving pruning; negative if unknown.
  double gold_recall = -1.0;

  std::string ToJson() const;
  // "table,bin,correct,predicted,gold,precision,recall,f1" rows, including
  // an "overall" row.
  std::string ToCsv() const;
};

// A predicted tuple is correct iff predicate, span and label all match a
// gold tuple of the same sentence.
TupleCounts CountTuples(const SrlGraph &prediction, const SrlGraph &gold);

EvalReport Evaluate(const std::vector<SrlGraph> &predictions,
                    const std::vector<CorpusRecord> &gold, PredicateMode mode);

// Appendix-style comparison table, one row per named series:
// "model,<bin1>,<bin2>,..." holding F1 in percent.
std::string BinComparisonCsv(const std::vector<std::string> &names,
                             const std::vector<BinTable> &tables);

// Minimal grouped bar chart of per-bin F1, one colour per series.
std::string BinComparisonSvg(const std::string &title,
                             const std::vector<std::string> &names,
                             const std::vector<BinTable> &tables);

}  // namespace syng2g

#endif  // SYNG2G_EVALUATE_H_
