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

#include "syng2g/srl_head.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace syng2g {

Vector SpanRepresentation(const Matrix &z, int start, int end) {
  if (start < 1 || end < start || end + 1 >= z.rows()) {
    throw Error("span <" + std::to_string(start) + "," + std::to_string(end) +
                "> outside sentence");
  }
  const Eigen::Index half = z.cols() / 2;
  Vector s(2 * half);
  s.head(half) = z.row(end + 1).head(half) - z.row(start).tail(half);
  s.tail(half) = z.row(end).head(half) - z.row(start + 1).tail(half);
  return s;
}

ad::Var SpanRepresentations(ad::Var z, const std::vector<Span> &spans) {
  std::vector<int> starts, starts_next, ends, ends_next;
  for (const Span &s : spans) {
    if (s.start < 1 || s.end < s.start || s.end + 1 >= z.rows()) {
      throw Error("span <" + std::to_string(s.start) + "," +
                  std::to_string(s.end) + "> outside sentence");
    }
    starts.push_back(s.start);
    starts_next.push_back(s.start + 1);
    ends.push_back(s.end);
    ends_next.push_back(s.end + 1);
  }
  const int half = static_cast<int>(z.cols()) / 2;
  ad::Var forward = ad::SliceCols(z, 0, half);
  ad::Var backward = ad::SliceCols(z, half, half);
  ad::Var right = ad::ConcatCols(
      {ad::GatherRows(forward, ends_next), ad::GatherRows(forward, ends)});
  ad::Var left = ad::ConcatCols(
      {ad::GatherRows(backward, starts), ad::GatherRows(backward, starts_next)});
  return ad::Sub(right, left);
}

std::vector<Span> EnumerateSpans(int num_words, SrlStyle style,
                                 int max_span_width) {
  const int width = style == SrlStyle::kDependency ? 1
                    : max_span_width > 0           ? max_span_width
                                                   : num_words;
  std::vector<Span> spans;
  for (int i = 1; i <= num_words; ++i) {
    for (int j = i; j <= num_words && j - i < width; ++j) spans.push_back({i, j});
  }
  return spans;
}

namespace {

// Two-layer scorer: w_out . ReLU(W_h x + b_h) + b_out.
ad::Var UnaryScore(ParamBinder &bind, ad::Var x, int hidden_w, int hidden_b,
                   int out_w, int out_b) {
  ad::Var hidden = ad::Relu(ad::AddRow(ad::MatMul(x, bind(hidden_w)), bind(hidden_b)));
  return ad::AddRow(ad::MatMul(hidden, bind(out_w)), bind(out_b));
}

}  // namespace

CandidateScores ScoreCandidates(ParamBinder &bind, const ModelConfig &config,
                                ad::Var word_z, SrlStyle style) {
  const int n = static_cast<int>(word_z.rows()) - 2;
  if (n <= 0) throw Error("cannot score candidates of an empty sentence");
  const HeadParams &h = bind.params()->head;
  CandidateScores out;
  out.spans = EnumerateSpans(n, style, config.max_span_width);
  ad::Var s = SpanRepresentations(word_z, out.spans);
  out.arg_reps = ad::Relu(ad::AddRow(ad::MatMul(s, bind(h.span_w)), bind(h.span_b)));
  out.arg_scores = UnaryScore(bind, out.arg_reps, h.arg_hidden_w, h.arg_hidden_b,
                              h.arg_out_w, h.arg_out_b);
  std::vector<int> words(n);
  std::iota(words.begin(), words.end(), 1);
  out.pred_reps = ad::GatherRows(word_z, words);
  out.pred_scores = UnaryScore(bind, out.pred_reps, h.pred_hidden_w,
                               h.pred_hidden_b, h.pred_out_w, h.pred_out_b);
  return out;
}

int PruneLimit(double lambda, int cap, int num_words) {
  // The epsilon keeps e.g. 0.6 * 10 from rounding up to 7.
  int by_ratio = static_cast<int>(std::ceil(lambda * num_words - 1e-9));
  return std::max(0, std::min(cap, by_ratio));
}

CandidateSet PruneCandidates(const CandidateScores &scores,
                             const ModelConfig &config, int num_words,
                             const std::optional<std::vector<int>> &predicates_given) {
  if (num_words <= 0) throw Error("cannot prune candidates of an empty sentence");
  CandidateSet out;
  const Matrix &arg = scores.arg_scores.value();
  std::vector<int> order(scores.spans.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (arg(a, 0) != arg(b, 0)) return arg(a, 0) > arg(b, 0);
    return scores.spans[a] < scores.spans[b];
  });
  int keep = std::min<int>(order.size(),
                           PruneLimit(config.lambda_span, config.max_spans, num_words));
  for (int r = 0; r < keep; ++r) {
    out.span_index.push_back(order[r]);
    out.spans.push_back(scores.spans[order[r]]);
    out.span_scores.push_back(arg(order[r], 0));
  }

  const Matrix &pred = scores.pred_scores.value();
  if (predicates_given) {
    for (int k : *predicates_given) {
      if (k < 1 || k > num_words) throw Error("given predicate out of range");
      out.predicates.push_back(k);
      out.predicate_scores.push_back(pred(k - 1, 0));
    }
    return out;
  }
  std::vector<int> words(num_words);
  std::iota(words.begin(), words.end(), 1);
  std::sort(words.begin(), words.end(), [&](int a, int b) {
    if (pred(a - 1, 0) != pred(b - 1, 0)) return pred(a - 1, 0) > pred(b - 1, 0);
    return a < b;
  });
  keep = std::min(num_words, PruneLimit(config.lambda_verb, config.max_verbs, num_words));
  for (int r = 0; r < keep; ++r) {
    out.predicates.push_back(words[r]);
    out.predicate_scores.push_back(pred(words[r] - 1, 0));
  }
  return out;
}

void AddGoldCandidates(const CandidateScores &scores, const SrlGraph &gold,
                       CandidateSet *candidates) {
  const Matrix &arg = scores.arg_scores.value();
  const Matrix &pred = scores.pred_scores.value();
  std::set<Span> have(candidates->spans.begin(), candidates->spans.end());
  std::set<int> have_pred(candidates->predicates.begin(),
                          candidates->predicates.end());
  std::map<Span, int> index;
  for (size_t i = 0; i < scores.spans.size(); ++i) index[scores.spans[i]] = i;
  for (const SrlTuple &t : gold.tuples) {
    const Span span{t.start, t.end};
    auto it = index.find(span);
    if (it != index.end() && have.insert(span).second) {
      candidates->span_index.push_back(it->second);
      candidates->spans.push_back(span);
      candidates->span_scores.push_back(arg(it->second, 0));
    }
    if (t.predicate >= 1 && t.predicate <= pred.rows() &&
        have_pred.insert(t.predicate).second) {
      candidates->predicates.push_back(t.predicate);
      candidates->predicate_scores.push_back(pred(t.predicate - 1, 0));
    }
  }
}

ad::Var LabelScores(ParamBinder &bind, ad::Var arg_reps, ad::Var pred_reps) {
  const HeadParams &h = bind.params()->head;
  ad::Var hidden = ad::AddRow(
      ad::MatMul(ad::ConcatCols({arg_reps, pred_reps}), bind(h.label_w)),
      bind(h.label_b));
  hidden = ad::LayerNorm(hidden, bind(h.label_norm_gain), bind(h.label_norm_bias));
  return ad::AddRow(ad::MatMul(hidden, bind(h.label_out_w)), bind(h.label_out_b));
}

ScoreTensor ScorePairs(ParamBinder &bind, const CandidateScores &scores,
                       const CandidateSet &candidates) {
  ScoreTensor out;
  out.num_predicates = static_cast<int>(candidates.predicates.size());
  out.num_spans = static_cast<int>(candidates.spans.size());
  std::vector<int> pair_pred, pair_span;
  for (int k : candidates.predicates) {
    for (int s : candidates.span_index) {
      pair_pred.push_back(k - 1);
      pair_span.push_back(s);
    }
  }
  ad::Tape *tape = bind.tape();
  const int num_labels = static_cast<int>(bind.params()->operator[](
      bind.params()->head.label_out_b).value.cols());
  if (pair_pred.empty()) {
    out.label_scores = tape->Constant(Matrix(0, num_labels));
    out.logits = tape->Constant(Matrix(0, num_labels));
    return out;
  }
  out.label_scores = LabelScores(bind, ad::GatherRows(scores.arg_reps, pair_span),
                                 ad::GatherRows(scores.pred_reps, pair_pred));
  ad::Var unary = ad::Add(ad::GatherRows(scores.pred_scores, pair_pred),
                          ad::GatherRows(scores.arg_scores, pair_span));
  ad::Var none = tape->Constant(Matrix::Zero(unary.rows(), 1));
  if (num_labels == 1) {
    out.logits = none;
  } else {
    out.logits = ad::ConcatCols(
        {none, ad::AddCol(ad::SliceCols(out.label_scores, 1, num_labels - 1), unary)});
  }
  return out;
}

std::vector<int> PairTargets(const CandidateSet &candidates,
                             const SrlGraph &gold, const Lexicon &srl_labels) {
  std::map<std::tuple<int, int, int>, int> index;
  for (const SrlTuple &t : gold.tuples) {
    index[{t.predicate, t.start, t.end}] =
        srl_labels.Lookup(t.label, Vocabulary::kNoneSrlId);
  }
  std::vector<int> targets;
  for (int k : candidates.predicates) {
    for (const Span &s : candidates.spans) {
      auto it = index.find({k, s.start, s.end});
      targets.push_back(it == index.end() ? Vocabulary::kNoneSrlId : it->second);
    }
  }
  return targets;
}

ad::Var SrlLoss(const ScoreTensor &scores, const std::vector<int> &targets) {
  if (scores.logits.rows() == 0) throw Error("SRL loss over an empty pair set");
  return ad::SoftmaxCrossEntropy(scores.logits, targets);
}

double GoldRecall(const CandidateSet &candidates, const SrlGraph &gold) {
  if (gold.tuples.empty()) return 1.0;
  std::set<int> preds(candidates.predicates.begin(), candidates.predicates.end());
  std::set<Span> spans(candidates.spans.begin(), candidates.spans.end());
  int kept = 0;
  for (const SrlTuple &t : gold.tuples) {
    if (preds.count(t.predicate) && spans.count(Span{t.start, t.end})) ++kept;
  }
  return static_cast<double>(kept) / gold.tuples.size();
}

}  // namespace syng2g
