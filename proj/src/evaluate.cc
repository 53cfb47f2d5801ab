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

#include "syng2g/evaluate.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"

namespace syng2g {

Prf TupleCounts::Score() const {
  Prf s;
  s.precision = predicted > 0 ? static_cast<double>(correct) / predicted : 0.0;
  s.recall = gold > 0 ? static_cast<double>(correct) / gold : 0.0;
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

TupleCounts &TupleCounts::operator+=(const TupleCounts &other) {
  correct += other.correct;
  predicted += other.predicted;
  gold += other.gold;
  return *this;
}

TupleCounts BinTable::Total() const {
  TupleCounts total;
  for (const TupleCounts &c : counts) total += c;
  return total;
}

int SentenceLengthBin(int num_words) { return std::min(num_words / 10, 4); }

int DependencyLength(const SrlTuple &t) {
  if (t.predicate >= t.start && t.predicate <= t.end) return 0;
  return std::min(std::abs(t.predicate - t.start), std::abs(t.predicate - t.end));
}

int DependencyLengthBin(int distance) {
  return std::clamp(distance, 1, 6) - 1;
}

TupleCounts CountTuples(const SrlGraph &prediction, const SrlGraph &gold) {
  std::set<SrlTuple> p(prediction.tuples.begin(), prediction.tuples.end());
  std::set<SrlTuple> g(gold.tuples.begin(), gold.tuples.end());
  TupleCounts c;
  c.predicted = static_cast<int64_t>(p.size());
  c.gold = static_cast<int64_t>(g.size());
  for (const SrlTuple &t : p) c.correct += g.count(t);
  return c;
}

ErrorBins ComputeErrorBins(const std::vector<SrlGraph> &predictions,
                           const std::vector<CorpusRecord> &gold) {
  if (predictions.size() != gold.size()) {
    throw Error("evaluation: " + std::to_string(predictions.size()) +
                " predictions for " + std::to_string(gold.size()) +
                " gold sentences");
  }
  ErrorBins out;
  out.sentence_length.bins = SentenceLengthBins();
  out.sentence_length.counts.resize(SentenceLengthBins().size());
  out.dependency_length.bins = DependencyLengthBins();
  out.dependency_length.counts.resize(DependencyLengthBins().size());
  for (size_t s = 0; s < gold.size(); ++s) {
    TupleCounts &by_len =
        out.sentence_length.counts[SentenceLengthBin(gold[s].sentence.num_words())];
    by_len += CountTuples(predictions[s], gold[s].gold_srl);
    std::set<SrlTuple> p(predictions[s].tuples.begin(), predictions[s].tuples.end());
    std::set<SrlTuple> g(gold[s].gold_srl.tuples.begin(),
                         gold[s].gold_srl.tuples.end());
    for (const SrlTuple &t : p) {
      TupleCounts &c =
          out.dependency_length.counts[DependencyLengthBin(DependencyLength(t))];
      ++c.predicted;
      c.correct += g.count(t);
    }
    for (const SrlTuple &t : g) {
      ++out.dependency_length.counts[DependencyLengthBin(DependencyLength(t))].gold;
    }
  }
  return out;
}

EvalReport Evaluate(const std::vector<SrlGraph> &predictions,
                    const std::vector<CorpusRecord> &gold, PredicateMode mode) {
  EvalReport report;
  report.mode = mode;
  report.bins = ComputeErrorBins(predictions, gold);
  for (size_t s = 0; s < gold.size(); ++s) {
    report.overall += CountTuples(predictions[s], gold[s].gold_srl);
  }
  if (!gold.empty()) report.style = gold.front().gold_srl.style;
  return report;
}

namespace {

nlohmann::json CountsJson(const TupleCounts &c) {
  Prf s = c.Score();
  return {{"correct", c.correct}, {"predicted", c.predicted}, {"gold", c.gold},
          {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

nlohmann::json TableJson(const BinTable &t) {
  nlohmann::json out = nlohmann::json::array();
  for (size_t b = 0; b < t.bins.size(); ++b) {
    nlohmann::json row = CountsJson(t.counts[b]);
    row["bin"] = t.bins[b];
    out.push_back(row);
  }
  return out;
}

void CsvRow(std::ostream &out, const std::string &table, const std::string &bin,
            const TupleCounts &c) {
  Prf s = c.Score();
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f", s.precision, s.recall, s.f1);
  out << table << ',' << bin << ',' << c.correct << ',' << c.predicted << ','
      << c.gold << ',' << buf << '\n';
}

}  // namespace

std::string EvalReport::ToJson() const {
  nlohmann::json j = CountsJson(overall);
  j["mode"] = ModeName(mode);
  j["style"] = StyleName(style);
  j["sentence_length"] = TableJson(bins.sentence_length);
  j["dependency_length"] = TableJson(bins.dependency_length);
  if (gold_recall >= 0.0) j["gold_recall"] = gold_recall;
  return j.dump(2) + "\n";
}

std::string EvalReport::ToCsv() const {
  std::ostringstream out;
  out << "table,bin,correct,predicted,gold,precision,recall,f1\n";
  CsvRow(out, "overall", "all", overall);
  for (size_t b = 0; b < bins.sentence_length.bins.size(); ++b) {
    CsvRow(out, "sentence_length", bins.sentence_length.bins[b],
           bins.sentence_length.counts[b]);
  }
  for (size_t b = 0; b < bins.dependency_length.bins.size(); ++b) {
    CsvRow(out, "dependency_length", bins.dependency_length.bins[b],
           bins.dependency_length.counts[b]);
  }
  return out.str();
}

std::string BinComparisonCsv(const std::vector<std::string> &names,
                             const std::vector<BinTable> &tables) {
  if (names.size() != tables.size()) throw Error("one name per bin table expected");
  std::ostringstream out;
  out << "model";
  if (!tables.empty()) {
    for (const std::string &b : tables.front().bins) out << ',' << b;
  }
  out << '\n';
  for (size_t m = 0; m < tables.size(); ++m) {
    out << names.at(m);
    for (const TupleCounts &c : tables[m].counts) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * c.Score().f1);
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string BinComparisonSvg(const std::string &title,
                             const std::vector<std::string> &names,
                             const std::vector<BinTable> &tables) {
  if (names.size() != tables.size()) throw Error("one name per bin table expected");
  static const char *kColours[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                   "#76b7b2", "#edc948"};
  const int bins = tables.empty() ? 0 : static_cast<int>(tables.front().bins.size());
  const int series = static_cast<int>(tables.size());
  const double left = 50, top = 40, height = 200;
  const double group = 20.0 + 16.0 * std::max(series, 1);
  const double width = left + 20 + group * bins;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 140
      << "\" height=\"" << top + height + 50 << "\">\n";
  svg << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">" << title
      << "</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top + height << "\" x2=\""
      << width << "\" y2=\"" << top + height << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    double y = top + height - height * t / 4.0;
    svg << "<text x=\"5\" y=\"" << y + 4 << "\" font-size=\"10\">" << t * 25
        << "</text>\n";
  }
  for (int b = 0; b < bins; ++b) {
    double x0 = left + 10 + group * b;
    for (int m = 0; m < series; ++m) {
      double f1 = tables[m].counts[b].Score().f1;
      double h = height * f1;
      svg << "<rect x=\"" << x0 + 16.0 * m << "\" y=\"" << top + height - h
          << "\" width=\"14\" height=\"" << h << "\" fill=\""
          << kColours[m % 6] << "\"/>\n";
    }
    svg << "<text x=\"" << x0 << "\" y=\"" << top + height + 15
        << "\" font-size=\"10\">" << tables[0].bins[b] << "</text>\n";
  }
  for (int m = 0; m < series; ++m) {
    double y = top + 14.0 * m;
    svg << "<rect x=\"" << width + 10 << "\" y=\"" << y << "\" width=\"10\" "
        << "height=\"10\" fill=\"" << kColours[m % 6] << "\"/>\n";
    svg << "<text x=\"" << width + 24 << "\" y=\"" << y + 9
        << "\" font-size=\"10\">" << names.at(m) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace syng2g
