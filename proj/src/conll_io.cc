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

#include "syng2g/conll_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace syng2g {
namespace {

using json = nlohmann::json;

constexpr int kConllFixedColumns = 14;
enum ConllColumn {
  kId = 0, kForm = 1, kPos = 4, kPpos = 5, kHead = 8, kPhead = 9,
  kDeprel = 10, kPdeprel = 11, kFillPred = 12, kPred = 13,
};

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool ParseInt(const std::string &text, int *value) {
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *value);
  return ec == std::errc() && ptr == end && !text.empty();
}

const std::string &Predicted(const std::vector<std::string> &row, int predicted,
                             int gold) {
  return row[predicted] != "_" ? row[predicted] : row[gold];
}

struct PendingRow {
  int line;
  std::vector<std::string> fields;
};

CorpusRecord BuildConllRecord(const std::vector<PendingRow> &rows,
                              const std::string &name) {
  CorpusRecord record;
  const int n = static_cast<int>(rows.size());
  std::vector<int> predicates;
  for (int w = 1; w <= n; ++w) {
    const PendingRow &row = rows[w - 1];
    int id = 0;
    if (!ParseInt(row.fields[kId], &id) || id != w) {
      throw ParseError(name, row.line, "expected token ID " + std::to_string(w));
    }
    if (row.fields[kFillPred] == "Y") predicates.push_back(w);
  }
  const int expected = kConllFixedColumns + static_cast<int>(predicates.size());
  for (int w = 1; w <= n; ++w) {
    const PendingRow &row = rows[w - 1];
    const auto &f = row.fields;
    if (static_cast<int>(f.size()) != expected) {
      throw ParseError(name, row.line,
                       "expected " + std::to_string(expected) +
                           " columns, found " + std::to_string(f.size()));
    }
    record.sentence.words.push_back(f[kForm]);
    record.sentence.pos_tags.push_back(Predicted(f, kPpos, kPos));
    int head = 0;
    if (!ParseInt(Predicted(f, kPhead, kHead), &head)) {
      throw ParseError(name, row.line, "non-integer head '" +
                                           Predicted(f, kPhead, kHead) + "'");
    }
    if (head < 0 || head > n || head == w) {
      throw ParseError(name, row.line,
                       "head " + std::to_string(head) + " out of range");
    }
    record.syn.arcs.push_back({head, w, Predicted(f, kPdeprel, kDeprel)});
    for (size_t p = 0; p < predicates.size(); ++p) {
      const std::string &label = f[kConllFixedColumns + p];
      if (label != "_") record.gold_srl.tuples.push_back({predicates[p], w, w, label});
    }
  }
  record.gold_srl.style = SrlStyle::kDependency;
  record.predicates_given = std::move(predicates);
  return record;
}

SrlStyle InferStyle(const SrlGraph &graph) {
  for (const SrlTuple &t : graph.tuples) {
    if (t.start != t.end) return SrlStyle::kSpan;
  }
  return SrlStyle::kDependency;
}

template <typename T>
T Field(const json &obj, const char *key, const std::string &name, int line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(name, line, std::string("missing field '") + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception &e) {
    throw ParseError(name, line, std::string("field '") + key + "': " + e.what());
  }
}

CorpusRecord ParseJsonRecord(const json &obj, const std::string &name,
                             int line) {
  if (!obj.is_object()) throw ParseError(name, line, "expected a JSON object");
  CorpusRecord record;
  record.sentence.words = Field<std::vector<std::string>>(obj, "words", name, line);
  record.sentence.pos_tags = Field<std::vector<std::string>>(obj, "pos", name, line);
  auto heads = Field<std::vector<int>>(obj, "heads", name, line);
  auto deprels = Field<std::vector<std::string>>(obj, "deprels", name, line);
  const size_t n = record.sentence.words.size();
  if (record.sentence.pos_tags.size() != n || heads.size() != n ||
      deprels.size() != n) {
    throw ParseError(name, line, "words, pos, heads and deprels differ in length");
  }
  for (size_t w = 0; w < n; ++w) {
    record.syn.arcs.push_back({heads[w], static_cast<int>(w) + 1, deprels[w]});
  }
  auto srl = Field<json>(obj, "srl", name, line);
  if (!srl.is_array()) throw ParseError(name, line, "field 'srl' must be a list");
  for (const json &entry : srl) {
    SrlTuple t{Field<int>(entry, "pred", name, line),
               Field<int>(entry, "start", name, line),
               Field<int>(entry, "end", name, line),
               Field<std::string>(entry, "label", name, line)};
    if (t.start > t.end) {
      throw ParseError(name, line, "SRL argument start " +
                                       std::to_string(t.start) + " > end " +
                                       std::to_string(t.end));
    }
    record.gold_srl.tuples.push_back(std::move(t));
  }
  if (obj.contains("style")) {
    record.gold_srl.style = ParseStyle(Field<std::string>(obj, "style", name, line));
  } else {
    record.gold_srl.style = InferStyle(record.gold_srl);
  }
  if (obj.contains("predicates") && !obj["predicates"].is_null()) {
    record.predicates_given = Field<std::vector<int>>(obj, "predicates", name, line);
  }
  try {
    ValidateDependencyGraph(record.syn, static_cast<int>(n));
    ValidateSrlGraph(record.gold_srl, static_cast<int>(n));
    if (record.predicates_given) {
      for (int k : *record.predicates_given) {
        if (k < 1 || k > static_cast<int>(n)) throw Error("predicate out of range");
      }
    }
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(name, line, e.what());
  }
  return record;
}

}  // namespace

std::vector<CorpusRecord> ReadConll2009(std::istream &in,
                                        const std::string &name) {
  std::vector<CorpusRecord> records;
  std::vector<PendingRow> block;
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (!block.empty()) records.push_back(BuildConllRecord(block, name));
    block.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    std::vector<std::string> fields = SplitTabs(line);
    if (static_cast<int>(fields.size()) < kConllFixedColumns) {
      throw ParseError(name, lineno,
                       "expected at least 14 columns, found " +
                           std::to_string(fields.size()));
    }
    block.push_back({lineno, std::move(fields)});
  }
  flush();
  return records;
}

std::vector<CorpusRecord> ReadConll2009File(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadConll2009(in, path);
}

void WriteConll2009(std::ostream &out, const std::vector<CorpusRecord> &records,
                    const std::vector<SrlGraph> &srl) {
  if (records.size() != srl.size()) {
    throw Error("WriteConll2009: record and prediction counts differ");
  }
  for (size_t r = 0; r < records.size(); ++r) {
    const CorpusRecord &rec = records[r];
    const int n = rec.sentence.num_words();
    std::vector<int> predicates;
    if (rec.predicates_given) predicates = *rec.predicates_given;
    for (const SrlTuple &t : srl[r].tuples) predicates.push_back(t.predicate);
    std::sort(predicates.begin(), predicates.end());
    predicates.erase(std::unique(predicates.begin(), predicates.end()),
                     predicates.end());
    std::map<std::pair<int, int>, std::string> args;  // (predicate, word)
    for (const SrlTuple &t : srl[r].tuples) args[{t.predicate, t.start}] = t.label;

    std::vector<int> head(n + 1, 0);
    std::vector<std::string> deprel(n + 1, "_");
    for (const Arc &a : rec.syn.arcs) {
      if (a.dependent >= 1 && a.dependent <= n) {
        head[a.dependent] = a.head;
        deprel[a.dependent] = a.label;
      }
    }
    for (int w = 1; w <= n; ++w) {
      const std::string &form = rec.sentence.words[w - 1];
      const std::string &pos = rec.sentence.pos_tags[w - 1];
      bool is_pred = std::binary_search(predicates.begin(), predicates.end(), w);
      out << w << '\t' << form << "\t_\t_\t" << pos << '\t' << pos << "\t_\t_\t"
          << head[w] << '\t' << head[w] << '\t' << deprel[w] << '\t'
          << deprel[w] << '\t' << (is_pred ? "Y" : "_") << '\t'
          << (is_pred ? form : "_");
      for (int k : predicates) {
        auto it = args.find({k, w});
        out << '\t' << (it == args.end() ? "_" : it->second);
      }
      out << '\n';
    }
    out << '\n';
  }
}

std::vector<CorpusRecord> ReadJsonl(std::istream &in, const std::string &name) {
  std::vector<CorpusRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception &e) {
      throw ParseError(name, lineno, e.what());
    }
    records.push_back(ParseJsonRecord(obj, name, lineno));
  }
  return records;
}

std::vector<CorpusRecord> ReadJsonlFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadJsonl(in, path);
}

void WriteJsonl(std::ostream &out, const std::vector<CorpusRecord> &records) {
  for (const CorpusRecord &rec : records) {
    const int n = rec.sentence.num_words();
    std::vector<int> heads(n, 0);
    std::vector<std::string> deprels(n, "_");
    for (const Arc &a : rec.syn.arcs) {
      if (a.dependent >= 1 && a.dependent <= n) {
        heads[a.dependent - 1] = a.head;
        deprels[a.dependent - 1] = a.label;
      }
    }
    json srl = json::array();
    for (const SrlTuple &t : rec.gold_srl.tuples) {
      srl.push_back({{"pred", t.predicate},
                     {"start", t.start},
                     {"end", t.end},
                     {"label", t.label}});
    }
    json obj = {{"words", rec.sentence.words},
                {"pos", rec.sentence.pos_tags},
                {"heads", heads},
                {"deprels", deprels},
                {"srl", srl},
                {"style", StyleName(rec.gold_srl.style)}};
    if (rec.predicates_given) obj["predicates"] = *rec.predicates_given;
    out << obj.dump() << '\n';
  }
}

void WriteJsonlFile(const std::string &path,
                    const std::vector<CorpusRecord> &records) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  WriteJsonl(out, records);
}

std::vector<CorpusRecord> ReadCorpus(const std::string &path) {
  auto ends_with = [&](const std::string &suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".jsonl") || ends_with(".json")) return ReadJsonlFile(path);
  return ReadConll2009File(path);
}

}  // namespace syng2g
