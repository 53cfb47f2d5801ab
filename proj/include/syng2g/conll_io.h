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

#ifndef SYNG2G_CONLL_IO_H_
#define SYNG2G_CONLL_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "syng2g/types.h"

namespace syng2g {

// CoNLL-2009 columns: ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD
// DEPREL PDEPREL FILLPRED PRED APRED1..APREDk. The predicted columns (PPOS,
// PHEAD, PDEPREL) feed the sentence and dependency graph, falling back to
// the gold columns when a predicted field is "_". Argument columns become a
// dependency-style SRL graph and FILLPRED=Y rows the predefined predicates.
std::vector<CorpusRecord> ReadConll2009(std::istream &in,
                                        const std::string &name = "<stream>");
std::vector<CorpusRecord> ReadConll2009File(const std::string &path);

// Writes one block per record. Predicate columns come from `srl[i]` and any
// predefined predicates of the record.
void WriteConll2009(std::ostream &out, const std::vector<CorpusRecord> &records,
                    const std::vector<SrlGraph> &srl);

// One JSON object per line:
//   {"words": [...], "pos": [...], "heads": [...], "deprels": [...],
//    "srl": [{"pred": k, "start": i, "end": j, "label": "A0"}, ...],
//    "predicates": [...], "style": "span" | "dependency"}
// Indices are 1-based word positions and head 0 is ROOT. "predicates" and
// "style" are optional; without "style" a graph whose arguments are all
// single tokens is read as dependency-based.
std::vector<CorpusRecord> ReadJsonl(std::istream &in,
                                    const std::string &name = "<stream>");
std::vector<CorpusRecord> ReadJsonlFile(const std::string &path);
void WriteJsonl(std::ostream &out, const std::vector<CorpusRecord> &records);
void WriteJsonlFile(const std::string &path,
                    const std::vector<CorpusRecord> &records);

// Dispatches on extension: ".jsonl"/".json" -> JSONL, anything else CoNLL-2009.
std::vector<CorpusRecord> ReadCorpus(const std::string &path);

}  // namespace syng2g

#endif  // SYNG2G_CONLL_IO_H_
