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

#ifndef SYNG2G_CHECKPOINT_H_
#define SYNG2G_CHECKPOINT_H_

#include <iosfwd>
#include <string>

#include "syng2g/model.h"

namespace syng2g {

// Self-describing container: a magic line, the byte length of a JSON header
// (config, tokenizer, vocabularies and the name/shape of every tensor),
// the header itself, then each tensor's values as raw little-endian
// doubles in column-major order.
void SaveCheckpoint(const Model &model, std::ostream &out);
void SaveCheckpoint(const Model &model, const std::string &path);
Model LoadCheckpoint(std::istream &in);
Model LoadCheckpoint(const std::string &path);

}  // namespace syng2g

#endif  // SYNG2G_CHECKPOINT_H_
