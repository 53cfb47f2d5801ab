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

#ifndef SYNG2G_SYNTHETIC_H_
#define SYNG2G_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "syng2g/types.h"

namespace syng2g {

// Toy English-like corpus with gold dependency trees and predicate-argument
// structure (A0, A1, AM-LOC, AM-TMP), used for smoke tests and demos. The
// same seed always yields the same corpus. Dependency-style records keep the
// head word of each argument; span-style records keep whole phrases.
std::vector<CorpusRecord> SyntheticCorpus(int num_sentences, SrlStyle style,
                                          uint64_t seed);

}  // namespace syng2g

#endif  // SYNG2G_SYNTHETIC_H_
