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

#include <random>

#include "doctest.h"
#include "syng2g/relation_matrix.h"
#include "syng2g/types.h"
#include "testing.h"

namespace syng2g {
namespace {

TEST_CASE("relation ids encode label and direction") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const int labels = 1 + trial % 4;
    std::vector<int> heads = testing::RandomHeads(n, rng);
    std::uniform_int_distribution<int> label(0, labels - 1);
    std::vector<LabeledArc> arcs;
    for (int d = 1; d <= n; ++d) arcs.push_back({heads[d], d, label(rng)});
    RelationMatrix m = BuildRelationMatrix(arcs, n + 2, labels);
    CHECK(m.size() == n + 2);
    CHECK(m.none_id() == 2 * labels);
    CHECK(m.table_rows() == 2 * labels + 1);
    CHECK(m.CountRelations() == 2 * n);
    for (int i = 0; i < n + 2; ++i) {
      for (int j = 0; j < n + 2; ++j) {
        int expected = 2 * labels;
        for (const LabeledArc &a : arcs) {
          if (a.head == i && a.dependent == j) expected = a.label;
          if (a.head == j && a.dependent == i) expected = a.label + labels;
        }
        CHECK(m(i, j) == expected);
      }
    }
    // SEP takes part in no relation.
    for (int j = 0; j < n + 2; ++j) CHECK(m(n + 1, j) == m.none_id());
  }
}

TEST_CASE("relation matrix rejects malformed arcs") {
  CHECK_THROWS_AS(BuildRelationMatrix({{0, 3, 0}}, 3, 1), Error);
  CHECK_THROWS_AS(BuildRelationMatrix({{-1, 1, 0}}, 3, 1), Error);
  CHECK_THROWS_AS(BuildRelationMatrix({{1, 1, 0}}, 3, 1), Error);
  CHECK_THROWS_AS(BuildRelationMatrix({{0, 1, 2}}, 3, 2), Error);
  CHECK_THROWS_AS(BuildRelationMatrix({{0, 1, 0}, {2, 1, 0}}, 3, 1), Error);
  CHECK_THROWS_AS(BuildRelationMatrix({{1, 2, 0}, {2, 1, 0}}, 3, 1), Error);
  CHECK_NOTHROW(BuildRelationMatrix({}, 0, 0));
}

TEST_CASE("relation matrix csv") {
  RelationMatrix m = BuildRelationMatrix({{0, 1, 0}}, 2, 1);
  CHECK(m.ToCsv() == "2,0\n1,2\n");
}

}  // namespace
}  // namespace syng2g
