// Copyright 2026 The Guardgate Authors
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

#include "tests/oracles/match_oracle.h"

namespace guardgate::oracle {

std::map<std::string, OracleCounts> BruteForceMatch(
    const std::vector<std::vector<OracleSpan>>& gold,
    const std::vector<std::vector<OracleSpan>>& pred) {
  std::map<std::string, OracleCounts> counts;
  for (size_t ex = 0; ex < gold.size(); ++ex) {
    std::vector<bool> used(gold[ex].size(), false);
    for (const OracleSpan& p : pred[ex]) {
      bool hit = false;
      for (size_t g = 0; g < gold[ex].size(); ++g) {
        const OracleSpan& s = gold[ex][g];
        if (!used[g] && s.start == p.start && s.end == p.end &&
            s.label == p.label) {
          used[g] = true;
          hit = true;
          break;
        }
      }
      if (hit) {
        counts[p.label].tp += 1;
      } else {
        counts[p.label].fp += 1;
      }
    }
    for (size_t g = 0; g < gold[ex].size(); ++g) {
      if (!used[g]) counts[gold[ex][g].label].fn += 1;
    }
  }
  return counts;
}

}  // namespace guardgate::oracle
