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

#ifndef GUARDGATE_TESTS_ORACLES_MATCH_ORACLE_H_
#define GUARDGATE_TESTS_ORACLES_MATCH_ORACLE_H_

#include <map>
#include <string>
#include <vector>

// Brute-force strict span matcher. Independent of guardgate types.
namespace guardgate::oracle {

struct OracleSpan {
  int start;
  int end;
  std::string label;
};

struct OracleCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
};

// For every prediction, scans all gold spans for an unused exact match.
std::map<std::string, OracleCounts> BruteForceMatch(
    const std::vector<std::vector<OracleSpan>>& gold,
    const std::vector<std::vector<OracleSpan>>& pred);

}  // namespace guardgate::oracle

#endif  // GUARDGATE_TESTS_ORACLES_MATCH_ORACLE_H_
