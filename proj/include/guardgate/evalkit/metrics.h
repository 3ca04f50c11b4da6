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

#ifndef GUARDGATE_EVALKIT_METRICS_H_
#define GUARDGATE_EVALKIT_METRICS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "guardgate/core/verdict.h"
#include "guardgate/evalkit/bench.h"

namespace guardgate::evalkit {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const Prf&, const Prf&) = default;
};

// Zero denominators give zero, so f1 = 0 whenever P + R = 0.
Prf PrfFromCounts(int64_t tp, int64_t fp, int64_t fn);

// Binary F1 with "unsafe" as the positive class. Two lists without any
// unsafe label on either side score 1.0. Throws InvalidArgument on a
// length mismatch or a label outside {safe, unsafe}.
double UnsafeF1(const std::vector<std::string>& gold,
                const std::vector<std::string>& pred);

// f1_avg / log2(param_count). Throws InvalidArgument if param_count < 2.
double NormalizedEfficiency(double f1_avg, const ModelCard& card);

// Unweighted mean; 0 for an empty list.
double UnweightedMean(const std::vector<double>& values);

struct CharStats {
  int64_t total_chars = 0;
  int64_t pii_chars = 0;
  double pii_fraction = 0.0;

  friend bool operator==(const CharStats&, const CharStats&) = default;
};

// Counts code points; relies on gold spans being disjoint.
CharStats ComputeCharStats(const std::vector<BenchExample>& examples);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_METRICS_H_
