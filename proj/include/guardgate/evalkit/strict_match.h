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

#ifndef GUARDGATE_EVALKIT_STRICT_MATCH_H_
#define GUARDGATE_EVALKIT_STRICT_MATCH_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "guardgate/core/span.h"
#include "guardgate/evalkit/bench.h"
#include "guardgate/evalkit/metrics.h"

namespace guardgate::evalkit {

struct MatchCounts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;

  MatchCounts& operator+=(const MatchCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

// Per-label counts for one example. A prediction is a true positive iff an
// unmatched gold span has the same start, end and label.
std::map<std::string, MatchCounts> MatchExample(const std::vector<Span>& gold,
                                                const std::vector<Span>& pred);

struct LabelScore {
  MatchCounts counts;
  Prf prf;

  friend bool operator==(const LabelScore&, const LabelScore&) = default;
};

struct EvalReport {
  std::map<std::string, LabelScore> per_label;
  // Pooled (micro) F1 over all labels within each domain.
  std::map<std::string, double> per_domain;
  // Unweighted mean over labels with at least one gold or predicted span.
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
  CharStats char_stats;
  int64_t examples = 0;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct Prediction {
  std::string id;
  std::vector<Span> spans;
};

// `pred` must list the same ids in the same order as `gold`; throws
// InvalidArgument otherwise.
EvalReport StrictMatchF1(const std::vector<BenchExample>& gold,
                         const std::vector<Prediction>& pred);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_STRICT_MATCH_H_
