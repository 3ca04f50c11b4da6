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

#include "guardgate/evalkit/metrics.h"

#include <cmath>
#include <numeric>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"

namespace guardgate::evalkit {

Prf PrfFromCounts(int64_t tp, int64_t fp, int64_t fn) {
  Prf out;
  if (tp + fp > 0) out.precision = static_cast<double>(tp) / (tp + fp);
  if (tp + fn > 0) out.recall = static_cast<double>(tp) / (tp + fn);
  if (out.precision + out.recall > 0) {
    out.f1 = 2 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

double UnsafeF1(const std::vector<std::string>& gold,
                const std::vector<std::string>& pred) {
  if (gold.size() != pred.size()) {
    throw InvalidArgument("unsafe_f1: " + std::to_string(gold.size()) +
                          " gold labels vs " + std::to_string(pred.size()) +
                          " predictions");
  }
  int64_t tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    for (const std::string* l : {&gold[i], &pred[i]}) {
      if (*l != "safe" && *l != "unsafe") {
        throw InvalidArgument("unsafe_f1: unexpected label '" + *l + "'");
      }
    }
    const bool g = gold[i] == "unsafe";
    const bool p = pred[i] == "unsafe";
    tp += g && p;
    fp += !g && p;
    fn += g && !p;
  }
  if (tp + fp + fn == 0) return 1.0;
  return PrfFromCounts(tp, fp, fn).f1;
}

double NormalizedEfficiency(double f1_avg, const ModelCard& card) {
  if (card.param_count < 2) {
    throw InvalidArgument("param_count must be >= 2 for " + card.name);
  }
  return f1_avg / std::log2(static_cast<double>(card.param_count));
}

double UnweightedMean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
}

CharStats ComputeCharStats(const std::vector<BenchExample>& examples) {
  CharStats stats;
  for (const auto& ex : examples) {
    stats.total_chars += CodePointLength(ex.text);
    for (const Span& s : ex.gold) stats.pii_chars += s.length();
  }
  if (stats.total_chars > 0) {
    stats.pii_fraction =
        static_cast<double>(stats.pii_chars) / stats.total_chars;
  }
  return stats;
}

}  // namespace guardgate::evalkit
