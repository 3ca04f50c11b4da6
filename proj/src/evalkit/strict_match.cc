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

#include "guardgate/evalkit/strict_match.h"

#include <algorithm>
#include <tuple>

#include "guardgate/core/error.h"

namespace guardgate::evalkit {
namespace {

auto Key(const Span& s) { return std::tie(s.start, s.end, s.label); }

}  // namespace

std::map<std::string, MatchCounts> MatchExample(const std::vector<Span>& gold,
                                                const std::vector<Span>& pred) {
  // Exact-match only, so matching greedily in sorted order is optimal:
  // a prediction can only ever pair with gold spans carrying its own key.
  std::vector<const Span*> g, p;
  for (const Span& s : gold) g.push_back(&s);
  for (const Span& s : pred) p.push_back(&s);
  const auto less = [](const Span* a, const Span* b) { return Key(*a) < Key(*b); };
  std::sort(g.begin(), g.end(), less);
  std::sort(p.begin(), p.end(), less);

  std::map<std::string, MatchCounts> out;
  size_t i = 0, j = 0;
  while (i < g.size() || j < p.size()) {
    if (j == p.size() || (i < g.size() && less(g[i], p[j]))) {
      ++out[g[i++]->label].fn;
    } else if (i == g.size() || less(p[j], g[i])) {
      ++out[p[j++]->label].fp;
    } else {
      ++out[g[i]->label].tp;
      ++i;
      ++j;
    }
  }
  return out;
}

EvalReport StrictMatchF1(const std::vector<BenchExample>& gold,
                         const std::vector<Prediction>& pred) {
  if (gold.size() != pred.size()) {
    throw InvalidArgument("strict_match_f1: " + std::to_string(gold.size()) +
                          " gold examples vs " + std::to_string(pred.size()) +
                          " predictions");
  }
  EvalReport report;
  std::map<std::string, MatchCounts> per_label;
  std::map<std::string, MatchCounts> per_domain;
  for (size_t k = 0; k < gold.size(); ++k) {
    if (gold[k].id != pred[k].id) {
      throw InvalidArgument("strict_match_f1: id mismatch at position " +
                            std::to_string(k) + ": '" + gold[k].id + "' vs '" +
                            pred[k].id + "'");
    }
    MatchCounts& domain = per_domain[gold[k].domain];
    for (const auto& [label, c] : MatchExample(gold[k].gold, pred[k].spans)) {
      per_label[label] += c;
      domain += c;
    }
  }

  MatchCounts pooled;
  std::vector<double> f1s;
  for (const auto& [label, c] : per_label) {
    const Prf prf = PrfFromCounts(c.tp, c.fp, c.fn);
    report.per_label[label] = {c, prf};
    pooled += c;
    if (c.tp + c.fp + c.fn > 0) f1s.push_back(prf.f1);
  }
  for (const auto& [domain, c] : per_domain) {
    report.per_domain[domain] = PrfFromCounts(c.tp, c.fp, c.fn).f1;
  }
  report.macro_f1 = UnweightedMean(f1s);
  report.micro_f1 = PrfFromCounts(pooled.tp, pooled.fp, pooled.fn).f1;
  report.char_stats = ComputeCharStats(gold);
  report.examples = static_cast<int64_t>(gold.size());
  return report;
}

}  // namespace guardgate::evalkit
