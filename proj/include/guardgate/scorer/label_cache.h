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

#ifndef GUARDGATE_SCORER_LABEL_CACHE_H_
#define GUARDGATE_SCORER_LABEL_CACHE_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "guardgate/core/schema.h"

namespace guardgate::scorer {

// Hashed character-trigram counts. Text is case-folded, whitespace runs
// collapse to one space, and the string is padded with a space on each end.
inline constexpr int kTrigramBuckets = 1024;

struct SparseProfile {
  std::vector<std::pair<uint32_t, float>> counts;  // sorted by bucket
  double norm = 0.0;
};

struct DenseProfile {
  std::vector<float> values;
  double norm = 0.0;

  friend bool operator==(const DenseProfile&, const DenseProfile&) = default;
};

SparseProfile TrigramProfile(std::u32string_view text);
DenseProfile DenseTrigramProfile(std::u32string_view text);
// Cosine similarity; 0 when either side is empty.
double Cosine(const SparseProfile& text, const DenseProfile& label);

// Precomputed label representations for one schema. Depends only on the
// schema, never on request text.
struct LabelEncoding {
  uint64_t schema_hash = 0;
  // [task][label], in schema order.
  std::vector<std::vector<DenseProfile>> task_labels;
  std::vector<DenseProfile> entities;

  friend bool operator==(const LabelEncoding&, const LabelEncoding&) = default;
};

LabelEncoding EncodeLabels(const GuardSchema& schema);

// schema_hash -> LabelEncoding. Concurrent readers, exclusive writers.
class LabelCache {
 public:
  std::shared_ptr<const LabelEncoding> GetOrEncode(const GuardSchema& schema);

  int64_t hits() const { return hits_.load(); }
  int64_t misses() const { return misses_.load(); }
  size_t size() const;

 private:
  struct Entry {
    std::string canonical;
    std::shared_ptr<const LabelEncoding> encoding;
  };
  mutable std::shared_mutex mu_;
  std::map<uint64_t, Entry> entries_;
  std::atomic<int64_t> hits_{0};
  std::atomic<int64_t> misses_{0};
};

// Cache lookup; on a miss the schema is encoded and inserted.
std::shared_ptr<const LabelEncoding> CachedLabelEncode(const GuardSchema& schema,
                                                       LabelCache& cache);

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_LABEL_CACHE_H_
