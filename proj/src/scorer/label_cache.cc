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

#include "guardgate/scorer/label_cache.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "guardgate/core/unicode.h"

namespace guardgate::scorer {
namespace {

std::u32string Normalize(std::u32string_view text) {
  std::u32string out = U" ";
  for (char32_t c : text) {
    c = FoldCase(c);
    if (IsSpace(c)) {
      if (out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(c);
    }
  }
  if (out.back() != U' ') out.push_back(U' ');
  return out;
}

uint32_t Bucket(const char32_t* tri) {
  uint64_t h = 14695981039346656037ULL;
  for (int i = 0; i < 3; ++i) {
    uint32_t c = static_cast<uint32_t>(tri[i]);
    for (int b = 0; b < 4; ++b) {
      h ^= (c >> (8 * b)) & 0xFF;
      h *= 1099511628211ULL;
    }
  }
  return static_cast<uint32_t>(h % kTrigramBuckets);
}

}  // namespace

SparseProfile TrigramProfile(std::u32string_view text) {
  SparseProfile profile;
  const std::u32string norm = Normalize(text);
  if (norm.size() < 3 || norm == U" ") return profile;
  std::map<uint32_t, float> counts;
  for (size_t i = 0; i + 3 <= norm.size(); ++i) counts[Bucket(&norm[i])] += 1.0f;
  double sq = 0.0;
  for (const auto& [b, c] : counts) {
    profile.counts.emplace_back(b, c);
    sq += static_cast<double>(c) * c;
  }
  profile.norm = std::sqrt(sq);
  return profile;
}

DenseProfile DenseTrigramProfile(std::u32string_view text) {
  DenseProfile dense;
  dense.values.assign(kTrigramBuckets, 0.0f);
  const SparseProfile sparse = TrigramProfile(text);
  for (const auto& [b, c] : sparse.counts) dense.values[b] = c;
  dense.norm = sparse.norm;
  return dense;
}

double Cosine(const SparseProfile& text, const DenseProfile& label) {
  if (text.norm == 0.0 || label.norm == 0.0) return 0.0;
  double dot = 0.0;
  for (const auto& [b, c] : text.counts) {
    dot += static_cast<double>(c) * label.values[b];
  }
  return std::clamp(dot / (text.norm * label.norm), 0.0, 1.0);
}

LabelEncoding EncodeLabels(const GuardSchema& schema) {
  LabelEncoding enc;
  enc.schema_hash = schema.hash();
  for (const auto& task : schema.tasks()) {
    std::vector<DenseProfile> labels;
    for (const auto& label : task.labels) {
      labels.push_back(DenseTrigramProfile(DecodeUtf8(label)));
    }
    enc.task_labels.push_back(std::move(labels));
  }
  for (const auto& ent : schema.entity_types()) {
    enc.entities.push_back(
        DenseTrigramProfile(DecodeUtf8(ent.label + " " + ent.description)));
  }
  return enc;
}

std::shared_ptr<const LabelEncoding> LabelCache::GetOrEncode(
    const GuardSchema& schema) {
  const std::string canonical = CanonicalSchemaBytes(schema);
  {
    std::shared_lock lock(mu_);
    auto it = entries_.find(schema.hash());
    if (it != entries_.end() && it->second.canonical == canonical) {
      ++hits_;
      return it->second.encoding;
    }
  }
  ++misses_;
  auto encoding = std::make_shared<const LabelEncoding>(EncodeLabels(schema));
  std::unique_lock lock(mu_);
  auto [it, inserted] =
      entries_.try_emplace(schema.hash(), Entry{canonical, encoding});
  // A hash collision with different content keeps the first entry; the
  // fresh encoding is still returned to this caller.
  if (!inserted && it->second.canonical == canonical) return it->second.encoding;
  return encoding;
}

size_t LabelCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

std::shared_ptr<const LabelEncoding> CachedLabelEncode(const GuardSchema& schema,
                                                       LabelCache& cache) {
  return cache.GetOrEncode(schema);
}

}  // namespace guardgate::scorer
