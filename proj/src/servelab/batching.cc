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

#include "guardgate/servelab/batching.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>

#include "guardgate/core/error.h"

namespace guardgate::servelab {
namespace {

using nlohmann::json;

long long EnvInt(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long long x = std::strtoll(v, &end, 10);
  if (*end != '\0') {
    throw ConfigError(std::string(name) + " is not an integer: '" + v + "'");
  }
  return x;
}

}  // namespace

void BatchingConfig::Validate() const {
  if (max_batch < 1) throw ConfigError("max_batch must be >= 1");
  if (!(flush_timeout_ms > 0)) throw ConfigError("flush_timeout must be > 0");
  if (queue_capacity < 1) throw ConfigError("queue_capacity must be >= 1");
}

BatchingConfig BatchingConfig::WithEnv() const {
  BatchingConfig c = *this;
  c.max_batch = static_cast<int>(EnvInt("GUARD_MAX_BATCH", c.max_batch));
  if (std::getenv("GUARD_FLUSH_TIMEOUT_MS") != nullptr) {
    c.flush_timeout_ms =
        static_cast<double>(EnvInt("GUARD_FLUSH_TIMEOUT_MS", 0));
  }
  c.Validate();
  return c;
}

BatchingConfig BatchingConfig::FromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("batching config must be an object");
  BatchingConfig c;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "max_batch") {
        c.max_batch = v.get<int>();
      } else if (k == "flush_timeout_ms") {
        c.flush_timeout_ms = v.get<double>();
      } else if (k == "queue_capacity") {
        c.queue_capacity = v.get<int>();
      } else {
        throw ConfigError("unknown batching key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad batching config: ") + e.what());
  }
  c.Validate();
  return c;
}

json BatchingConfig::ToJson() const {
  return {{"max_batch", max_batch},
          {"flush_timeout_ms", flush_timeout_ms},
          {"queue_capacity", queue_capacity}};
}

BatchFormer::BatchFormer(const BatchingConfig& config) : config_(config) {
  config_.Validate();
}

bool BatchFormer::Arrive(int64_t id, double arrival_ms, uint64_t key) {
  if (queue_.size() >= static_cast<size_t>(config_.queue_capacity)) {
    return false;
  }
  queue_.push_back({id, arrival_ms, key});
  return true;
}

std::optional<double> BatchFormer::DueAt() const {
  if (queue_.empty()) return std::nullopt;
  double due = queue_.front().arrival_ms + config_.flush_timeout_ms;
  const uint64_t key = queue_.front().key;
  const size_t limit = std::min(queue_.size(),
                                static_cast<size_t>(config_.max_batch));
  size_t run = 0;
  while (run < limit && queue_[run].key == key) ++run;
  if (run == static_cast<size_t>(config_.max_batch)) {
    due = std::min(due, queue_[run - 1].arrival_ms);
  } else if (run < queue_.size()) {
    // A different schema is queued behind the head run; it cannot grow.
    due = std::min(due, queue_[run].arrival_ms);
  }
  return due;
}

BatchFormer::Taken BatchFormer::Take() {
  Taken t;
  if (queue_.empty()) return t;
  const uint64_t key = queue_.front().key;
  while (!queue_.empty() && queue_.front().key == key &&
         t.ids.size() < static_cast<size_t>(config_.max_batch)) {
    t.ids.push_back(queue_.front().id);
    t.arrivals_ms.push_back(queue_.front().arrival_ms);
    queue_.pop_front();
  }
  return t;
}

ReplayResult ReplayBatching(const std::vector<double>& arrivals_ms,
                            const BatchingConfig& config, double service_ms) {
  if (service_ms < 0) throw InvalidArgument("service_ms must be >= 0");
  for (size_t i = 1; i < arrivals_ms.size(); ++i) {
    if (arrivals_ms[i] < arrivals_ms[i - 1]) {
      throw InvalidArgument("arrivals must be non-decreasing");
    }
  }
  const size_t n = arrivals_ms.size();
  BatchFormer former(config);
  ReplayResult r;
  r.submitted = static_cast<int64_t>(n);
  r.idle_wait_ms.resize(n);
  r.latency_ms.resize(n);
  double free_at = n == 0 ? 0.0 : std::min(0.0, arrivals_ms[0]);
  size_t i = 0;
  while (true) {
    std::optional<double> due = former.DueAt();
    if (!due && i == n) break;
    if (i < n && (!due || arrivals_ms[i] <= std::max(*due, free_at))) {
      if (!former.Arrive(static_cast<int64_t>(i), arrivals_ms[i])) ++r.rejected;
      ++i;
      continue;
    }
    const double dispatch = std::max(*due, free_at);
    BatchFormer::Taken taken = former.Take();
    for (size_t k = 0; k < taken.ids.size(); ++k) {
      const double a = taken.arrivals_ms[k];
      r.idle_wait_ms[taken.ids[k]] = dispatch - std::max(a, free_at);
      r.latency_ms[taken.ids[k]] = dispatch + service_ms - a;
    }
    r.served += static_cast<int64_t>(taken.ids.size());
    r.batches.push_back({dispatch, free_at, std::move(taken.ids)});
    free_at = dispatch + service_ms;
  }
  return r;
}

std::vector<double> BurstyArrivals(uint64_t seed, int count, int max_burst,
                                   double max_gap_ms) {
  if (count < 0 || max_burst < 1 || max_gap_ms < 0) {
    throw InvalidArgument("bad bursty arrival parameters");
  }
  std::mt19937_64 rng(seed);
  const uint64_t gap_steps = static_cast<uint64_t>(max_gap_ms * 1000) + 1;
  std::vector<double> out;
  out.reserve(count);
  double t = 0.0;
  while (static_cast<int>(out.size()) < count) {
    const int burst = 1 + static_cast<int>(rng() % max_burst);
    for (int b = 0; b < burst && static_cast<int>(out.size()) < count; ++b) {
      out.push_back(t);
    }
    t += static_cast<double>(rng() % gap_steps) / 1000.0;
  }
  return out;
}

}  // namespace guardgate::servelab
