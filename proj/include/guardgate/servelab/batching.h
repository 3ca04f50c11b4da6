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

#ifndef GUARDGATE_SERVELAB_BATCHING_H_
#define GUARDGATE_SERVELAB_BATCHING_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace guardgate::servelab {

struct BatchingConfig {
  int max_batch = 64;
  double flush_timeout_ms = 50.0;
  int queue_capacity = 4096;

  void Validate() const;  // throws ConfigError
  // Overrides from GUARD_MAX_BATCH and GUARD_FLUSH_TIMEOUT_MS when set.
  BatchingConfig WithEnv() const;
  static BatchingConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

// The batching policy, free of threads and clocks. Times are milliseconds
// on any monotonic scale. A batch is due when the head run of same-key
// requests is full (max_batch of them, or a different key queued behind
// them), or when the oldest request is flush_timeout old, whichever comes
// first. Batches are taken from the head, so order is FIFO.
class BatchFormer {
 public:
  explicit BatchFormer(const BatchingConfig& config);

  // Returns false, leaving the queue unchanged, when it is at capacity.
  bool Arrive(int64_t id, double arrival_ms, uint64_t key = 0);

  size_t pending() const { return queue_.size(); }

  // Earliest time the head batch may be dispatched; nullopt when empty.
  // The worker dispatches at max(this, time it becomes free).
  std::optional<double> DueAt() const;

  struct Taken {
    std::vector<int64_t> ids;
    std::vector<double> arrivals_ms;
  };
  // Pops the head batch. Empty when nothing is queued.
  Taken Take();

 private:
  struct Item {
    int64_t id;
    double arrival_ms;
    uint64_t key;
  };
  BatchingConfig config_;
  std::deque<Item> queue_;
};

struct BatchRecord {
  double dispatch_ms = 0.0;
  // When the worker finished the previous batch.
  double worker_free_ms = 0.0;
  std::vector<int64_t> ids;
};

struct ReplayResult {
  std::vector<BatchRecord> batches;
  // Per request id: time queued while the worker was idle, i.e.
  // dispatch - max(arrival, worker_free). Rejected ids hold nullopt.
  std::vector<std::optional<double>> idle_wait_ms;
  // Per request id: dispatch + service - arrival.
  std::vector<std::optional<double>> latency_ms;
  int64_t submitted = 0;
  int64_t served = 0;
  int64_t rejected = 0;
};

// Discrete-event replay of one batching worker that spends service_ms per
// batch. arrivals_ms must be non-decreasing; request i arrives at
// arrivals_ms[i].
ReplayResult ReplayBatching(const std::vector<double>& arrivals_ms,
                            const BatchingConfig& config, double service_ms);

// Bursts of random size separated by random gaps; deterministic in seed.
std::vector<double> BurstyArrivals(uint64_t seed, int count,
                                   int max_burst = 200,
                                   double max_gap_ms = 120.0);

}  // namespace guardgate::servelab

#endif  // GUARDGATE_SERVELAB_BATCHING_H_
