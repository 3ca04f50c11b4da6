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

#ifndef GUARDGATE_SERVELAB_BATCHER_H_
#define GUARDGATE_SERVELAB_BATCHER_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>

#include "guardgate/core/error.h"
#include "guardgate/core/schema.h"
#include "guardgate/core/verdict.h"
#include "guardgate/scorer/backend.h"
#include "guardgate/servelab/batching.h"
#include "guardgate/servelab/metrics.h"

namespace guardgate::servelab {

// Submission refused because the queue is at capacity.
class QueueFullError : public RetriableError {
 public:
  using RetriableError::RetriableError;
};

struct Completion {
  GuardVerdict verdict;
  // Submit to completion.
  double latency_ms = 0.0;
};

// Called on the worker thread after each batch.
using BatchObserver = std::function<void(const BatchRecord& record,
                                         const std::vector<double>& arrivals_ms,
                                         double finished_ms)>;

// Many producers, one batching worker in front of a backend. Requests with
// different schemas never share a batch.
class DynamicBatcher {
 public:
  DynamicBatcher(std::shared_ptr<scorer::ScorerBackend> backend,
                 const BatchingConfig& config,
                 std::shared_ptr<MetricsRecorder> metrics = nullptr,
                 BatchObserver observer = nullptr);
  ~DynamicBatcher();
  DynamicBatcher(const DynamicBatcher&) = delete;
  DynamicBatcher& operator=(const DynamicBatcher&) = delete;

  // Throws QueueFullError (and counts a rejection) when full. A backend
  // failure surfaces from the future as BackendError.
  std::future<Completion> Submit(std::string text, GuardSchema schema);

  // Fails queued requests and joins the worker.
  void Stop();

  const BatchingConfig& config() const { return config_; }
  // Milliseconds on the batcher's clock.
  double Now() const;

 private:
  struct Pending {
    std::string text;
    GuardSchema schema;
    std::promise<Completion> promise;
    double arrival_ms;
  };

  void Loop();

  std::shared_ptr<scorer::ScorerBackend> backend_;
  BatchingConfig config_;
  std::shared_ptr<MetricsRecorder> metrics_;
  BatchObserver observer_;
  std::chrono::steady_clock::time_point epoch_;

  std::mutex mu_;
  std::condition_variable cv_;
  BatchFormer former_;
  std::unordered_map<int64_t, Pending> pending_;
  int64_t next_id_ = 0;
  bool stopping_ = false;
  std::thread worker_;
};

// Sleeps a fixed time per ScoreBatch call, standing in for one forward
// pass per batch. Verdicts carry uniform distributions and no entities.
class SleepStub : public scorer::ScorerBackend {
 public:
  explicit SleepStub(double ms_per_batch = 10.0) : ms_(ms_per_batch) {}

  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override;

  int64_t batches() const { return batches_.load(); }

 private:
  double ms_;
  std::atomic<int64_t> batches_{0};
};

}  // namespace guardgate::servelab

#endif  // GUARDGATE_SERVELAB_BATCHER_H_
