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

#include "guardgate/servelab/batcher.h"

#include <utility>

#include "guardgate/core/log.h"

namespace guardgate::servelab {

DynamicBatcher::DynamicBatcher(std::shared_ptr<scorer::ScorerBackend> backend,
                               const BatchingConfig& config,
                               std::shared_ptr<MetricsRecorder> metrics,
                               BatchObserver observer)
    : backend_(std::move(backend)),
      config_(config),
      metrics_(metrics ? std::move(metrics)
                       : std::make_shared<MetricsRecorder>()),
      observer_(std::move(observer)),
      epoch_(std::chrono::steady_clock::now()),
      former_(config) {
  if (!backend_) throw InvalidArgument("batcher needs a backend");
  worker_ = std::thread([this] { Loop(); });
}

DynamicBatcher::~DynamicBatcher() { Stop(); }

double DynamicBatcher::Now() const {
  return Millis(std::chrono::steady_clock::now() - epoch_).count();
}

std::future<Completion> DynamicBatcher::Submit(std::string text,
                                               GuardSchema schema) {
  std::lock_guard lock(mu_);
  if (stopping_) throw BackendError("batcher is stopped");
  const int64_t id = next_id_++;
  const double arrival = Now();
  if (!former_.Arrive(id, arrival, schema.hash())) {
    metrics_->RecordRejected();
    throw QueueFullError("queue full (" +
                         std::to_string(config_.queue_capacity) + ")");
  }
  auto [it, inserted] = pending_.emplace(
      id, Pending{std::move(text), std::move(schema), {}, arrival});
  auto future = it->second.promise.get_future();
  cv_.notify_one();
  return future;
}

void DynamicBatcher::Stop() {
  {
    std::lock_guard lock(mu_);
    if (stopping_ && !worker_.joinable()) return;
    stopping_ = true;
  }
  cv_.notify_all();
  if (worker_.joinable()) worker_.join();
  std::lock_guard lock(mu_);
  for (auto& [id, p] : pending_) {
    p.promise.set_exception(
        std::make_exception_ptr(BackendError("batcher stopped")));
    metrics_->RecordFailure();
  }
  pending_.clear();
}

void DynamicBatcher::Loop() {
  std::unique_lock lock(mu_);
  double free_at = Now();
  while (!stopping_) {
    const std::optional<double> due = former_.DueAt();
    if (!due) {
      cv_.wait(lock);
      continue;
    }
    if (Now() < *due) {
      // Arrivals may move the deadline earlier; re-check on every wake.
      cv_.wait_until(lock, epoch_ + std::chrono::duration_cast<
                                        std::chrono::steady_clock::duration>(
                                        Millis(*due)));
      continue;
    }
    const double dispatch = Now();
    BatchFormer::Taken taken = former_.Take();
    std::vector<Pending> batch;
    batch.reserve(taken.ids.size());
    for (int64_t id : taken.ids) {
      auto node = pending_.extract(id);
      batch.push_back(std::move(node.mapped()));
    }
    lock.unlock();

    std::vector<std::string> texts;
    texts.reserve(batch.size());
    for (auto& p : batch) texts.push_back(std::move(p.text));
    std::vector<GuardVerdict> verdicts;
    std::exception_ptr error;
    try {
      verdicts = backend_->ScoreBatch(texts, batch.front().schema);
      if (verdicts.size() != batch.size()) {
        throw BackendError("scorer returned " +
                           std::to_string(verdicts.size()) + " verdicts for " +
                           std::to_string(batch.size()) + " texts");
      }
    } catch (const std::exception& e) {
      Log()->error("batch of {} failed: {}", batch.size(), e.what());
      error = std::make_exception_ptr(BackendError(e.what()));
    }
    const double finished = Now();
    for (size_t i = 0; i < batch.size(); ++i) {
      if (error) {
        metrics_->RecordFailure();
        batch[i].promise.set_exception(error);
      } else {
        const double latency = finished - batch[i].arrival_ms;
        metrics_->RecordSuccess(latency);
        batch[i].promise.set_value({std::move(verdicts[i]), latency});
      }
    }
    if (observer_) {
      observer_({dispatch, free_at, std::move(taken.ids)}, taken.arrivals_ms,
                finished);
    }
    free_at = finished;
    lock.lock();
  }
}

std::vector<GuardVerdict> SleepStub::ScoreBatch(
    std::span<const std::string> texts, const GuardSchema& schema) {
  ++batches_;
  std::this_thread::sleep_for(Millis(ms_));
  std::vector<GuardVerdict> out(texts.size());
  for (auto& v : out) {
    for (const auto& task : schema.tasks()) {
      std::vector<double> probs(task.labels.size(),
                                1.0 / static_cast<double>(task.labels.size()));
      v.classifications.push_back(MakeClassification(task, probs));
    }
    v.scorer_latency = Millis(ms_);
  }
  return out;
}

}  // namespace guardgate::servelab
