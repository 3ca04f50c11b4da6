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

#ifndef GUARDGATE_SERVELAB_METRICS_H_
#define GUARDGATE_SERVELAB_METRICS_H_

#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include <json.hpp>

namespace guardgate::servelab {

// Nearest rank: the ceil(p*n)-th smallest sample (1-based). Throws
// InvalidArgument on an empty list or p outside (0, 1].
double Percentile(std::vector<double> samples, double p);

struct ServingMetrics {
  int64_t total_requests = 0;
  int64_t succeeded = 0;
  // Includes rejected requests.
  int64_t failed_requests = 0;
  int64_t rejected = 0;
  // Bad input (unknown schema, malformed JSON). Not part of total.
  int64_t client_errors = 0;
  double rps = 0.0;
  // Over successful requests; unset when there are none.
  std::optional<double> p50_ms;
  std::optional<double> p95_ms;
  std::optional<double> p99_ms;
  double error_rate = 0.0;

  nlohmann::json ToJson() const;
  static ServingMetrics FromJson(const nlohmann::json& j);
};

// Thread-safe counters plus the latency window of the current run.
class MetricsRecorder {
 public:
  MetricsRecorder();

  void RecordSuccess(double latency_ms);
  void RecordFailure();
  void RecordRejected();
  void RecordClientError();

  // rps is total / seconds since construction or Reset().
  ServingMetrics Snapshot() const;
  void Reset();

 private:
  mutable std::mutex mu_;
  std::chrono::steady_clock::time_point start_;
  std::vector<double> latencies_;
  int64_t failed_ = 0;
  int64_t rejected_ = 0;
  int64_t client_errors_ = 0;
};

// Fills counts, error rate and percentiles from raw samples; rps from
// elapsed_s.
ServingMetrics Summarize(const std::vector<double>& latencies_ms,
                         int64_t failed, int64_t rejected, double elapsed_s);

}  // namespace guardgate::servelab

#endif  // GUARDGATE_SERVELAB_METRICS_H_
