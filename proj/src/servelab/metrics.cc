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

#include "guardgate/servelab/metrics.h"

#include <algorithm>
#include <cmath>

#include "guardgate/core/error.h"

namespace guardgate::servelab {

using nlohmann::json;

double Percentile(std::vector<double> samples, double p) {
  if (samples.empty()) throw InvalidArgument("percentile of no samples");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in (0, 1]");
  const double n = static_cast<double>(samples.size());
  // p*n lands a hair above an integer for p like 0.95; snap those back.
  double x = p * n;
  double r = std::round(x);
  double rank = std::abs(x - r) <= 1e-9 * n ? r : std::ceil(x);
  size_t k = static_cast<size_t>(std::clamp(rank, 1.0, n));
  std::nth_element(samples.begin(), samples.begin() + (k - 1), samples.end());
  return samples[k - 1];
}

json ServingMetrics::ToJson() const {
  auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  return {{"total_requests", total_requests},
          {"succeeded", succeeded},
          {"failed_requests", failed_requests},
          {"rejected", rejected},
          {"client_errors", client_errors},
          {"rps", rps},
          {"p50_ms", opt(p50_ms)},
          {"p95_ms", opt(p95_ms)},
          {"p99_ms", opt(p99_ms)},
          {"error_rate", error_rate}};
}

ServingMetrics ServingMetrics::FromJson(const json& j) {
  auto opt = [&](const char* k) -> std::optional<double> {
    if (!j.contains(k) || j[k].is_null()) return std::nullopt;
    return j[k].get<double>();
  };
  ServingMetrics m;
  try {
    m.total_requests = j.at("total_requests").get<int64_t>();
    m.succeeded = j.at("succeeded").get<int64_t>();
    m.failed_requests = j.at("failed_requests").get<int64_t>();
    m.rejected = j.value("rejected", int64_t{0});
    m.client_errors = j.value("client_errors", int64_t{0});
    m.rps = j.at("rps").get<double>();
    m.error_rate = j.at("error_rate").get<double>();
    m.p50_ms = opt("p50_ms");
    m.p95_ms = opt("p95_ms");
    m.p99_ms = opt("p99_ms");
  } catch (const json::exception& e) {
    throw ProtocolError(std::string("bad metrics JSON: ") + e.what());
  }
  return m;
}

ServingMetrics Summarize(const std::vector<double>& latencies_ms,
                         int64_t failed, int64_t rejected, double elapsed_s) {
  ServingMetrics m;
  m.succeeded = static_cast<int64_t>(latencies_ms.size());
  m.rejected = rejected;
  m.failed_requests = failed + rejected;
  m.total_requests = m.succeeded + m.failed_requests;
  m.error_rate = m.total_requests == 0
                     ? 0.0
                     : static_cast<double>(m.failed_requests) /
                           static_cast<double>(m.total_requests);
  m.rps = elapsed_s > 0 ? static_cast<double>(m.total_requests) / elapsed_s
                        : 0.0;
  if (!latencies_ms.empty()) {
    std::vector<double> sorted = latencies_ms;
    std::sort(sorted.begin(), sorted.end());
    m.p50_ms = Percentile(sorted, 0.50);
    m.p95_ms = Percentile(sorted, 0.95);
    m.p99_ms = Percentile(sorted, 0.99);
  }
  return m;
}

MetricsRecorder::MetricsRecorder() : start_(std::chrono::steady_clock::now()) {}

void MetricsRecorder::RecordSuccess(double latency_ms) {
  std::lock_guard lock(mu_);
  latencies_.push_back(latency_ms);
}

void MetricsRecorder::RecordFailure() {
  std::lock_guard lock(mu_);
  ++failed_;
}

void MetricsRecorder::RecordRejected() {
  std::lock_guard lock(mu_);
  ++rejected_;
}

void MetricsRecorder::RecordClientError() {
  std::lock_guard lock(mu_);
  ++client_errors_;
}

ServingMetrics MetricsRecorder::Snapshot() const {
  std::lock_guard lock(mu_);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start_;
  ServingMetrics m = Summarize(latencies_, failed_, rejected_, elapsed.count());
  m.client_errors = client_errors_;
  return m;
}

void MetricsRecorder::Reset() {
  std::lock_guard lock(mu_);
  start_ = std::chrono::steady_clock::now();
  latencies_.clear();
  failed_ = rejected_ = client_errors_ = 0;
}

}  // namespace guardgate::servelab
