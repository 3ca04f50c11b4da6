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

#include "guardgate/servelab/loadgen.h"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "guardgate/core/error.h"
#include "guardgate/scorer/wire.h"

namespace guardgate::servelab {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kOpenLoopWorkers = 128;

struct Tally {
  std::mutex mu;
  std::vector<double> latencies;
  int64_t failed = 0;
  int64_t rejected = 0;

  void Add(int status, double latency_ms) {
    std::lock_guard lock(mu);
    if (status == 200) {
      latencies.push_back(latency_ms);
    } else if (status == 429) {
      ++rejected;
    } else {
      ++failed;
    }
  }
};

std::unique_ptr<httplib::Client> MakeClient(const LoadConfig& c) {
  auto client = std::make_unique<httplib::Client>(c.endpoint);
  auto secs = std::chrono::duration<double>(c.request_timeout_s);
  client->set_connection_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(secs));
  client->set_read_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(secs));
  client->set_write_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(secs));
  client->set_keep_alive(true);
  return client;
}

// Registers the schema so requests can carry a short schema_id.
std::string RequestBody(const LoadConfig& c) {
  auto client = MakeClient(c);
  auto health = client->Get("/healthz");
  if (!health || health->status != 200) {
    throw RetriableError("endpoint " + c.endpoint + " is not healthy");
  }
  scorer::wire::ScoreRequest request;
  request.texts = {c.text};
  auto reg = client->Post("/v1/schemas",
                          scorer::wire::SchemaToJson(c.schema).dump(),
                          "application/json");
  if (reg && reg->status == 200) {
    request.schema_id = json::parse(reg->body).at("schema_id").get<std::string>();
  } else {
    request.schema = c.schema;
  }
  return scorer::wire::RequestToJson(request).dump();
}

int Send(httplib::Client& client, const std::string& body) {
  auto res = client.Post("/v1/guard", body, "application/json");
  return res ? res->status : -1;
}

double MsBetween(Clock::time_point a, Clock::time_point b) {
  return Millis(b - a).count();
}

}  // namespace

LoadMode ParseLoadMode(const std::string& s) {
  if (s == "open") return LoadMode::kOpen;
  if (s == "closed") return LoadMode::kClosed;
  throw InvalidArgument("load mode must be open or closed, got '" + s + "'");
}

ServingMetrics LoadGenerate(const LoadConfig& c) {
  if (!(c.duration_s > 0)) throw InvalidArgument("duration must be > 0");
  if (c.warmup_s < 0) throw InvalidArgument("warmup must be >= 0");
  if (c.mode == LoadMode::kClosed && c.concurrency < 1) {
    throw InvalidArgument("concurrency must be >= 1");
  }
  if (c.mode == LoadMode::kOpen && !(c.target_rps > 0)) {
    throw InvalidArgument("target_rps must be > 0");
  }
  if (c.endpoint.empty()) throw InvalidArgument("endpoint is required");
  const std::string body = RequestBody(c);

  const auto t0 = Clock::now();
  const auto measure_from =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(c.warmup_s));
  const auto end = measure_from +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(c.duration_s));
  Tally tally;
  std::vector<std::thread> workers;

  if (c.mode == LoadMode::kClosed) {
    for (int w = 0; w < c.concurrency; ++w) {
      workers.emplace_back([&] {
        auto client = MakeClient(c);
        for (auto sent = Clock::now(); sent < end; sent = Clock::now()) {
          const int status = Send(*client, body);
          if (sent >= measure_from) tally.Add(status, MsBetween(sent, Clock::now()));
        }
      });
    }
  } else {
    const auto interval = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(1.0 / c.target_rps));
    std::atomic<int64_t> next{0};
    for (int w = 0; w < kOpenLoopWorkers; ++w) {
      workers.emplace_back([&] {
        auto client = MakeClient(c);
        while (true) {
          const auto scheduled = t0 + interval * next++;
          if (scheduled >= end) break;
          std::this_thread::sleep_until(scheduled);
          const int status = Send(*client, body);
          // Measured from the schedule, so a backed-up client shows up as
          // latency rather than as a quietly lower send rate.
          if (scheduled >= measure_from) {
            tally.Add(status, MsBetween(scheduled, Clock::now()));
          }
        }
      });
    }
  }
  for (auto& t : workers) t.join();
  return Summarize(tally.latencies, tally.failed, tally.rejected, c.duration_s);
}

}  // namespace guardgate::servelab
