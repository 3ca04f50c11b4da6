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

#ifndef GUARDGATE_CORE_LOG_H_
#define GUARDGATE_CORE_LOG_H_

#include <memory>

#include <spdlog/spdlog.h>

namespace guardgate {

// Project logger. Writes to stderr so stdout stays clean for JSON output.
std::shared_ptr<spdlog::logger> Log();

}  // namespace guardgate

#endif  // GUARDGATE_CORE_LOG_H_
