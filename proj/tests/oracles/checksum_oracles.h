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

#ifndef GUARDGATE_TESTS_ORACLES_CHECKSUM_ORACLES_H_
#define GUARDGATE_TESTS_ORACLES_CHECKSUM_ORACLES_H_

#include <string>

// Direct transcriptions of the published check-digit formulas. These are
// deliberately written differently from the production validators (whole
// integer arithmetic, explicit position parity) and must never call into
// guardgate code.
namespace guardgate::oracle {

bool LuhnOracle(const std::string& digits);
bool InnOracle(const std::string& digits);
bool SnilsOracle(const std::string& digits);
bool OgrnOracle(const std::string& digits);
bool OgrnipOracle(const std::string& digits);

}  // namespace guardgate::oracle

#endif  // GUARDGATE_TESTS_ORACLES_CHECKSUM_ORACLES_H_
