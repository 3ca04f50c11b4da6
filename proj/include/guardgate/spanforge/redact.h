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

#ifndef GUARDGATE_SPANFORGE_REDACT_H_
#define GUARDGATE_SPANFORGE_REDACT_H_

#include <string>
#include <string_view>
#include <vector>

#include "guardgate/core/span.h"

namespace guardgate::spanforge {

enum class RedactStyle {
  kPlaceholder,  // "[LABEL]"
  kMask,         // one U+2588 per character; preserves length
};

// Throws InvalidArgument if spans overlap or fall outside the text.
std::string Redact(std::string_view text, const std::vector<Span>& spans,
                   RedactStyle style);

}  // namespace guardgate::spanforge

#endif  // GUARDGATE_SPANFORGE_REDACT_H_
