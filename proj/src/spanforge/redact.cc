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

#include "guardgate/spanforge/redact.h"

#include <algorithm>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"

namespace guardgate::spanforge {

std::string Redact(std::string_view text, const std::vector<Span>& spans,
                   RedactStyle style) {
  const std::u32string cps = DecodeUtf8(text);
  std::vector<Span> sorted = spans;
  std::sort(sorted.begin(), sorted.end(), SpanPositionLess);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].start < 0 || sorted[i].end > static_cast<int>(cps.size()) ||
        sorted[i].start >= sorted[i].end) {
      throw InvalidArgument("span outside text in redact");
    }
    if (i > 0 && sorted[i].start < sorted[i - 1].end) {
      throw InvalidArgument(
          "overlapping spans passed to redact; run arbitration first");
    }
  }
  std::u32string out;
  int pos = 0;
  for (const Span& s : sorted) {
    out.append(cps, pos, s.start - pos);
    if (style == RedactStyle::kPlaceholder) {
      out += U"[" + DecodeUtf8(s.label) + U"]";
    } else {
      out.append(s.length(), U'█');
    }
    pos = s.end;
  }
  out.append(cps, pos);
  return EncodeUtf8(out);
}

}  // namespace guardgate::spanforge
