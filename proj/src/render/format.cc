// Copyright 2026 The Littext Authors.
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

#include "littext/render/format.h"

#include <cstdio>

#include "littext/utf8.h"
#include "littext/vizmodel/document.h"

namespace littext::render {

std::string FormatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", vizmodel::Quantize(value));
  std::string out = buf;
  if (out == "-0.000") out = "0.000";
  return out;
}

std::string ScrubUtf8(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t pos = 0;
  while (pos < s.size()) {
    const utf8::Decoded d = utf8::DecodeAt(s, pos);
    const bool control = d.code_point < 0x20 && d.code_point != '\t' &&
                         d.code_point != '\n' && d.code_point != '\r';
    if (!d.valid || control || d.code_point == 0x7F) {
      utf8::Append(out, utf8::kReplacement);
    } else {
      out.append(s.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

}  // namespace littext::render
