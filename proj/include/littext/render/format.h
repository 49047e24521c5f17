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

#ifndef LITTEXT_RENDER_FORMAT_H_
#define LITTEXT_RENDER_FORMAT_H_

#include <string>
#include <string_view>

namespace littext::render {

// Fixed three-decimal form of Quantize(value); never "-0.000".
std::string FormatNumber(double value);

// Valid UTF-8 copy of `s`: undecodable bytes and control characters other
// than tab, LF and CR become U+FFFD.
std::string ScrubUtf8(std::string_view s);

}  // namespace littext::render

#endif  // LITTEXT_RENDER_FORMAT_H_
