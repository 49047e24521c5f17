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

#ifndef LITTEXT_RENDER_SVG_H_
#define LITTEXT_RENDER_SVG_H_

#include <string>

#include "littext/vizmodel/document.h"

namespace littext::render {

// Standalone SVG 1.1. Elements keep model order; ids become SVG ids and
// tags become data-<key> attributes. Text backgrounds are drawn as a rect
// with id "<id>-bg" just before their text.
std::string ToSvg(const vizmodel::DocumentModel &model);

}  // namespace littext::render

#endif  // LITTEXT_RENDER_SVG_H_
