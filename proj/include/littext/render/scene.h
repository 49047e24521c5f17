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

#ifndef LITTEXT_RENDER_SCENE_H_
#define LITTEXT_RENDER_SCENE_H_

#include <string>
#include <string_view>

#include "littext/vizmodel/document.h"

namespace littext::render {

inline constexpr int kSceneVersion = 1;

// Canonical scene JSON: fixed key order, three-decimal numbers, absent
// optional fields omitted. One element per line.
std::string ToScene(const vizmodel::DocumentModel &model);

// Inverse of ToScene. Throws UnsupportedVersionError for another version
// and InputError for anything malformed.
vizmodel::DocumentModel FromScene(std::string_view scene);

}  // namespace littext::render

#endif  // LITTEXT_RENDER_SCENE_H_
