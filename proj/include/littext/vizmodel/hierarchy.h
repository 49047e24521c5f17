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

#ifndef LITTEXT_VIZMODEL_HIERARCHY_H_
#define LITTEXT_VIZMODEL_HIERARCHY_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "littext/textproc/svo.h"

namespace littext::vizmodel {

enum class Level { kRoot, kVerb, kObject, kPerson };

std::string_view LevelName(Level level);

// Verb -> object -> person tree. Internal counts equal the sum of their
// children; person leaves count 1 and carry verdict/gender tags.
struct HierarchyNode {
  std::string label;
  Level level = Level::kRoot;
  int count = 0;
  std::vector<HierarchyNode> children;
  std::map<std::string, std::string> tags;

  bool operator==(const HierarchyNode &) const = default;
};

enum class SiblingOrder {
  kCount,  // count descending, then label ascending
  kAlpha,  // label ascending
};

HierarchyNode BuildHierarchy(const std::vector<textproc::SvoRecord> &records,
                             SiblingOrder order = SiblingOrder::kCount);

// Re-sorts every sibling list in place.
void SortSiblings(HierarchyNode &node, SiblingOrder order);

// Number of person leaves under `node`.
int CountPersons(const HierarchyNode &node);

}  // namespace littext::vizmodel

#endif  // LITTEXT_VIZMODEL_HIERARCHY_H_
