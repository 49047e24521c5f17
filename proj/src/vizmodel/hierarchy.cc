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

#include "littext/vizmodel/hierarchy.h"

#include <algorithm>

namespace littext::vizmodel {

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kRoot: return "root";
    case Level::kVerb: return "verb";
    case Level::kObject: return "object";
    case Level::kPerson: return "person";
  }
  return "root";
}

namespace {

HierarchyNode &Child(HierarchyNode &parent, const std::string &label,
                     Level level) {
  for (HierarchyNode &c : parent.children) {
    if (c.label == label) return c;
  }
  HierarchyNode node;
  node.label = label;
  node.level = level;
  parent.children.push_back(std::move(node));
  return parent.children.back();
}

}  // namespace

void SortSiblings(HierarchyNode &node, SiblingOrder order) {
  // Stable: same-named people keep record order.
  std::stable_sort(node.children.begin(), node.children.end(),
                   [order](const HierarchyNode &a, const HierarchyNode &b) {
                     if (order == SiblingOrder::kCount && a.count != b.count) {
                       return a.count > b.count;
                     }
                     return a.label < b.label;
                   });
  for (HierarchyNode &c : node.children) SortSiblings(c, order);
}

HierarchyNode BuildHierarchy(const std::vector<textproc::SvoRecord> &records,
                             SiblingOrder order) {
  HierarchyNode root;
  root.label = "root";
  for (const textproc::SvoRecord &r : records) {
    HierarchyNode &verb = Child(root, r.verb, Level::kVerb);
    HierarchyNode &object = Child(verb, r.object, Level::kObject);
    HierarchyNode person;
    person.label = r.subject;
    person.level = Level::kPerson;
    person.count = 1;
    person.tags = {{"verdict", std::string(VerdictName(r.verdict))},
                   {"gender", std::string(GenderName(r.gender))},
                   {"source", r.source_id}};
    object.children.push_back(std::move(person));
    ++object.count;
    ++verb.count;
    ++root.count;
  }
  SortSiblings(root, order);
  return root;
}

int CountPersons(const HierarchyNode &node) {
  if (node.level == Level::kPerson) return 1;
  int total = 0;
  for (const HierarchyNode &c : node.children) total += CountPersons(c);
  return total;
}

}  // namespace littext::vizmodel
