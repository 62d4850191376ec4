// Copyright 2026 The anonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONKIT_HIERARCHY_HPP
#define ANONKIT_HIERARCHY_HPP

#include <map>
#include <string>
#include <vector>

#include "anonkit/table.hpp"

namespace anonkit {

// Per-attribute ordered generalization levels. Level 0 is the identity; each
// higher level maps every ground value to exactly one coarser label, and
// labels nest: values sharing a label at level j share one at every level
// above j. The top level maps everything to a single label.
//
// Two flavors:
//  - interval hierarchies for numeric attributes: one level per bin width
//    (bins aligned at multiples of the width, rendered "[lo;hi]"), with an
//    implicit all-covering "*" level on top;
//  - explicit hierarchies: one ground-value -> label map per level.
class GeneralizationHierarchy {
 public:
  static GeneralizationHierarchy intervals(std::string attribute,
                                           std::vector<double> widths);
  static GeneralizationHierarchy explicit_levels(
      std::string attribute,
      std::vector<std::map<std::string, std::string>> levels);

  const std::string& attribute() const { return attribute_; }
  int max_level() const;
  bool is_interval() const { return interval_; }

  // Label of `value` at `level`; level 0 returns the value unchanged.
  Cell label(const Cell& value, int level) const;

 private:
  GeneralizationHierarchy() = default;

  std::string attribute_;
  bool interval_ = false;
  std::vector<double> widths_;  // interval flavor
  std::vector<std::map<std::string, std::string>> levels_;  // explicit flavor
};

using HierarchySet = std::map<std::string, GeneralizationHierarchy>;

// Replaces each cell of a hierarchical attribute with its label at the level
// the node assigns (attributes absent from the node stay at level 0).
// Identifier-role attributes are dropped from the output; attributes
// generalized past level 0 become categorical in the output schema.
Table generalize_table(const Table& table, const HierarchySet& hierarchies,
                       const std::map<std::string, int>& node);

}  // namespace anonkit

#endif  // ANONKIT_HIERARCHY_HPP
