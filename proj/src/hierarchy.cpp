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

#include "anonkit/hierarchy.hpp"

#include <cmath>
#include <set>

namespace anonkit {

namespace {

constexpr const char* kTopLabel = "*";

std::string interval_label(double value, double width) {
  double lo = std::floor(value / width) * width;
  double hi = lo + width - 1.0;
  return "[" + cell_to_string(Cell(lo)) + ";" + cell_to_string(Cell(hi)) + "]";
}

}  // namespace

GeneralizationHierarchy GeneralizationHierarchy::intervals(std::string attribute,
                                                           std::vector<double> widths) {
  if (widths.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "hierarchy for '" + attribute + "' needs at least one interval width");
  }
  double prev = 1.0;
  for (double w : widths) {
    if (!(w > 0.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "hierarchy for '" + attribute + "': interval widths must be positive");
    }
    // Each width must be a multiple of the one below it, otherwise bins at
    // consecutive levels would not nest.
    double ratio = w / prev;
    if (w < prev || std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
      throw Error(ErrorCode::invalid_argument,
                  "hierarchy for '" + attribute +
                      "': each interval width must be a multiple of the previous one");
    }
    prev = w;
  }
  GeneralizationHierarchy h;
  h.attribute_ = std::move(attribute);
  h.interval_ = true;
  h.widths_ = std::move(widths);
  return h;
}

GeneralizationHierarchy GeneralizationHierarchy::explicit_levels(
    std::string attribute, std::vector<std::map<std::string, std::string>> levels) {
  if (levels.empty()) {
    // Identity-only hierarchy: max_level 0, nothing to validate.
    GeneralizationHierarchy h;
    h.attribute_ = std::move(attribute);
    h.interval_ = false;
    return h;
  }
  std::set<std::string> domain;
  for (const auto& [value, label] : levels.front()) domain.insert(value);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j].size() != domain.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "hierarchy for '" + attribute + "': level " + std::to_string(j + 1) +
                      " does not cover the same ground domain as level 1");
    }
    for (const auto& [value, label] : levels[j]) {
      if (!domain.count(value)) {
        throw Error(ErrorCode::invalid_argument,
                    "hierarchy for '" + attribute + "': level " + std::to_string(j + 1) +
                        " maps unknown ground value '" + value + "'");
      }
    }
  }
  // Nesting: values that share a label at level i must share one at every
  // level above i.
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    std::map<std::string, std::vector<std::string>> by_label;
    for (const auto& [value, label] : levels[i]) by_label[label].push_back(value);
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      for (const auto& [label, values] : by_label) {
        const std::string& first = levels[j].at(values.front());
        for (const auto& v : values) {
          if (levels[j].at(v) != first) {
            throw Error(ErrorCode::invalid_argument,
                        "hierarchy for '" + attribute + "': levels " + std::to_string(i + 1) +
                            " and " + std::to_string(j + 1) + " do not nest at value '" + v + "'");
          }
        }
      }
    }
  }
  std::set<std::string> top_labels;
  for (const auto& [value, label] : levels.back()) top_labels.insert(label);
  if (top_labels.size() != 1) {
    throw Error(ErrorCode::invalid_argument,
                "hierarchy for '" + attribute + "': top level must map everything to one label");
  }
  GeneralizationHierarchy h;
  h.attribute_ = std::move(attribute);
  h.interval_ = false;
  h.levels_ = std::move(levels);
  return h;
}

int GeneralizationHierarchy::max_level() const {
  // Interval hierarchies get an implicit all-covering top level.
  if (interval_) return static_cast<int>(widths_.size()) + 1;
  return static_cast<int>(levels_.size());
}

Cell GeneralizationHierarchy::label(const Cell& value, int level) const {
  if (level < 0 || level > max_level()) {
    throw Error(ErrorCode::level_out_of_range,
                "level " + std::to_string(level) + " out of range for '" + attribute_ +
                    "' (max " + std::to_string(max_level()) + ")");
  }
  if (level == 0) return value;
  if (interval_) {
    if (level == max_level()) return Cell(std::string(kTopLabel));
    const double* v = std::get_if<double>(&value);
    if (v == nullptr) {
      throw Error(ErrorCode::unknown_value,
                  "interval hierarchy for '" + attribute_ + "' cannot generalize non-numeric '" +
                      cell_to_string(value) + "'");
    }
    return Cell(interval_label(*v, widths_[static_cast<std::size_t>(level) - 1]));
  }
  const auto& mapping = levels_[static_cast<std::size_t>(level) - 1];
  auto it = mapping.find(cell_to_string(value));
  if (it == mapping.end()) {
    throw Error(ErrorCode::unknown_value,
                "hierarchy for '" + attribute_ + "' has no label for value '" +
                    cell_to_string(value) + "'");
  }
  return Cell(it->second);
}

Table generalize_table(const Table& table, const HierarchySet& hierarchies,
                       const std::map<std::string, int>& node) {
  for (const auto& [attr, level] : node) {
    auto it = hierarchies.find(attr);
    if (it == hierarchies.end()) {
      throw Error(ErrorCode::unknown_attribute,
                  "node assigns a level to '" + attr + "' but no hierarchy covers it");
    }
    if (level < 0 || level > it->second.max_level()) {
      throw Error(ErrorCode::level_out_of_range,
                  "level " + std::to_string(level) + " out of range for '" + attr + "' (max " +
                      std::to_string(it->second.max_level()) + ")");
    }
    table.column_index(attr);
  }

  std::vector<AttributeSchema> out_schema;
  std::vector<std::size_t> keep_cols;
  std::vector<int> levels;         // per kept column, 0 when not generalized
  std::vector<const GeneralizationHierarchy*> hier_ptr;
  const auto& schema = table.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (schema[c].role == AttributeRole::identifier) continue;
    AttributeSchema attr = schema[c];
    int level = 0;
    const GeneralizationHierarchy* h = nullptr;
    if (auto it = node.find(attr.name); it != node.end() && it->second > 0) {
      level = it->second;
      h = &hierarchies.at(attr.name);
      attr.kind = AttributeKind::categorical;  // cells become labels
    }
    out_schema.push_back(std::move(attr));
    keep_cols.push_back(c);
    levels.push_back(level);
    hier_ptr.push_back(h);
  }

  std::vector<std::vector<Cell>> out_rows;
  out_rows.reserve(table.row_count());
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<Cell> row;
    row.reserve(keep_cols.size());
    for (std::size_t k = 0; k < keep_cols.size(); ++k) {
      const Cell& cell = table.cell(r, keep_cols[k]);
      row.push_back(levels[k] == 0 ? cell : hier_ptr[k]->label(cell, levels[k]));
    }
    out_rows.push_back(std::move(row));
  }
  return Table(std::move(out_schema), std::move(out_rows));
}

}  // namespace anonkit
