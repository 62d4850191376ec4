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

#include "anonkit/utility.hpp"

#include <cmath>
#include <map>
#include <set>

namespace anonkit {

std::vector<AggregateResult> run_group_mean(const Table& table,
                                            std::string_view group_by,
                                            std::string_view measure) {
  std::size_t key_col = table.column_index(group_by);
  std::size_t measure_col = table.column_index(measure);
  if (table.attribute(measure).kind != AttributeKind::numeric) {
    throw Error(ErrorCode::invalid_argument,
                "measure attribute '" + std::string(measure) + "' must be numeric");
  }
  std::map<Cell, std::pair<double, std::size_t>> sums;  // key -> (sum, count)
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const double* v = std::get_if<double>(&table.cell(r, measure_col));
    if (v == nullptr) {
      throw Error(ErrorCode::invalid_argument,
                  "non-numeric cell in measure attribute '" + std::string(measure) +
                      "' at row " + std::to_string(r + 1));
    }
    auto& [sum, count] = sums[table.cell(r, key_col)];
    sum += *v;
    count++;
  }
  std::vector<AggregateResult> results;
  results.reserve(sums.size());
  for (const auto& [key, sum_count] : sums) {
    results.push_back({key, sum_count.first / static_cast<double>(sum_count.second)});
  }
  return results;
}

UtilityReport mean_normalized_error(const std::vector<AggregateResult>& original,
                                    const std::vector<AggregateResult>& anonymized,
                                    const GeneralizationHierarchy& hierarchy) {
  if (original.empty()) {
    throw Error(ErrorCode::invalid_argument, "no original groups to compare");
  }
  // Keys compare by canonical text so a numeric key matches its own rendering
  // read back from CSV (the number 35 vs the string "35").
  std::map<std::string, std::pair<Cell, double>> anon_values;
  for (const auto& group : anonymized) {
    anon_values.emplace(cell_to_string(group.group_key),
                        std::make_pair(group.group_key, group.aggregate_value));
  }

  UtilityReport report;
  double total = 0.0;
  for (const auto& group : original) {
    // The anonymized key is whichever label of the original key, at any
    // level, appears among the anonymized groups. Level 0 covers the
    // identity (anonymized = original) case.
    std::set<std::string> matches;
    for (int level = 0; level <= hierarchy.max_level(); ++level) {
      std::string label = cell_to_string(hierarchy.label(group.group_key, level));
      if (anon_values.count(label)) matches.insert(label);
    }
    if (matches.empty()) {
      throw Error(ErrorCode::unknown_value,
                  "original group '" + cell_to_string(group.group_key) +
                      "' matches no anonymized group");
    }
    if (matches.size() > 1) {
      throw Error(ErrorCode::invalid_argument,
                  "original group '" + cell_to_string(group.group_key) +
                      "' matches several anonymized groups");
    }
    if (group.aggregate_value == 0.0) {
      throw Error(ErrorCode::invalid_argument,
                  "original group '" + cell_to_string(group.group_key) +
                      "' has value 0: normalized error is undefined");
    }
    const auto& [matched, anon_value] = anon_values.at(*matches.begin());
    double err = std::abs(anon_value - group.aggregate_value) /
                 std::abs(group.aggregate_value);
    report.per_group.push_back(
        {group.group_key, matched, group.aggregate_value, anon_value, err});
    total += err;
  }
  report.mean_normalized_error = total / static_cast<double>(original.size());
  return report;
}

}  // namespace anonkit
