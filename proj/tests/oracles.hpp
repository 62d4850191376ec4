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

#ifndef ANONKIT_TESTS_ORACLES_HPP
#define ANONKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "anonkit/dp.hpp"
#include "anonkit/table.hpp"

// Naive reference implementations the optimized library code is checked
// against. Everything here trades speed for obviousness: nested loops, no
// sorting tricks, no pruning.
namespace oracles {

// Nested-loop grouping: for each row, linearly scan the groups found so far.
inline std::vector<std::vector<std::size_t>> group_rows(
    const anonkit::Table& table, const std::vector<std::string>& qid) {
  std::vector<std::size_t> cols;
  for (const auto& name : qid) cols.push_back(table.column_index(name));
  std::vector<std::vector<anonkit::Cell>> keys;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<anonkit::Cell> key;
    for (std::size_t c : cols) key.push_back(table.cell(r, c));
    bool placed = false;
    for (std::size_t g = 0; g < keys.size(); ++g) {
      if (keys[g] == key) {
        groups[g].push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) {
      keys.push_back(std::move(key));
      groups.push_back({r});
    }
  }
  return groups;
}

inline bool is_qid_naive(const anonkit::Table& table,
                         const std::vector<std::string>& attrs) {
  for (const auto& group : group_rows(table, attrs)) {
    if (group.size() == 1) return true;
  }
  return false;
}

inline std::size_t min_class_size(const anonkit::Table& table,
                                  const std::vector<std::string>& qid) {
  std::size_t best = table.row_count();
  for (const auto& group : group_rows(table, qid)) best = std::min(best, group.size());
  return best;
}

inline std::size_t min_distinct_sensitive(const anonkit::Table& table,
                                          const std::vector<std::string>& qid,
                                          const std::string& sensitive) {
  std::size_t col = table.column_index(sensitive);
  std::size_t best = table.row_count();
  for (const auto& group : group_rows(table, qid)) {
    std::set<anonkit::Cell> distinct;
    for (std::size_t r : group) distinct.insert(table.cell(r, col));
    best = std::min(best, distinct.size());
  }
  return best;
}

struct Risks {
  double prosecutor_max = 0.0;
  double journalist = 0.0;
  double marketer = 0.0;
};

inline Risks risks_naive(const anonkit::Table& table,
                         const std::vector<std::string>& qid) {
  auto groups = group_rows(table, qid);
  Risks risks;
  double miss_all = 1.0;
  double per_record_sum = 0.0;
  for (const auto& group : groups) {
    double risk = 1.0 / static_cast<double>(group.size());
    risks.prosecutor_max = std::max(risks.prosecutor_max, risk);
    miss_all *= 1.0 - risk;
    per_record_sum += risk * static_cast<double>(group.size());
  }
  risks.journalist = 1.0 - miss_all;
  risks.marketer = per_record_sum / static_cast<double>(table.row_count());
  return risks;
}

// Deterministic generator for random test tables. Attribute values come from
// tiny alphabets so class collisions are common.
struct TableGen {
  explicit TableGen(std::uint64_t seed) : rng(seed) {}

  anonkit::Rng rng;

  anonkit::Table random_table(std::size_t max_rows, std::size_t max_qid_attrs) {
    using anonkit::AttributeKind;
    using anonkit::AttributeRole;
    std::size_t n_rows = 1 + rng.below(max_rows);
    std::size_t n_attrs = 1 + rng.below(max_qid_attrs);
    std::vector<anonkit::AttributeSchema> schema;
    std::vector<std::size_t> alphabet;
    for (std::size_t a = 0; a < n_attrs; ++a) {
      bool numeric = rng.below(2) == 0;
      schema.push_back({"q" + std::to_string(a),
                        numeric ? AttributeKind::numeric : AttributeKind::categorical,
                        AttributeRole::quasi_identifier});
      alphabet.push_back(2 + rng.below(4));
    }
    schema.push_back({"s", AttributeKind::categorical, AttributeRole::sensitive});
    std::size_t sensitive_alphabet = 2 + rng.below(3);

    std::vector<std::vector<anonkit::Cell>> rows;
    for (std::size_t r = 0; r < n_rows; ++r) {
      std::vector<anonkit::Cell> row;
      for (std::size_t a = 0; a < n_attrs; ++a) {
        std::size_t v = rng.below(alphabet[a]);
        if (schema[a].kind == AttributeKind::numeric) {
          row.push_back(anonkit::Cell(static_cast<double>(v)));
        } else {
          row.push_back(anonkit::Cell(std::string(1, static_cast<char>('a' + v))));
        }
      }
      row.push_back(anonkit::Cell(std::string(1, static_cast<char>('A' + rng.below(sensitive_alphabet)))));
      rows.push_back(std::move(row));
    }
    return anonkit::Table(std::move(schema), std::move(rows));
  }

  // Non-empty random subset of the table's quasi-identifier attributes.
  std::vector<std::string> random_qid(const anonkit::Table& table) {
    std::vector<std::string> qid_attrs;
    for (const auto& attr : table.schema()) {
      if (attr.role == anonkit::AttributeRole::quasi_identifier) {
        qid_attrs.push_back(attr.name);
      }
    }
    std::vector<std::string> chosen;
    for (const auto& name : qid_attrs) {
      if (rng.below(2) == 0) chosen.push_back(name);
    }
    if (chosen.empty()) chosen.push_back(qid_attrs[rng.below(qid_attrs.size())]);
    return chosen;
  }
};

}  // namespace oracles

#endif  // ANONKIT_TESTS_ORACLES_HPP
