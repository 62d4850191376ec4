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

#ifndef ANONKIT_TABLE_HPP
#define ANONKIT_TABLE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anonkit/error.hpp"

namespace anonkit {

enum class AttributeKind { numeric, categorical, text };
enum class AttributeRole { identifier, quasi_identifier, sensitive, insensitive };

std::string_view kind_name(AttributeKind kind);
std::string_view role_name(AttributeRole role);
AttributeKind kind_from_name(std::string_view name);
AttributeRole role_from_name(std::string_view name);

struct AttributeSchema {
  std::string name;
  AttributeKind kind = AttributeKind::text;
  AttributeRole role = AttributeRole::insensitive;
};

// A cell holds either a parsed number or a string (categorical values, free
// text and interval labels alike). variant's built-in comparisons give the
// exact-equality semantics used for partitioning: numbers order before
// strings, then by value.
using Cell = std::variant<double, std::string>;

// Canonical text rendering: numbers print in shortest round-trip form
// (integers without a decimal point), strings pass through unchanged.
std::string cell_to_string(const Cell& cell);

// Immutable rectangular dataset with a typed, role-annotated schema.
class Table {
 public:
  Table() = default;
  Table(std::vector<AttributeSchema> schema, std::vector<std::vector<Cell>> rows);

  const std::vector<AttributeSchema>& schema() const { return schema_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return schema_.size(); }

  const std::vector<Cell>& row(std::size_t i) const { return rows_.at(i); }
  const Cell& cell(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

  bool has_column(std::string_view name) const;
  // Index of the named attribute; throws unknown_attribute otherwise.
  std::size_t column_index(std::string_view name) const;
  const AttributeSchema& attribute(std::string_view name) const;

 private:
  std::vector<AttributeSchema> schema_;
  std::vector<std::vector<Cell>> rows_;
};

// Parses RFC-4180-style CSV (header row, quoted fields, UTF-8 passthrough)
// against the declared schema. Numeric cells parse as decimal numbers; parse
// failures report the offending row and column.
Table load_table(std::string_view csv_bytes, const std::vector<AttributeSchema>& schema);

// Serializes back to CSV: header row, LF line endings, minimal quoting.
std::string write_csv(const Table& table);

struct EquivalenceClass {
  std::vector<Cell> qid_values;          // one value per qid attribute
  std::vector<std::size_t> row_indices;  // indices into the source table

  std::size_t size() const { return row_indices.size(); }
};

// Equivalence-class decomposition of a table under a QID attribute set.
// Classes are sorted by their qid tuples, so the order is deterministic.
struct Partition {
  std::vector<std::string> qid;
  std::vector<EquivalenceClass> classes;

  std::size_t covered_rows() const;
};

Partition partition_by_qid(const Table& table, const std::vector<std::string>& qid);

struct QidCheck {
  bool is_qid = false;
  // qid tuples that single out exactly one record (the witnesses).
  std::vector<std::vector<Cell>> singleton_tuples;
};

// True iff grouping by attrs yields at least one class of size 1.
QidCheck is_qid(const Table& table, const std::vector<std::string>& attrs);

// All inclusion-minimal attribute subsets of size <= max_set_size that are
// QIDs. Every superset of a returned set is itself a QID (monotonicity), so
// supersets of found sets are skipped. The size cap bounds the otherwise
// exponential enumeration.
std::vector<std::vector<std::string>> find_minimal_qids(
    const Table& table, const std::vector<std::string>& candidate_attrs,
    std::size_t max_set_size = 3);

}  // namespace anonkit

#endif  // ANONKIT_TABLE_HPP
