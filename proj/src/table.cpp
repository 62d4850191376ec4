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

#include "anonkit/table.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace anonkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits CSV text into records of raw fields. Handles quoted fields with
// embedded commas, newlines and doubled quotes; accepts LF and CRLF.
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool record_started = false;

  std::size_t i = 0;
  const std::size_t n = text.size();
  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
    record_started = false;
  };

  while (i < n) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started || field.empty()) {
          in_quotes = true;
          field_started = true;
          record_started = true;
        } else {
          field += c;  // stray quote mid-field, keep verbatim
        }
        ++i;
        break;
      case ',':
        end_field();
        record_started = true;
        ++i;
        break;
      case '\r':
        if (i + 1 < n && text[i + 1] == '\n') ++i;
        end_record();
        ++i;
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += c;
        field_started = true;
        record_started = true;
        ++i;
        break;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::csv_parse, "unterminated quoted field at end of input");
  }
  if (record_started || field_started || !fields.empty()) {
    end_record();
  }
  return records;
}

Cell parse_cell(std::string_view raw, const AttributeSchema& attr,
                std::size_t row, std::size_t col) {
  std::string_view t = trim(raw);
  if (attr.kind == AttributeKind::numeric) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw Error(ErrorCode::csv_parse,
                  "row " + std::to_string(row) + ", column '" + attr.name +
                      "' (index " + std::to_string(col) + "): cannot parse '" +
                      std::string(t) + "' as a number");
    }
    return Cell(value);
  }
  return Cell(std::string(t));
}

bool needs_quoting(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

}  // namespace

std::string_view kind_name(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::numeric: return "numeric";
    case AttributeKind::categorical: return "categorical";
    case AttributeKind::text: return "text";
  }
  return "?";
}

std::string_view role_name(AttributeRole role) {
  switch (role) {
    case AttributeRole::identifier: return "identifier";
    case AttributeRole::quasi_identifier: return "quasi_identifier";
    case AttributeRole::sensitive: return "sensitive";
    case AttributeRole::insensitive: return "insensitive";
  }
  return "?";
}

AttributeKind kind_from_name(std::string_view name) {
  if (name == "numeric") return AttributeKind::numeric;
  if (name == "categorical") return AttributeKind::categorical;
  if (name == "text") return AttributeKind::text;
  throw Error(ErrorCode::invalid_argument, "unknown attribute kind '" + std::string(name) + "'");
}

AttributeRole role_from_name(std::string_view name) {
  if (name == "identifier") return AttributeRole::identifier;
  if (name == "quasi_identifier") return AttributeRole::quasi_identifier;
  if (name == "sensitive") return AttributeRole::sensitive;
  if (name == "insensitive") return AttributeRole::insensitive;
  throw Error(ErrorCode::invalid_argument, "unknown attribute role '" + std::string(name) + "'");
}

std::string cell_to_string(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  double v = std::get<double>(cell);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

Table::Table(std::vector<AttributeSchema> schema, std::vector<std::vector<Cell>> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  std::set<std::string_view> names;
  for (const auto& attr : schema_) {
    if (!names.insert(attr.name).second) {
      throw Error(ErrorCode::invalid_argument,
                  "duplicate attribute name '" + attr.name + "' in schema");
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != schema_.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                      " cells, schema declares " + std::to_string(schema_.size()));
    }
  }
}

bool Table::has_column(std::string_view name) const {
  for (const auto& attr : schema_) {
    if (attr.name == name) return true;
  }
  return false;
}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + std::string(name) + "'");
}

const AttributeSchema& Table::attribute(std::string_view name) const {
  return schema_[column_index(name)];
}

Table load_table(std::string_view csv_bytes, const std::vector<AttributeSchema>& schema) {
  auto records = split_csv(csv_bytes);
  if (records.empty()) {
    throw Error(ErrorCode::schema_mismatch, "input has no header row");
  }
  const auto& header = records.front();
  if (header.size() != schema.size()) {
    throw Error(ErrorCode::schema_mismatch,
                "header has " + std::to_string(header.size()) + " columns, schema declares " +
                    std::to_string(schema.size()));
  }
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (std::string_view(trim(header[i])) != schema[i].name) {
      throw Error(ErrorCode::schema_mismatch,
                  "header column " + std::to_string(i) + " is '" + header[i] +
                      "', schema expects '" + schema[i].name + "'");
    }
  }

  std::vector<std::vector<Cell>> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    if (record.size() != schema.size()) {
      throw Error(ErrorCode::csv_parse,
                  "row " + std::to_string(r) + " has " + std::to_string(record.size()) +
                      " cells, expected " + std::to_string(schema.size()));
    }
    std::vector<Cell> row;
    row.reserve(schema.size());
    for (std::size_t c = 0; c < schema.size(); ++c) {
      row.push_back(parse_cell(record[c], schema[c], r, c));
    }
    rows.push_back(std::move(row));
  }
  return Table(schema, std::move(rows));
}

std::string write_csv(const Table& table) {
  std::string out;
  auto append_field = [&out](std::string_view s) {
    if (needs_quoting(s)) {
      out += '"';
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += s;
    }
  };
  const auto& schema = table.schema();
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (i) out += ',';
    append_field(schema[i].name);
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      append_field(cell_to_string(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::size_t Partition::covered_rows() const {
  std::size_t n = 0;
  for (const auto& ec : classes) n += ec.size();
  return n;
}

Partition partition_by_qid(const Table& table, const std::vector<std::string>& qid) {
  std::vector<std::size_t> cols;
  cols.reserve(qid.size());
  for (const auto& name : qid) cols.push_back(table.column_index(name));

  std::map<std::vector<Cell>, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<Cell> key;
    key.reserve(cols.size());
    for (std::size_t c : cols) key.push_back(table.cell(r, c));
    groups[std::move(key)].push_back(r);
  }

  Partition partition;
  partition.qid = qid;
  partition.classes.reserve(groups.size());
  for (auto& [key, indices] : groups) {
    partition.classes.push_back(EquivalenceClass{key, std::move(indices)});
  }
  return partition;
}

QidCheck is_qid(const Table& table, const std::vector<std::string>& attrs) {
  if (attrs.empty()) {
    throw Error(ErrorCode::invalid_argument, "QID check needs at least one attribute");
  }
  Partition partition = partition_by_qid(table, attrs);
  QidCheck check;
  for (const auto& ec : partition.classes) {
    if (ec.size() == 1) {
      check.is_qid = true;
      check.singleton_tuples.push_back(ec.qid_values);
    }
  }
  return check;
}

std::vector<std::vector<std::string>> find_minimal_qids(
    const Table& table, const std::vector<std::string>& candidate_attrs,
    std::size_t max_set_size) {
  for (const auto& name : candidate_attrs) table.column_index(name);

  std::vector<std::vector<std::string>> minimal;
  const std::size_t n = candidate_attrs.size();
  const std::size_t cap = std::min(max_set_size, n);

  // Enumerate subsets by increasing size; any superset of a found QID is a
  // QID by monotonicity and therefore not minimal.
  std::vector<std::size_t> combo;
  auto contains_found = [&](const std::vector<std::string>& subset) {
    for (const auto& found : minimal) {
      bool covers = std::ranges::all_of(found, [&](const std::string& a) {
        return std::ranges::find(subset, a) != subset.end();
      });
      if (covers) return true;
    }
    return false;
  };

  for (std::size_t size = 1; size <= cap; ++size) {
    combo.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      std::vector<std::string> subset;
      subset.reserve(size);
      for (std::size_t idx : combo) subset.push_back(candidate_attrs[idx]);
      if (!contains_found(subset) && is_qid(table, subset).is_qid) {
        minimal.push_back(std::move(subset));
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return minimal;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::csv_parse: return "csv_parse";
    case ErrorCode::schema_mismatch: return "schema_mismatch";
    case ErrorCode::unknown_attribute: return "unknown_attribute";
    case ErrorCode::unknown_value: return "unknown_value";
    case ErrorCode::level_out_of_range: return "level_out_of_range";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::io: return "io";
    case ErrorCode::invalid_config: return "invalid_config";
  }
  return "?";
}

}  // namespace anonkit
