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

#ifndef ANONKIT_CONFIG_HPP
#define ANONKIT_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/table.hpp"

namespace anonkit {

// Hierarchy declaration as written in a config document; exactly one of
// interval_widths / levels is present.
struct HierarchySpec {
  std::string attribute;
  bool is_interval = false;
  std::vector<double> interval_widths;
  std::vector<std::map<std::string, std::string>> levels;
};

// One batch job: which task to run, over which input, with which parameters.
// Optionals left empty fall back to task defaults; validate_config reports
// what a task is missing.
struct JobConfig {
  std::string task;  // analyze-qid | check | anonymize | risk | utility |
                     // dp-rr-simulate | dp-bound | dp-ledger
  std::string input_path;
  std::vector<AttributeSchema> schema;
  std::vector<HierarchySpec> hierarchies;
  std::vector<std::string> qid;
  std::optional<std::string> sensitive;

  // Constraint and analysis parameters.
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<double> t;
  std::optional<double> delta;
  double log_base = 10.0;
  double suppression_budget = 0.0;
  std::size_t max_qid_set_size = 3;

  // Utility task: the anonymized table and the aggregate query.
  std::optional<std::string> anonymized_path;
  std::optional<std::string> group_by;
  std::optional<std::string> measure;

  // Differential-privacy tasks.
  std::optional<double> epsilon;
  std::optional<std::uint64_t> n_values;
  std::optional<std::size_t> n;
  std::optional<std::size_t> true_count;
  std::optional<double> p_honest;
  std::uint64_t seed = 1;
  std::optional<double> budget;
  std::optional<std::size_t> releases;
  std::optional<std::string> ledger_path;
  std::optional<std::string> ledger_action;  // init | spend | show
  std::optional<std::string> spend_label;
  std::optional<std::string> dataset_tag;
  double spend_delta = 0.0;

  // Output destinations; the report falls back to stdout.
  std::optional<std::string> output_path;  // anonymize's CSV
  std::optional<std::string> report_path;  // JSON report
};

// Parses a JSON config document. Structural problems (non-JSON input, wrong
// value types, unknown keys) throw invalid_config; semantic gaps are left to
// validate_config.
JobConfig parse_job_config(std::string_view json_text);

// Every reason the config cannot run, each naming the offending field.
// Empty iff the job is runnable.
std::vector<std::string> validate_config(const JobConfig& config);

// Builds the declared hierarchies, keyed by attribute.
HierarchySet build_hierarchies(const std::vector<HierarchySpec>& specs);

}  // namespace anonkit

#endif  // ANONKIT_CONFIG_HPP
