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

#include "anonkit/config.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "json_util.hpp"

namespace anonkit {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kTasks = {
    "analyze-qid", "check",          "anonymize", "risk",
    "utility",     "dp-rr-simulate", "dp-bound",  "dp-ledger"};

const std::set<std::string> kKnownKeys = {
    "task",          "input",           "schema",          "hierarchies",
    "qid",           "sensitive",       "k",               "l",
    "t",             "delta",           "log_base",        "suppression_budget",
    "max_qid_set_size", "anonymized_input", "group_by",    "measure",
    "epsilon",       "n_values",        "n",               "true_count",
    "p_honest",      "seed",            "budget",          "releases",
    "ledger",        "ledger_action",   "spend_label",     "dataset_tag",
    "spend_delta",   "output",          "report"};

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorCode::invalid_config, message);
}

double as_number(const json& value, const char* field) {
  if (!value.is_number()) bad(std::string(field) + " must be a number");
  return value.get<double>();
}

std::size_t as_count(const json& value, const char* field) {
  if (!value.is_number_unsigned()) {
    bad(std::string(field) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string as_string(const json& value, const char* field) {
  if (!value.is_string()) bad(std::string(field) + " must be a string");
  return value.get<std::string>();
}

std::vector<AttributeSchema> parse_schema(const json& value) {
  if (!value.is_array()) bad("schema must be an array of attribute objects");
  std::vector<AttributeSchema> schema;
  for (const auto& item : value) {
    if (!item.is_object() || !item.contains("name")) {
      bad("each schema attribute needs at least a \"name\"");
    }
    AttributeSchema attr;
    attr.name = as_string(item["name"], "schema attribute name");
    if (item.contains("kind")) {
      try {
        attr.kind = kind_from_name(as_string(item["kind"], "schema attribute kind"));
      } catch (const Error& e) {
        bad(e.what());
      }
    }
    if (item.contains("role")) {
      try {
        attr.role = role_from_name(as_string(item["role"], "schema attribute role"));
      } catch (const Error& e) {
        bad(e.what());
      }
    }
    schema.push_back(std::move(attr));
  }
  return schema;
}

std::vector<HierarchySpec> parse_hierarchies(const json& value) {
  if (!value.is_array()) bad("hierarchies must be an array");
  std::vector<HierarchySpec> specs;
  for (const auto& item : value) {
    if (!item.is_object() || !item.contains("attribute")) {
      bad("each hierarchy needs an \"attribute\"");
    }
    HierarchySpec spec;
    spec.attribute = as_string(item["attribute"], "hierarchy attribute");
    bool has_widths = item.contains("interval_widths");
    bool has_levels = item.contains("levels");
    if (has_widths == has_levels) {
      bad("hierarchy for '" + spec.attribute +
          "' needs exactly one of \"interval_widths\" or \"levels\"");
    }
    spec.is_interval = has_widths;
    if (has_widths) {
      if (!item["interval_widths"].is_array()) {
        bad("interval_widths for '" + spec.attribute + "' must be an array of numbers");
      }
      for (const auto& w : item["interval_widths"]) {
        spec.interval_widths.push_back(as_number(w, "interval width"));
      }
    } else {
      if (!item["levels"].is_array()) {
        bad("levels for '" + spec.attribute + "' must be an array of objects");
      }
      for (const auto& level : item["levels"]) {
        if (!level.is_object()) {
          bad("each level of '" + spec.attribute + "' must map values to labels");
        }
        std::map<std::string, std::string> mapping;
        for (const auto& [ground, label] : level.items()) {
          mapping[ground] = as_string(label, "hierarchy label");
        }
        spec.levels.push_back(std::move(mapping));
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace

JobConfig parse_job_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.count(key)) bad("unknown config key \"" + key + "\"");
  }

  JobConfig config;
  if (doc.contains("task")) config.task = as_string(doc["task"], "task");
  if (doc.contains("input")) config.input_path = as_string(doc["input"], "input");
  if (doc.contains("schema")) config.schema = parse_schema(doc["schema"]);
  if (doc.contains("hierarchies")) {
    config.hierarchies = parse_hierarchies(doc["hierarchies"]);
  }
  if (doc.contains("qid")) {
    if (!doc["qid"].is_array()) bad("qid must be an array of attribute names");
    for (const auto& name : doc["qid"]) config.qid.push_back(as_string(name, "qid entry"));
  }
  if (doc.contains("sensitive")) config.sensitive = as_string(doc["sensitive"], "sensitive");
  if (doc.contains("k")) config.k = as_count(doc["k"], "k");
  if (doc.contains("l")) config.l = as_count(doc["l"], "l");
  if (doc.contains("t")) config.t = as_number(doc["t"], "t");
  if (doc.contains("delta")) config.delta = as_number(doc["delta"], "delta");
  if (doc.contains("log_base")) config.log_base = as_number(doc["log_base"], "log_base");
  if (doc.contains("suppression_budget")) {
    config.suppression_budget = as_number(doc["suppression_budget"], "suppression_budget");
  }
  if (doc.contains("max_qid_set_size")) {
    config.max_qid_set_size = as_count(doc["max_qid_set_size"], "max_qid_set_size");
  }
  if (doc.contains("anonymized_input")) {
    config.anonymized_path = as_string(doc["anonymized_input"], "anonymized_input");
  }
  if (doc.contains("group_by")) config.group_by = as_string(doc["group_by"], "group_by");
  if (doc.contains("measure")) config.measure = as_string(doc["measure"], "measure");
  if (doc.contains("epsilon")) {
    config.epsilon = number_from_json(doc["epsilon"], "epsilon");
  }
  if (doc.contains("n_values")) {
    config.n_values = static_cast<std::uint64_t>(as_count(doc["n_values"], "n_values"));
  }
  if (doc.contains("n")) config.n = as_count(doc["n"], "n");
  if (doc.contains("true_count")) config.true_count = as_count(doc["true_count"], "true_count");
  if (doc.contains("p_honest")) config.p_honest = as_number(doc["p_honest"], "p_honest");
  if (doc.contains("seed")) config.seed = static_cast<std::uint64_t>(as_count(doc["seed"], "seed"));
  if (doc.contains("budget")) config.budget = as_number(doc["budget"], "budget");
  if (doc.contains("releases")) config.releases = as_count(doc["releases"], "releases");
  if (doc.contains("ledger")) config.ledger_path = as_string(doc["ledger"], "ledger");
  if (doc.contains("ledger_action")) {
    config.ledger_action = as_string(doc["ledger_action"], "ledger_action");
  }
  if (doc.contains("spend_label")) {
    config.spend_label = as_string(doc["spend_label"], "spend_label");
  }
  if (doc.contains("dataset_tag")) {
    config.dataset_tag = as_string(doc["dataset_tag"], "dataset_tag");
  }
  if (doc.contains("spend_delta")) {
    config.spend_delta = as_number(doc["spend_delta"], "spend_delta");
  }
  if (doc.contains("output")) config.output_path = as_string(doc["output"], "output");
  if (doc.contains("report")) config.report_path = as_string(doc["report"], "report");
  return config;
}

HierarchySet build_hierarchies(const std::vector<HierarchySpec>& specs) {
  HierarchySet hierarchies;
  for (const auto& spec : specs) {
    if (hierarchies.count(spec.attribute)) {
      throw Error(ErrorCode::invalid_config,
                  "duplicate hierarchy for attribute '" + spec.attribute + "'");
    }
    if (spec.is_interval) {
      hierarchies.emplace(spec.attribute,
                          GeneralizationHierarchy::intervals(spec.attribute,
                                                             spec.interval_widths));
    } else {
      hierarchies.emplace(spec.attribute, GeneralizationHierarchy::explicit_levels(
                                              spec.attribute, spec.levels));
    }
  }
  return hierarchies;
}

std::vector<std::string> validate_config(const JobConfig& config) {
  std::vector<std::string> diagnostics;
  auto complain = [&diagnostics](std::string message) {
    diagnostics.push_back(std::move(message));
  };

  if (!kTasks.count(config.task)) {
    complain("task: must be one of analyze-qid, check, anonymize, risk, utility, "
             "dp-rr-simulate, dp-bound, dp-ledger");
    return diagnostics;
  }
  bool table_task = config.task == "analyze-qid" || config.task == "check" ||
                    config.task == "anonymize" || config.task == "risk" ||
                    config.task == "utility";

  std::set<std::string> attr_names;
  for (const auto& attr : config.schema) attr_names.insert(attr.name);

  if (table_task) {
    if (config.input_path.empty()) complain("input: path to the CSV is required");
    if (config.schema.empty()) complain("schema: attribute list is required");
    for (const auto& attr : config.qid) {
      if (!attr_names.count(attr)) complain("qid: attribute '" + attr + "' not in schema");
    }
    if (config.sensitive && !attr_names.count(*config.sensitive)) {
      complain("sensitive: attribute '" + *config.sensitive + "' not in schema");
    }
    for (const auto& spec : config.hierarchies) {
      if (!attr_names.count(spec.attribute)) {
        complain("hierarchies: attribute '" + spec.attribute + "' not in schema");
      }
    }
  }

  if (config.k && *config.k < 1) complain("k: must be >= 1");
  if (config.l && *config.l < 1) complain("l: must be >= 1");
  if (config.t && !(*config.t >= 0.0 && *config.t <= 1.0)) complain("t: must lie in [0, 1]");
  if (config.delta && !(*config.delta > 0.0)) complain("delta: must be positive");
  if (!(config.log_base > 1.0)) complain("log_base: must exceed 1");
  if (!(config.suppression_budget >= 0.0 && config.suppression_budget <= 1.0)) {
    complain("suppression_budget: must lie in [0, 1]");
  }

  bool needs_sensitive = config.l || config.t || config.delta;
  if ((config.task == "check" || config.task == "anonymize") && needs_sensitive &&
      !config.sensitive) {
    complain("sensitive: required by the l / t / delta constraints");
  }

  if (config.task == "check" && !config.k && !config.l && !config.t && !config.delta) {
    complain("check: at least one of k, l, t, delta is required");
  }

  if (config.task == "anonymize" || config.task == "risk" || config.task == "check") {
    if (config.qid.empty()) complain("qid: attribute list is required");
  }
  if (config.task == "anonymize") {
    if (!config.k) complain("k: required by anonymize");
    std::set<std::string> hier_attrs;
    for (const auto& spec : config.hierarchies) hier_attrs.insert(spec.attribute);
    for (const auto& attr : config.qid) {
      if (!hier_attrs.count(attr)) {
        complain("hierarchies: no hierarchy for qid attribute '" + attr + "'");
      }
    }
    if (!config.output_path) complain("output: path for the anonymized CSV is required");
  }

  if (config.task == "utility") {
    if (!config.anonymized_path) complain("anonymized_input: path is required");
    if (!config.group_by) {
      complain("group_by: attribute is required");
    } else {
      if (!attr_names.count(*config.group_by)) {
        complain("group_by: attribute '" + *config.group_by + "' not in schema");
      }
      bool has_hierarchy = std::any_of(
          config.hierarchies.begin(), config.hierarchies.end(),
          [&](const HierarchySpec& spec) { return spec.attribute == *config.group_by; });
      if (!has_hierarchy) {
        complain("hierarchies: no hierarchy for group_by attribute '" + *config.group_by +
                 "'");
      }
    }
    if (!config.measure) {
      complain("measure: attribute is required");
    } else if (!attr_names.count(*config.measure)) {
      complain("measure: attribute '" + *config.measure + "' not in schema");
    }
  }

  if (config.task == "dp-rr-simulate") {
    if (!config.n) {
      complain("n: respondent count is required");
    } else if (*config.n < 1) {
      complain("n: must be >= 1");
    }
    if (!config.true_count) {
      complain("true_count: is required");
    } else if (config.n && *config.true_count > *config.n) {
      complain("true_count: must not exceed n");
    }
    if (config.p_honest && !(*config.p_honest >= 0.0 && *config.p_honest <= 1.0)) {
      complain("p_honest: must lie in [0, 1]");
    }
  }

  if (config.task == "dp-bound") {
    if (!config.epsilon) {
      complain("epsilon: is required");
    } else if (!(*config.epsilon >= 0.0)) {
      complain("epsilon: must be non-negative");
    }
    if (!config.n_values) {
      complain("n_values: is required");
    } else if (*config.n_values < 2) {
      complain("n_values: must be at least 2");
    }
  }

  if (config.task == "dp-ledger") {
    if (!config.ledger_path) complain("ledger: path to the ledger file is required");
    std::string action = config.ledger_action.value_or("show");
    if (action != "init" && action != "spend" && action != "show") {
      complain("ledger_action: must be init, spend, or show");
    }
    if (action == "init") {
      bool budgeted = config.budget || config.releases;
      if (budgeted) {
        if (!config.budget || !(*config.budget > 0.0)) {
          complain("budget: must be positive for a budgeted ledger");
        }
        if (!config.releases || *config.releases < 1) {
          complain("releases: must be >= 1 for a budgeted ledger");
        }
      }
    }
    if (action == "spend") {
      if (!config.spend_label) complain("spend_label: is required to record a spend");
      if (!config.epsilon) {
        complain("epsilon: is required to record a spend");
      } else if (!(*config.epsilon >= 0.0)) {
        complain("epsilon: must be non-negative");
      }
    }
  }

  return diagnostics;
}

}  // namespace anonkit
