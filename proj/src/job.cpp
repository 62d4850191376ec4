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

#include "anonkit/job.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anonkit/anonymize.hpp"
#include "anonkit/dp.hpp"
#include "anonkit/models.hpp"
#include "anonkit/risk.hpp"
#include "anonkit/utility.hpp"
#include "json_util.hpp"

namespace anonkit {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << bytes;
  if (!out) throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

json cell_json(const Cell& cell) {
  if (const auto* v = std::get_if<double>(&cell)) return json_number(*v);
  return std::get<std::string>(cell);
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const auto& cell : cells) out.push_back(cell_json(cell));
  return out;
}

json verdict_json(const ModelVerdict& verdict) {
  json out;
  out["model"] = verdict.model;
  out["threshold"] = json_number(verdict.threshold);
  out["satisfied"] = verdict.satisfied;
  out["achieved"] = json_number(verdict.achieved);
  out["violating_classes"] = json::array();
  for (const auto& cls : verdict.violating_classes) {
    out["violating_classes"].push_back(cells_json(cls));
  }
  if (!verdict.detail.empty()) out["detail"] = verdict.detail;
  return out;
}

json risk_json(const RiskReport& risks) {
  json out;
  out["journalist"] = json_number(risks.journalist);
  out["prosecutor_max"] = json_number(risks.prosecutor_max);
  out["marketer"] = json_number(risks.marketer);
  json per_record = json::object();
  for (const auto& [record, risk] : risks.prosecutor_per_record) {
    per_record[std::to_string(record)] = json_number(risk);
  }
  out["prosecutor_per_record"] = std::move(per_record);
  json histogram = json::object();
  for (const auto& [size, count] : risks.class_size_histogram) {
    histogram[std::to_string(size)] = count;
  }
  out["class_size_histogram"] = std::move(histogram);
  return out;
}

Table load_input(const JobConfig& config) {
  return load_table(read_file(config.input_path), config.schema);
}

// Schema the anonymized CSV is expected to carry: identifiers are gone and
// generalized attributes hold labels, so they read back as categorical.
std::vector<AttributeSchema> anonymized_schema(const JobConfig& config) {
  std::vector<AttributeSchema> schema;
  for (const auto& attr : config.schema) {
    if (attr.role == AttributeRole::identifier) continue;
    AttributeSchema out = attr;
    for (const auto& spec : config.hierarchies) {
      if (spec.attribute == attr.name) {
        out.kind = AttributeKind::categorical;
        break;
      }
    }
    schema.push_back(std::move(out));
  }
  return schema;
}

json run_analyze_qid(const JobConfig& config) {
  Table table = load_input(config);
  std::vector<std::string> candidates = config.qid;
  if (candidates.empty()) {
    for (const auto& attr : config.schema) candidates.push_back(attr.name);
  }
  auto minimal = find_minimal_qids(table, candidates, config.max_qid_set_size);
  json report;
  report["task"] = config.task;
  report["input"] = config.input_path;
  report["candidates"] = candidates;
  report["max_set_size"] = config.max_qid_set_size;
  report["minimal_qids"] = json::array();
  for (const auto& attrs : minimal) {
    QidCheck check = is_qid(table, attrs);
    json entry;
    entry["attributes"] = attrs;
    entry["singleton_count"] = check.singleton_tuples.size();
    json witnesses = json::array();
    for (const auto& tuple : check.singleton_tuples) witnesses.push_back(cells_json(tuple));
    entry["singleton_tuples"] = std::move(witnesses);
    report["minimal_qids"].push_back(std::move(entry));
  }
  return report;
}

json run_check(const JobConfig& config, int& exit_code) {
  Table table = load_input(config);
  Partition partition = partition_by_qid(table, config.qid);
  std::vector<ModelVerdict> verdicts;
  if (config.k) verdicts.push_back(check_k_anonymity(partition, *config.k));
  if (config.l) {
    verdicts.push_back(check_l_diversity(table, partition, *config.sensitive, *config.l));
  }
  if (config.t) {
    verdicts.push_back(check_t_closeness(table, partition, *config.sensitive, *config.t));
  }
  if (config.delta) {
    verdicts.push_back(check_delta_disclosure(table, partition, *config.sensitive,
                                              *config.delta, config.log_base));
  }
  bool all_satisfied = true;
  json report;
  report["task"] = config.task;
  report["input"] = config.input_path;
  report["qid"] = config.qid;
  report["class_count"] = partition.classes.size();
  report["verdicts"] = json::array();
  for (const auto& verdict : verdicts) {
    all_satisfied = all_satisfied && verdict.satisfied;
    report["verdicts"].push_back(verdict_json(verdict));
  }
  report["satisfied"] = all_satisfied;
  if (!all_satisfied) exit_code = 2;
  return report;
}

json run_anonymize(const JobConfig& config) {
  Table table = load_input(config);
  HierarchySet hierarchies = build_hierarchies(config.hierarchies);
  Constraints constraints;
  constraints.k = *config.k;
  constraints.l = config.l;
  constraints.t = config.t;
  constraints.sensitive = config.sensitive;
  AnonymizeOptions options;
  options.suppression_budget = config.suppression_budget;
  AnonymizationResult result =
      anonymize(table, config.qid, hierarchies, constraints, options);

  write_file(*config.output_path, write_csv(result.output_table));

  json report;
  report["task"] = config.task;
  report["input"] = config.input_path;
  report["output"] = *config.output_path;
  report["qid"] = config.qid;
  report["node"] = json::object();
  for (const auto& [attr, level] : result.chosen_node.levels) {
    report["node"][attr] = level;
  }
  report["loss"] = json_number(result.loss);
  report["suppressed_row_count"] = result.suppressed_row_indices.size();
  report["suppressed_row_indices"] = result.suppressed_row_indices;
  report["verdicts"] = json::array();
  for (const auto& verdict : result.verdicts) {
    report["verdicts"].push_back(verdict_json(verdict));
  }
  if (result.output_table.row_count() > 0) {
    report["risks"] = risk_json(
        assess_risks(partition_by_qid(result.output_table, config.qid)));
  }
  return report;
}

json run_risk(const JobConfig& config) {
  Table table = load_input(config);
  Partition partition = partition_by_qid(table, config.qid);
  json report;
  report["task"] = config.task;
  report["input"] = config.input_path;
  report["qid"] = config.qid;
  report["class_count"] = partition.classes.size();
  report["risks"] = risk_json(assess_risks(partition));
  return report;
}

json run_utility(const JobConfig& config) {
  Table original = load_input(config);
  Table anonymized =
      load_table(read_file(*config.anonymized_path), anonymized_schema(config));
  HierarchySet hierarchies = build_hierarchies(config.hierarchies);
  auto original_groups = run_group_mean(original, *config.group_by, *config.measure);
  auto anonymized_groups = run_group_mean(anonymized, *config.group_by, *config.measure);
  UtilityReport utility = mean_normalized_error(original_groups, anonymized_groups,
                                                hierarchies.at(*config.group_by));
  json report;
  report["task"] = config.task;
  report["input"] = config.input_path;
  report["anonymized_input"] = *config.anonymized_path;
  report["query"] = {{"group_by", *config.group_by}, {"measure", *config.measure}};
  report["mean_normalized_error"] = json_number(utility.mean_normalized_error);
  report["per_group"] = json::array();
  for (const auto& group : utility.per_group) {
    report["per_group"].push_back({{"original_key", cell_json(group.original_key)},
                                   {"matched_key", cell_json(group.matched_key)},
                                   {"original_value", json_number(group.original_value)},
                                   {"anonymized_value", json_number(group.anonymized_value)},
                                   {"normalized_error", json_number(group.normalized_error)}});
  }
  return report;
}

json run_rr_simulate(const JobConfig& config) {
  RandomizedResponseMechanism mech;
  mech.p_honest = config.p_honest.value_or(0.5);
  std::size_t n = *config.n;
  std::size_t true_count = *config.true_count;
  Rng rng(config.seed);
  std::size_t observed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t truth = i < true_count ? 1 : 0;
    observed += rr_respond(truth, mech, rng) == 1 ? 1 : 0;
  }
  CountEstimate estimate = rr_estimate_count(observed, n, mech);
  json report;
  report["task"] = config.task;
  report["n"] = n;
  report["true_count"] = true_count;
  report["p_honest"] = json_number(mech.p_honest);
  report["seed"] = config.seed;
  report["epsilon"] = json_number(rr_epsilon(mech));
  report["observed_true"] = observed;
  report["estimate"] = json_number(estimate.estimate);
  report["estimate_clamped"] = json_number(estimate.clamped);
  return report;
}

json run_bound(const JobConfig& config) {
  json report;
  report["task"] = config.task;
  report["epsilon"] = json_number(*config.epsilon);
  report["n_values"] = *config.n_values;
  report["bound"] = json_number(reid_bound(*config.epsilon, *config.n_values));
  return report;
}

json ledger_json(const BudgetLedger& ledger) {
  json out;
  out["mode"] = ledger.mode() == BudgetLedger::Mode::budgeted ? "budgeted" : "accumulating";
  if (ledger.mode() == BudgetLedger::Mode::budgeted) {
    out["budget"] = json_number(ledger.budget());
    out["planned_releases"] = ledger.planned_releases();
    out["per_release_epsilon"] = json_number(ledger.per_release_epsilon());
    out["spent"] = json_number(ledger.spent_epsilon());
    out["remaining"] = json_number(ledger.remaining_budget());
  }
  out["total_epsilon"] = json_number(ledger.total_epsilon());
  out["total_delta"] = json_number(ledger.total_delta());
  out["entry_count"] = ledger.entries().size();
  json entries = json::array();
  for (const auto& entry : ledger.entries()) {
    entries.push_back({{"label", entry.label},
                       {"epsilon", json_number(entry.epsilon)},
                       {"delta", json_number(entry.delta)},
                       {"dataset_tag", entry.dataset_tag}});
  }
  out["entries"] = std::move(entries);
  return out;
}

json run_ledger(const JobConfig& config) {
  std::string action = config.ledger_action.value_or("show");
  json report;
  report["task"] = config.task;
  report["action"] = action;
  report["ledger"] = *config.ledger_path;
  if (action == "init") {
    BudgetLedger ledger = config.budget
                              ? BudgetLedger::budgeted(*config.budget, *config.releases)
                              : BudgetLedger::accumulating();
    write_file(*config.ledger_path, ledger.to_json());
    report["state"] = ledger_json(ledger);
  } else if (action == "spend") {
    BudgetLedger ledger = BudgetLedger::from_json(read_file(*config.ledger_path));
    ledger.spend(*config.spend_label, *config.epsilon, config.spend_delta,
                 config.dataset_tag.value_or("default"));
    write_file(*config.ledger_path, ledger.to_json());
    report["state"] = ledger_json(ledger);
  } else {
    BudgetLedger ledger = BudgetLedger::from_json(read_file(*config.ledger_path));
    report["state"] = ledger_json(ledger);
  }
  return report;
}

void emit(const JobConfig& config, const json& report, std::ostream& fallback) {
  std::string bytes = report.dump(2) + "\n";
  if (config.report_path) {
    write_file(*config.report_path, bytes);
  } else {
    fallback << bytes;
  }
}

}  // namespace

int run_job(const JobConfig& config, std::ostream& fallback_report) {
  json report;
  int exit_code = 0;
  try {
    std::vector<std::string> diagnostics = validate_config(config);
    if (!diagnostics.empty()) {
      report["task"] = config.task;
      report["error"] = {{"code", "invalid_config"}, {"diagnostics", diagnostics}};
      emit(config, report, fallback_report);
      return 1;
    }
    if (config.task == "analyze-qid") {
      report = run_analyze_qid(config);
    } else if (config.task == "check") {
      report = run_check(config, exit_code);
    } else if (config.task == "anonymize") {
      report = run_anonymize(config);
    } else if (config.task == "risk") {
      report = run_risk(config);
    } else if (config.task == "utility") {
      report = run_utility(config);
    } else if (config.task == "dp-rr-simulate") {
      report = run_rr_simulate(config);
    } else if (config.task == "dp-bound") {
      report = run_bound(config);
    } else {
      report = run_ledger(config);
    }
  } catch (const InfeasibleError& e) {
    report = json::object();
    report["task"] = config.task;
    report["error"] = {{"code", std::string(error_code_name(e.code()))},
                       {"message", e.what()},
                       {"best_achieved_k", e.best_achieved_k()},
                       {"min_suppression_needed", json_number(e.min_suppression_needed())}};
    exit_code = 2;
  } catch (const Error& e) {
    report = json::object();
    report["task"] = config.task;
    report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    exit_code = 1;
  }
  emit(config, report, fallback_report);
  return exit_code;
}

}  // namespace anonkit
