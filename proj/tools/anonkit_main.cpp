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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anonkit/job.hpp"

namespace {

// Config paths resolve against the working directory first, then against
// $ANONKIT_CONFIG_DIR when set.
std::string resolve_config_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (!fs::path(path).is_absolute()) {
    if (const char* dir = std::getenv("ANONKIT_CONFIG_DIR")) {
      fs::path candidate = fs::path(dir) / path;
      if (fs::exists(candidate)) return candidate.string();
    }
  }
  return path;
}

std::optional<std::string> read_config_file(const std::string& path, std::string& error) {
  std::ifstream in(resolve_config_path(path), std::ios::binary);
  if (!in) {
    error = "cannot open config file '" + path + "'";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Flags shared by the table-oriented subcommands. Values set on the command
// line override whatever the config file declared.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> input;
  std::optional<std::vector<std::string>> qid;
  std::optional<std::string> sensitive;
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<double> t;
  std::optional<double> delta;
  std::optional<double> log_base;
  std::optional<double> suppression_budget;
  std::optional<std::size_t> max_qid_set_size;
  std::optional<std::string> anonymized_input;
  std::optional<std::string> group_by;
  std::optional<std::string> measure;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> n_values;
  std::optional<std::size_t> n;
  std::optional<std::size_t> true_count;
  std::optional<double> p_honest;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  std::optional<std::size_t> releases;
  std::optional<std::string> ledger;
  std::optional<std::string> ledger_action;
  std::optional<std::string> spend_label;
  std::optional<std::string> dataset_tag;
  std::optional<double> spend_delta;
  std::optional<std::string> output;
  std::optional<std::string> report;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path,
                  "JSON job config; command-line flags override its fields");
  cmd->add_option("--report", o.report, "write the JSON report here instead of stdout");
}

void add_table_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--input", o.input, "CSV file to read");
  cmd->add_option("--qid", o.qid, "quasi-identifier attributes")->delimiter(',');
  cmd->add_option("--sensitive", o.sensitive, "sensitive attribute");
}

void apply_overrides(const Overrides& o, anonkit::JobConfig& config) {
  if (o.input) config.input_path = *o.input;
  if (o.qid) config.qid = *o.qid;
  if (o.sensitive) config.sensitive = o.sensitive;
  if (o.k) config.k = o.k;
  if (o.l) config.l = o.l;
  if (o.t) config.t = o.t;
  if (o.delta) config.delta = o.delta;
  if (o.log_base) config.log_base = *o.log_base;
  if (o.suppression_budget) config.suppression_budget = *o.suppression_budget;
  if (o.max_qid_set_size) config.max_qid_set_size = *o.max_qid_set_size;
  if (o.anonymized_input) config.anonymized_path = o.anonymized_input;
  if (o.group_by) config.group_by = o.group_by;
  if (o.measure) config.measure = o.measure;
  if (o.epsilon) config.epsilon = o.epsilon;
  if (o.n_values) config.n_values = o.n_values;
  if (o.n) config.n = o.n;
  if (o.true_count) config.true_count = o.true_count;
  if (o.p_honest) config.p_honest = o.p_honest;
  if (o.seed) config.seed = *o.seed;
  if (o.budget) config.budget = o.budget;
  if (o.releases) config.releases = o.releases;
  if (o.ledger) config.ledger_path = o.ledger;
  if (o.ledger_action) config.ledger_action = o.ledger_action;
  if (o.spend_label) config.spend_label = o.spend_label;
  if (o.dataset_tag) config.dataset_tag = o.dataset_tag;
  if (o.spend_delta) config.spend_delta = *o.spend_delta;
  if (o.output) config.output_path = o.output;
  if (o.report) config.report_path = o.report;
}

int run(const std::string& task, const Overrides& o) {
  anonkit::JobConfig config;
  if (o.config_path) {
    std::string error;
    auto text = read_config_file(*o.config_path, error);
    if (!text) {
      std::cerr << "error: " << error << "\n";
      return 1;
    }
    try {
      config = anonkit::parse_job_config(*text);
    } catch (const anonkit::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  config.task = task;
  apply_overrides(o, config);
  return anonkit::run_job(config, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anonkit: tabular anonymization, risk, utility, and DP toolkit"};
  app.require_subcommand(1);

  Overrides o;

  CLI::App* analyze = app.add_subcommand(
      "analyze-qid", "find inclusion-minimal quasi-identifier attribute sets");
  add_common_flags(analyze, o);
  add_table_flags(analyze, o);
  analyze->add_option("--max-set-size", o.max_qid_set_size,
                      "largest attribute-set size to enumerate");

  CLI::App* check = app.add_subcommand(
      "check", "verify k-anonymity / l-diversity / t-closeness / delta-disclosure");
  add_common_flags(check, o);
  add_table_flags(check, o);
  check->add_option("--k", o.k, "required minimum class size");
  check->add_option("--l", o.l, "required distinct sensitive values per class");
  check->add_option("--t", o.t, "max distance between class and global distributions");
  check->add_option("--delta", o.delta, "max |log(q/p)| per sensitive value");
  check->add_option("--log-base", o.log_base, "logarithm base for delta (default 10)");

  CLI::App* anonymize = app.add_subcommand(
      "anonymize", "generalize and suppress until the constraints hold");
  add_common_flags(anonymize, o);
  add_table_flags(anonymize, o);
  anonymize->add_option("--k", o.k, "required minimum class size");
  anonymize->add_option("--l", o.l, "required distinct sensitive values per class");
  anonymize->add_option("--t", o.t, "max distance between class and global distributions");
  anonymize->add_option("--suppression-budget", o.suppression_budget,
                        "max fraction of rows that may be suppressed");
  anonymize->add_option("--output", o.output, "where to write the anonymized CSV");

  CLI::App* risk = app.add_subcommand(
      "risk", "journalist / prosecutor / marketer reidentification risks");
  add_common_flags(risk, o);
  add_table_flags(risk, o);

  CLI::App* utility = app.add_subcommand(
      "utility", "utility loss of a group-by-mean query on anonymized data");
  add_common_flags(utility, o);
  add_table_flags(utility, o);
  utility->add_option("--anonymized-input", o.anonymized_input, "anonymized CSV file");
  utility->add_option("--group-by", o.group_by, "grouping attribute");
  utility->add_option("--measure", o.measure, "numeric attribute to average");

  CLI::App* dp = app.add_subcommand("dp", "differential-privacy tools");
  dp->require_subcommand(1);

  CLI::App* rr = dp->add_subcommand(
      "rr-simulate", "simulate randomized response over a binary secret");
  add_common_flags(rr, o);
  rr->add_option("--n", o.n, "number of respondents");
  rr->add_option("--true-count", o.true_count, "respondents whose true answer is 1");
  rr->add_option("--p-honest", o.p_honest, "chance of answering truthfully (default 0.5)");
  rr->add_option("--seed", o.seed, "RNG seed (default 1)");

  CLI::App* bound = dp->add_subcommand(
      "bound", "reidentification probability bound for an epsilon-DP release");
  add_common_flags(bound, o);
  bound->add_option("--epsilon", o.epsilon, "privacy budget of the release");
  bound->add_option("--n-values", o.n_values, "size of the secret's domain");

  CLI::App* ledger = dp->add_subcommand("ledger", "privacy-budget accounting");
  add_common_flags(ledger, o);
  ledger->add_option("--ledger", o.ledger, "ledger JSON file");
  ledger->add_option("--action", o.ledger_action, "init | spend | show (default show)");
  ledger->add_option("--budget", o.budget, "total budget (init: budgeted mode)");
  ledger->add_option("--releases", o.releases, "planned release count (init)");
  ledger->add_option("--label", o.spend_label, "label of the spend");
  ledger->add_option("--epsilon", o.epsilon, "epsilon of the spend");
  ledger->add_option("--delta", o.spend_delta, "delta of the spend (default 0)");
  ledger->add_option("--dataset-tag", o.dataset_tag,
                     "spends on different tags compose in parallel");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return run("analyze-qid", o);
  if (check->parsed()) return run("check", o);
  if (anonymize->parsed()) return run("anonymize", o);
  if (risk->parsed()) return run("risk", o);
  if (utility->parsed()) return run("utility", o);
  if (rr->parsed()) return run("dp-rr-simulate", o);
  if (bound->parsed()) return run("dp-bound", o);
  if (ledger->parsed()) return run("dp-ledger", o);
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
