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

#include "anonkit/dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "anonkit/error.hpp"
#include "json_util.hpp"

namespace anonkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const RandomizedResponseMechanism& mech) {
  if (!(mech.p_honest >= 0.0 && mech.p_honest <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "p_honest must lie in [0, 1]");
  }
  if (mech.domain_size < 2) {
    throw Error(ErrorCode::invalid_argument, "domain size must be at least 2");
  }
}

}  // namespace

std::size_t rr_respond(std::size_t true_value, const RandomizedResponseMechanism& mech,
                       Rng& rng) {
  validate(mech);
  if (true_value >= mech.domain_size) {
    throw Error(ErrorCode::invalid_argument,
                "true value " + std::to_string(true_value) + " outside domain of size " +
                    std::to_string(mech.domain_size));
  }
  if (rng.uniform() < mech.p_honest) return true_value;
  return rng.below(mech.domain_size);
}

std::size_t rr_respond(std::size_t true_value, const RandomizedResponseMechanism& mech,
                       std::uint64_t seed) {
  Rng rng(seed);
  return rr_respond(true_value, mech, rng);
}

double rr_epsilon(const RandomizedResponseMechanism& mech) {
  validate(mech);
  if (mech.p_honest == 1.0) return kInf;
  double m = static_cast<double>(mech.domain_size);
  double noise = (1.0 - mech.p_honest) / m;
  return std::log((mech.p_honest + noise) / noise);
}

RandomizedResponseMechanism rr_mechanism_for_epsilon(double epsilon,
                                                     std::size_t domain_size) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must be non-negative");
  }
  if (domain_size < 2) {
    throw Error(ErrorCode::invalid_argument, "domain size must be at least 2");
  }
  RandomizedResponseMechanism mech;
  mech.domain_size = domain_size;
  if (std::isinf(epsilon)) {
    mech.p_honest = 1.0;
  } else {
    double grown = std::expm1(epsilon);
    mech.p_honest = grown / (grown + static_cast<double>(domain_size));
  }
  return mech;
}

CountEstimate rr_estimate_count(std::size_t observed_true, std::size_t n,
                                const RandomizedResponseMechanism& mech) {
  validate(mech);
  if (mech.domain_size != 2) {
    throw Error(ErrorCode::invalid_argument,
                "count estimation applies to binary domains only");
  }
  if (mech.p_honest == 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "estimator undefined at p_honest = 0: answers are pure noise");
  }
  if (observed_true > n) {
    throw Error(ErrorCode::invalid_argument, "observed count exceeds n");
  }
  double x_o = static_cast<double>(observed_true);
  double nn = static_cast<double>(n);
  CountEstimate result;
  result.estimate = (x_o - nn * (1.0 - mech.p_honest) / 2.0) / mech.p_honest;
  result.clamped = std::clamp(result.estimate, 0.0, nn);
  return result;
}

double reid_bound(double epsilon, std::uint64_t n_values) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must be non-negative");
  }
  if (n_values < 2) {
    throw Error(ErrorCode::invalid_argument, "n_values must be at least 2");
  }
  // Extended precision keeps calibrated inputs exact: in double,
  // exp(log(3)) lands one ulp above 3 and the ratio misses 0.75.
  long double e = expl(static_cast<long double>(epsilon));
  if (std::isinf(e)) return 1.0;  // budget large enough for certainty
  return static_cast<double>(e / (e + static_cast<long double>(n_values) - 1.0L));
}

double compose_sequential(const std::vector<double>& epsilons) {
  double total = 0.0;
  for (double eps : epsilons) {
    if (!(eps >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "epsilons must be non-negative");
    }
    total += eps;
  }
  return total;
}

double compose_parallel(const std::vector<double>& epsilons) {
  double total = 0.0;
  for (double eps : epsilons) {
    if (!(eps >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "epsilons must be non-negative");
    }
    total = std::max(total, eps);
  }
  return total;
}

void validate(const DpParameters& params) {
  if (!(params.epsilon >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must be non-negative");
  }
  if (!(params.delta >= 0.0 && params.delta < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "delta must lie in [0, 1)");
  }
}

BudgetLedger BudgetLedger::budgeted(double budget, std::size_t planned_releases) {
  if (!(budget > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "budget must be positive");
  }
  if (planned_releases < 1) {
    throw Error(ErrorCode::invalid_argument, "planned release count must be >= 1");
  }
  BudgetLedger ledger;
  ledger.mode_ = Mode::budgeted;
  ledger.budget_ = budget;
  ledger.planned_releases_ = planned_releases;
  return ledger;
}

BudgetLedger BudgetLedger::accumulating() {
  BudgetLedger ledger;
  ledger.mode_ = Mode::accumulating;
  return ledger;
}

double BudgetLedger::per_release_epsilon() const {
  if (mode_ != Mode::budgeted) {
    throw Error(ErrorCode::invalid_argument,
                "per-release allowance exists only in budgeted mode");
  }
  return budget_ / static_cast<double>(planned_releases_);
}

void BudgetLedger::spend(std::string label, double epsilon, double delta,
                         std::string dataset_tag) {
  validate(DpParameters{epsilon, delta});
  if (mode_ == Mode::budgeted) {
    if (entries_.size() >= planned_releases_) {
      throw Error(ErrorCode::invalid_argument,
                  "release count exhausted: " + std::to_string(planned_releases_) +
                      " releases already recorded");
    }
    double remaining = remaining_budget();
    if (epsilon > remaining + 1e-12) {
      throw Error(ErrorCode::invalid_argument,
                  "spend of " + std::to_string(epsilon) + " exceeds remaining budget " +
                      std::to_string(remaining));
    }
  }
  entries_.push_back(Entry{std::move(label), epsilon, delta, std::move(dataset_tag)});
}

double BudgetLedger::spent_epsilon() const {
  double total = 0.0;
  for (const auto& entry : entries_) total += entry.epsilon;
  return total;
}

double BudgetLedger::remaining_budget() const {
  if (mode_ != Mode::budgeted) {
    throw Error(ErrorCode::invalid_argument,
                "remaining budget exists only in budgeted mode");
  }
  return budget_ - spent_epsilon();
}

double BudgetLedger::total_epsilon() const {
  std::map<std::string, double> per_tag;
  for (const auto& entry : entries_) per_tag[entry.dataset_tag] += entry.epsilon;
  double total = 0.0;
  for (const auto& [tag, sum] : per_tag) total = std::max(total, sum);
  return total;
}

double BudgetLedger::total_delta() const {
  std::map<std::string, double> per_tag;
  for (const auto& entry : entries_) per_tag[entry.dataset_tag] += entry.delta;
  double total = 0.0;
  for (const auto& [tag, sum] : per_tag) total = std::max(total, sum);
  return total;
}

std::string BudgetLedger::to_json() const {
  nlohmann::ordered_json doc;
  doc["mode"] = mode_ == Mode::budgeted ? "budgeted" : "accumulating";
  if (mode_ == Mode::budgeted) {
    doc["budget"] = json_number(budget_);
    doc["planned_releases"] = planned_releases_;
  }
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& entry : entries_) {
    doc["entries"].push_back({{"label", entry.label},
                              {"epsilon", json_number(entry.epsilon)},
                              {"delta", json_number(entry.delta)},
                              {"dataset_tag", entry.dataset_tag}});
  }
  return doc.dump(2) + "\n";
}

BudgetLedger BudgetLedger::from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("ledger JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mode") || !doc["mode"].is_string()) {
    throw Error(ErrorCode::invalid_config, "ledger JSON needs a \"mode\" string");
  }
  std::string mode = doc["mode"].get<std::string>();
  BudgetLedger ledger;
  if (mode == "budgeted") {
    if (!doc.contains("budget") || !doc.contains("planned_releases")) {
      throw Error(ErrorCode::invalid_config,
                  "budgeted ledger needs \"budget\" and \"planned_releases\"");
    }
    ledger = budgeted(number_from_json(doc["budget"], "budget"),
                      doc["planned_releases"].get<std::size_t>());
  } else if (mode == "accumulating") {
    ledger = accumulating();
  } else {
    throw Error(ErrorCode::invalid_config,
                "ledger mode must be \"budgeted\" or \"accumulating\"");
  }
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array()) {
      throw Error(ErrorCode::invalid_config, "ledger \"entries\" must be an array");
    }
    for (const auto& item : doc["entries"]) {
      if (!item.is_object() || !item.contains("label") || !item.contains("epsilon")) {
        throw Error(ErrorCode::invalid_config,
                    "ledger entry needs \"label\" and \"epsilon\"");
      }
      ledger.spend(item["label"].get<std::string>(),
                   number_from_json(item["epsilon"], "epsilon"),
                   item.contains("delta") ? number_from_json(item["delta"], "delta") : 0.0,
                   item.contains("dataset_tag") ? item["dataset_tag"].get<std::string>()
                                                : "default");
    }
  }
  return ledger;
}

}  // namespace anonkit
