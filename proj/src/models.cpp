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

#include "anonkit/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace anonkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::map<Cell, std::size_t> value_counts(const Table& table, std::size_t col,
                                         const std::vector<std::size_t>& rows) {
  std::map<Cell, std::size_t> counts;
  for (std::size_t r : rows) counts[table.cell(r, col)]++;
  return counts;
}

}  // namespace

SensitiveDistribution sensitive_distribution(const Table& table,
                                             std::string_view sensitive) {
  std::size_t col = table.column_index(sensitive);
  if (table.row_count() == 0) {
    throw Error(ErrorCode::invalid_argument,
                "cannot take a value distribution over an empty table");
  }
  std::vector<std::size_t> all(table.row_count());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  auto counts = value_counts(table, col, all);
  SensitiveDistribution dist;
  double n = static_cast<double>(table.row_count());
  for (const auto& [value, count] : counts) {
    dist.support.push_back(value);
    dist.frequencies.push_back(static_cast<double>(count) / n);
  }
  return dist;
}

SensitiveDistribution class_distribution(const Table& table,
                                         const EquivalenceClass& cls,
                                         std::size_t sensitive_col,
                                         const SensitiveDistribution& global) {
  auto counts = value_counts(table, sensitive_col, cls.row_indices);
  SensitiveDistribution dist;
  dist.support = global.support;
  dist.frequencies.resize(global.support.size(), 0.0);
  double n = static_cast<double>(cls.size());
  for (std::size_t i = 0; i < global.support.size(); ++i) {
    if (auto it = counts.find(global.support[i]); it != counts.end()) {
      dist.frequencies[i] = static_cast<double>(it->second) / n;
    }
  }
  return dist;
}

double total_variation(const SensitiveDistribution& a, const SensitiveDistribution& b) {
  if (a.support != b.support) {
    throw Error(ErrorCode::invalid_argument,
                "total variation requires distributions on the same support");
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.frequencies.size(); ++i) {
    l1 += std::abs(a.frequencies[i] - b.frequencies[i]);
  }
  return 0.5 * l1;
}

double log_frequency_ratio(double q, double p, double log_base) {
  if (p <= 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "log frequency ratio needs a positive global frequency");
  }
  if (q <= 0.0) return kInf;
  return std::abs(std::log(q / p) / std::log(log_base));
}

ModelVerdict check_k_anonymity(const Partition& partition, std::size_t k) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  }
  ModelVerdict verdict;
  verdict.model = "k-anonymity";
  verdict.threshold = static_cast<double>(k);
  std::size_t min_size = 0;
  bool first = true;
  for (const auto& cls : partition.classes) {
    if (first || cls.size() < min_size) min_size = cls.size();
    first = false;
    if (cls.size() < k) verdict.violating_classes.push_back(cls.qid_values);
  }
  verdict.achieved = static_cast<double>(min_size);
  verdict.satisfied = verdict.violating_classes.empty();
  return verdict;
}

ModelVerdict check_l_diversity(const Table& table, const Partition& partition,
                               std::string_view sensitive, std::size_t l) {
  if (l < 1) {
    throw Error(ErrorCode::invalid_argument, "l must be >= 1");
  }
  std::size_t col = table.column_index(sensitive);
  ModelVerdict verdict;
  verdict.model = "l-diversity";
  verdict.threshold = static_cast<double>(l);
  verdict.detail = "distinct sensitive values per class";
  std::size_t min_distinct = 0;
  bool first = true;
  for (const auto& cls : partition.classes) {
    std::size_t distinct = value_counts(table, col, cls.row_indices).size();
    if (first || distinct < min_distinct) min_distinct = distinct;
    first = false;
    if (distinct < l) verdict.violating_classes.push_back(cls.qid_values);
  }
  verdict.achieved = static_cast<double>(min_distinct);
  verdict.satisfied = verdict.violating_classes.empty();
  return verdict;
}

ModelVerdict check_t_closeness(const Table& table, const Partition& partition,
                               std::string_view sensitive, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "t must lie in [0, 1]");
  }
  SensitiveDistribution global = sensitive_distribution(table, sensitive);
  std::size_t col = table.column_index(sensitive);
  ModelVerdict verdict;
  verdict.model = "t-closeness";
  verdict.threshold = t;
  verdict.detail = "total-variation distance to the global distribution";
  double max_distance = 0.0;
  for (const auto& cls : partition.classes) {
    double d = total_variation(class_distribution(table, cls, col, global), global);
    max_distance = std::max(max_distance, d);
    // Strict-inequality noise from the frequency divisions is absorbed here.
    if (d > t + 1e-9) verdict.violating_classes.push_back(cls.qid_values);
  }
  verdict.achieved = max_distance;
  verdict.satisfied = verdict.violating_classes.empty();
  return verdict;
}

ModelVerdict check_delta_disclosure(const Table& table, const Partition& partition,
                                    std::string_view sensitive, double delta,
                                    double log_base, DisclosureSupport support) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "delta must be positive");
  }
  if (!(log_base > 1.0)) {
    throw Error(ErrorCode::invalid_argument, "log base must exceed 1");
  }
  SensitiveDistribution global = sensitive_distribution(table, sensitive);
  std::size_t col = table.column_index(sensitive);
  ModelVerdict verdict;
  verdict.model = "delta-disclosure";
  verdict.threshold = delta;
  verdict.detail = support == DisclosureSupport::global_support
                       ? "log ratios over the full global support"
                       : "log ratios over values present in each class";
  double achieved = 0.0;
  for (const auto& cls : partition.classes) {
    SensitiveDistribution q = class_distribution(table, cls, col, global);
    double class_worst = 0.0;
    for (std::size_t i = 0; i < global.support.size(); ++i) {
      if (support == DisclosureSupport::class_only && q.frequencies[i] == 0.0) continue;
      class_worst = std::max(
          class_worst,
          log_frequency_ratio(q.frequencies[i], global.frequencies[i], log_base));
    }
    achieved = std::max(achieved, class_worst);
    if (!(class_worst < delta)) verdict.violating_classes.push_back(cls.qid_values);
  }
  verdict.achieved = achieved;
  verdict.satisfied = verdict.violating_classes.empty();
  return verdict;
}

std::vector<std::vector<Cell>> homogeneity_attack_classes(
    const Table& table, const Partition& partition, std::string_view sensitive) {
  std::size_t col = table.column_index(sensitive);
  std::vector<std::vector<Cell>> vulnerable;
  for (const auto& cls : partition.classes) {
    if (value_counts(table, col, cls.row_indices).size() == 1) {
      vulnerable.push_back(cls.qid_values);
    }
  }
  return vulnerable;
}

}  // namespace anonkit
