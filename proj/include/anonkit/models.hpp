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

#ifndef ANONKIT_MODELS_HPP
#define ANONKIT_MODELS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "anonkit/table.hpp"

namespace anonkit {

// Outcome of a privacy-constraint check. `achieved` is the best value the
// partition actually attains: the minimum class size (k), the minimum distinct
// sensitive count (l), the maximum class-to-global distance (t), or the
// maximum per-value log frequency ratio (delta, infinite when a value present
// globally is absent from some class). satisfied holds iff achieved meets the
// threshold in the model's direction: >= for k and l, <= for t, < for delta.
struct ModelVerdict {
  std::string model;
  double threshold = 0.0;
  bool satisfied = false;
  double achieved = 0.0;
  std::vector<std::vector<Cell>> violating_classes;
  std::string detail;  // model-specific notes, e.g. which distance was used
};

// Frequencies over the distinct values of a sensitive attribute, globally or
// within one equivalence class. Frequencies sum to 1 within 1e-9.
struct SensitiveDistribution {
  std::vector<Cell> support;        // sorted distinct values
  std::vector<double> frequencies;  // aligned with support
};

// Distribution over the whole table.
SensitiveDistribution sensitive_distribution(const Table& table,
                                             std::string_view sensitive);
// Distribution restricted to one class, on the support given by `global`
// (values absent from the class get frequency 0).
SensitiveDistribution class_distribution(const Table& table,
                                         const EquivalenceClass& cls,
                                         std::size_t sensitive_col,
                                         const SensitiveDistribution& global);

// Total-variation distance between two distributions on the same support:
// half the L1 distance, always in [0, 1].
double total_variation(const SensitiveDistribution& a, const SensitiveDistribution& b);

// |log_base(q / p)|; infinite when q = 0 and p > 0.
double log_frequency_ratio(double q, double p, double log_base);

ModelVerdict check_k_anonymity(const Partition& partition, std::size_t k);

ModelVerdict check_l_diversity(const Table& table, const Partition& partition,
                               std::string_view sensitive, std::size_t l);

ModelVerdict check_t_closeness(const Table& table, const Partition& partition,
                               std::string_view sensitive, double t);

// Which sensitive values each class is scored on: the full global support
// (a value present globally but missing from the class counts as an infinite
// ratio) or only the values the class itself contains.
enum class DisclosureSupport { global_support, class_only };

ModelVerdict check_delta_disclosure(
    const Table& table, const Partition& partition, std::string_view sensitive,
    double delta, double log_base = 10.0,
    DisclosureSupport support = DisclosureSupport::global_support);

// Classes whose sensitive values are all identical, so membership alone
// discloses the value. Exactly the violators of 2-diversity.
std::vector<std::vector<Cell>> homogeneity_attack_classes(
    const Table& table, const Partition& partition, std::string_view sensitive);

}  // namespace anonkit

#endif  // ANONKIT_MODELS_HPP
