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

#ifndef ANONKIT_UTILITY_HPP
#define ANONKIT_UTILITY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/table.hpp"

namespace anonkit {

// One group's aggregate: the group-by key (possibly an interval label) and
// the arithmetic mean of the measure attribute over that group.
struct AggregateResult {
  Cell group_key;
  double aggregate_value = 0.0;
};

// Mean of `measure` per distinct value of `group_by`, one result per distinct
// key, sorted by key. The measure attribute must be numeric in every row.
std::vector<AggregateResult> run_group_mean(const Table& table,
                                            std::string_view group_by,
                                            std::string_view measure);

struct GroupError {
  Cell original_key;
  Cell matched_key;      // the anonymized group the original key fell into
  double original_value = 0.0;
  double anonymized_value = 0.0;
  double normalized_error = 0.0;  // |anon - orig| / |orig|
};

struct UtilityReport {
  double mean_normalized_error = 0.0;
  std::vector<GroupError> per_group;
};

// Utility loss of an aggregate query on anonymized data: for each original
// group key, find the unique anonymized key it generalizes to under the
// hierarchy (at some level), then average |v_anon - v_orig| / |v_orig| over
// original groups. Zero iff every matched pair agrees.
// Errors when an original key matches zero or several anonymized keys, or
// when an original value is 0 (the normalization is undefined).
UtilityReport mean_normalized_error(const std::vector<AggregateResult>& original,
                                    const std::vector<AggregateResult>& anonymized,
                                    const GeneralizationHierarchy& hierarchy);

}  // namespace anonkit

#endif  // ANONKIT_UTILITY_HPP
