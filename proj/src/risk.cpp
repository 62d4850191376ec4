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

#include "anonkit/risk.hpp"

#include <algorithm>

namespace anonkit {

namespace {

void require_non_empty(const Partition& partition) {
  if (partition.classes.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "risk is undefined for an empty partition");
  }
}

}  // namespace

std::pair<std::map<std::size_t, double>, double> prosecutor_risk(
    const Partition& partition) {
  require_non_empty(partition);
  std::map<std::size_t, double> per_record;
  double max_risk = 0.0;
  for (const auto& cls : partition.classes) {
    double risk = 1.0 / static_cast<double>(cls.size());
    max_risk = std::max(max_risk, risk);
    for (std::size_t r : cls.row_indices) per_record[r] = risk;
  }
  return {std::move(per_record), max_risk};
}

double journalist_risk(const Partition& partition) {
  require_non_empty(partition);
  double p_all_fail = 1.0;
  for (const auto& cls : partition.classes) {
    p_all_fail *= 1.0 - 1.0 / static_cast<double>(cls.size());
  }
  return 1.0 - p_all_fail;
}

double marketer_risk(const Partition& partition) {
  require_non_empty(partition);
  // Mean per-record risk: each class contributes size * (1/size) = 1.
  return static_cast<double>(partition.classes.size()) /
         static_cast<double>(partition.covered_rows());
}

RiskReport assess_risks(const Partition& partition) {
  RiskReport report;
  auto [per_record, max_risk] = prosecutor_risk(partition);
  report.prosecutor_per_record = std::move(per_record);
  report.prosecutor_max = max_risk;
  report.journalist = journalist_risk(partition);
  report.marketer = marketer_risk(partition);
  for (const auto& cls : partition.classes) {
    report.class_size_histogram[cls.size()]++;
  }
  return report;
}

}  // namespace anonkit
