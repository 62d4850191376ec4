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

#ifndef ANONKIT_RISK_HPP
#define ANONKIT_RISK_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "anonkit/table.hpp"

namespace anonkit {

// Reidentification risks under three attacker goals:
//  - prosecutor targets one known record: risk 1/|its class|, worst case the
//    max over records;
//  - journalist wants to reidentify at least one record, guessing once per
//    class: 1 - prod over classes of (1 - 1/size);
//  - marketer wants many correct matches: expected fraction of correct
//    guesses, which equals (#classes)/(#records).
struct RiskReport {
  std::map<std::size_t, double> prosecutor_per_record;  // record index -> risk
  double prosecutor_max = 0.0;
  double journalist = 0.0;
  double marketer = 0.0;
  std::map<std::size_t, std::size_t> class_size_histogram;  // size -> count
};

// Per-record prosecutor risks plus their max. Throws on an empty partition.
std::pair<std::map<std::size_t, double>, double> prosecutor_risk(const Partition& partition);

double journalist_risk(const Partition& partition);

double marketer_risk(const Partition& partition);

// All three risks plus the class-size histogram in one pass.
RiskReport assess_risks(const Partition& partition);

}  // namespace anonkit

#endif  // ANONKIT_RISK_HPP
