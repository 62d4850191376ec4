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

#ifndef ANONKIT_TESTS_FIXTURES_HPP
#define ANONKIT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/table.hpp"

namespace fixtures {

// A small salary dataset: four PSG players with distinct ages plus two OM
// players sharing age 32 and salary 500. Age and club together single out
// every PSG player, and the OM pair is homogeneous in salary, which makes the
// dataset exercise every checker and every risk model.
inline constexpr const char* kSalariesCsv =
    "ID,age,Club,Salaire\n"
    "Thiago Silva,35,PSG,1160\n"
    "Edison Cavani,32,PSG,1500\n"
    "Kylian Mbapp\xc3\xa9,20,PSG,1730\n"
    "Neymar Jr.,27,PSG,3060\n"
    "Dimitri Payet,32,OM,500\n"
    "Luiz Gustavo,32,OM,500\n";

// The PSG subset on its own.
inline constexpr const char* kSalariesPsgCsv =
    "ID,age,Club,Salaire\n"
    "Thiago Silva,35,PSG,1160\n"
    "Edison Cavani,32,PSG,1500\n"
    "Kylian Mbapp\xc3\xa9,20,PSG,1730\n"
    "Neymar Jr.,27,PSG,3060\n";

// The PSG subset after decade generalization of age: two classes of size 2.
// These are the exact bytes the anonymizer must reproduce.
inline constexpr const char* kAnonymizedPsgCsv =
    "age,Club,Salaire\n"
    "[30;39],PSG,1160\n"
    "[30;39],PSG,1500\n"
    "[20;29],PSG,1730\n"
    "[20;29],PSG,3060\n";

// The full dataset published 2-anonymously: decade bins for PSG and the OM
// pair's shared age kept as a degenerate interval. The ([32], OM) class has a
// single salary value, so it is 2-anonymous yet only 1-diverse.
inline constexpr const char* kAnonymizedCsv =
    "age,Club,Salaire\n"
    "[30;39],PSG,1160\n"
    "[30;39],PSG,1500\n"
    "[20;29],PSG,1730\n"
    "[20;29],PSG,3060\n"
    "[32],OM,500\n"
    "[32],OM,500\n";

inline std::vector<anonkit::AttributeSchema> salaries_schema() {
  using anonkit::AttributeKind;
  using anonkit::AttributeRole;
  return {
      {"ID", AttributeKind::text, AttributeRole::identifier},
      {"age", AttributeKind::numeric, AttributeRole::quasi_identifier},
      {"Club", AttributeKind::categorical, AttributeRole::quasi_identifier},
      {"Salaire", AttributeKind::numeric, AttributeRole::sensitive},
  };
}

inline std::vector<anonkit::AttributeSchema> anonymized_schema() {
  using anonkit::AttributeKind;
  using anonkit::AttributeRole;
  return {
      {"age", AttributeKind::categorical, AttributeRole::quasi_identifier},
      {"Club", AttributeKind::categorical, AttributeRole::quasi_identifier},
      {"Salaire", AttributeKind::numeric, AttributeRole::sensitive},
  };
}

inline anonkit::Table salaries() {
  return anonkit::load_table(kSalariesCsv, salaries_schema());
}

inline anonkit::Table salaries_psg() {
  return anonkit::load_table(kSalariesPsgCsv, salaries_schema());
}

inline anonkit::Table anonymized_psg() {
  return anonkit::load_table(kAnonymizedPsgCsv, anonymized_schema());
}

inline anonkit::Table anonymized() {
  return anonkit::load_table(kAnonymizedCsv, anonymized_schema());
}

// age in decades (levels: exact, [10-wide), all), Club collapsing to "*".
inline anonkit::HierarchySet hierarchies() {
  anonkit::HierarchySet set;
  set.emplace("age", anonkit::GeneralizationHierarchy::intervals("age", {10.0}));
  set.emplace("Club", anonkit::GeneralizationHierarchy::explicit_levels(
                          "Club", {{{"PSG", "*"}, {"OM", "*"}}}));
  return set;
}

inline const std::vector<std::string> kQid = {"age", "Club"};

}  // namespace fixtures

#endif  // ANONKIT_TESTS_FIXTURES_HPP
