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

#include <doctest.h>

#include "anonkit/hierarchy.hpp"
#include "fixtures.hpp"

using namespace anonkit;

namespace {

std::string label_str(const GeneralizationHierarchy& h, const Cell& value, int level) {
  return cell_to_string(h.label(value, level));
}

}  // namespace

TEST_CASE("interval hierarchy bins values at aligned multiples of the width") {
  auto h = GeneralizationHierarchy::intervals("age", {10.0});
  CHECK(h.max_level() == 2);  // one width level plus the all-covering top
  CHECK(label_str(h, Cell(35.0), 1) == "[30;39]");
  CHECK(label_str(h, Cell(30.0), 1) == "[30;39]");
  CHECK(label_str(h, Cell(39.0), 1) == "[30;39]");
  CHECK(label_str(h, Cell(40.0), 1) == "[40;49]");
  CHECK(label_str(h, Cell(0.0), 1) == "[0;9]");
  CHECK(label_str(h, Cell(-5.0), 1) == "[-10;-1]");
  CHECK(label_str(h, Cell(35.0), 2) == "*");
  CHECK(std::get<double>(h.label(Cell(35.0), 0)) == 35.0);
}

TEST_CASE("interval levels nest when widths are successive multiples") {
  auto h = GeneralizationHierarchy::intervals("v", {5.0, 10.0, 100.0});
  CHECK(h.max_level() == 4);
  CHECK(label_str(h, Cell(37.0), 1) == "[35;39]");
  CHECK(label_str(h, Cell(37.0), 2) == "[30;39]");
  CHECK(label_str(h, Cell(37.0), 3) == "[0;99]");
  CHECK(label_str(h, Cell(37.0), 4) == "*");
}

TEST_CASE("interval hierarchy rejects unusable widths") {
  CHECK_THROWS_AS(GeneralizationHierarchy::intervals("v", {}), Error);
  CHECK_THROWS_AS(GeneralizationHierarchy::intervals("v", {0.0}), Error);
  CHECK_THROWS_AS(GeneralizationHierarchy::intervals("v", {-10.0}), Error);
  // 25 is not a multiple of 10, so bins would straddle coarser bins.
  CHECK_THROWS_AS(GeneralizationHierarchy::intervals("v", {10.0, 25.0}), Error);
  // widths must not shrink
  CHECK_THROWS_AS(GeneralizationHierarchy::intervals("v", {10.0, 5.0}), Error);
}

TEST_CASE("interval hierarchy refuses non-numeric cells above level 0") {
  auto h = GeneralizationHierarchy::intervals("v", {10.0});
  try {
    h.label(Cell(std::string("abc")), 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_value);
  }
}

TEST_CASE("explicit hierarchy maps ground values through level tables") {
  auto h = GeneralizationHierarchy::explicit_levels(
      "city", {{{"Paris", "France"}, {"Lyon", "France"}, {"Turin", "Italy"}},
               {{"Paris", "Europe"}, {"Lyon", "Europe"}, {"Turin", "Europe"}}});
  CHECK(h.max_level() == 2);
  CHECK(label_str(h, Cell(std::string("Paris")), 1) == "France");
  CHECK(label_str(h, Cell(std::string("Turin")), 1) == "Italy");
  CHECK(label_str(h, Cell(std::string("Turin")), 2) == "Europe");
  CHECK(label_str(h, Cell(std::string("Paris")), 0) == "Paris");
}

TEST_CASE("explicit hierarchy with no levels is the identity") {
  auto h = GeneralizationHierarchy::explicit_levels("Club", {});
  CHECK(h.max_level() == 0);
  CHECK(label_str(h, Cell(std::string("PSG")), 0) == "PSG");
  CHECK_THROWS_AS(h.label(Cell(std::string("PSG")), 1), Error);
}

TEST_CASE("explicit hierarchy validates its level tables") {
  SUBCASE("levels must cover the same domain") {
    CHECK_THROWS_AS(GeneralizationHierarchy::explicit_levels(
                        "c", {{{"a", "x"}, {"b", "x"}}, {{"a", "*"}}}),
                    Error);
    CHECK_THROWS_AS(GeneralizationHierarchy::explicit_levels(
                        "c", {{{"a", "x"}, {"b", "x"}}, {{"a", "*"}, {"z", "*"}}}),
                    Error);
  }
  SUBCASE("labels must nest upward") {
    CHECK_THROWS_AS(GeneralizationHierarchy::explicit_levels(
                        "c", {{{"a", "x"}, {"b", "x"}, {"c", "y"}},
                              {{"a", "p"}, {"b", "q"}, {"c", "q"}}}),
                    Error);
  }
  SUBCASE("the top level must collapse to one label") {
    CHECK_THROWS_AS(
        GeneralizationHierarchy::explicit_levels("c", {{{"a", "p"}, {"b", "q"}}}), Error);
  }
  SUBCASE("values outside the domain have no label") {
    auto h = GeneralizationHierarchy::explicit_levels("Club", {{{"PSG", "*"}, {"OM", "*"}}});
    try {
      h.label(Cell(std::string("Lyon")), 1);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::unknown_value);
    }
  }
}

TEST_CASE("label rejects out-of-range levels") {
  auto h = GeneralizationHierarchy::intervals("v", {10.0});
  CHECK_THROWS_AS(h.label(Cell(1.0), 3), Error);
  CHECK_THROWS_AS(h.label(Cell(1.0), -1), Error);
}

TEST_CASE("generalize_table rewrites cells and drops identifying columns") {
  Table psg = fixtures::salaries_psg();
  auto hierarchies = fixtures::hierarchies();

  SUBCASE("decade generalization reproduces the reference bytes") {
    Table out = generalize_table(psg, hierarchies, {{"age", 1}});
    CHECK(write_csv(out) == fixtures::kAnonymizedPsgCsv);
  }
  SUBCASE("generalized attributes become categorical, others keep their kind") {
    Table out = generalize_table(psg, hierarchies, {{"age", 1}});
    CHECK(out.attribute("age").kind == AttributeKind::categorical);
    CHECK(out.attribute("age").role == AttributeRole::quasi_identifier);
    CHECK(out.attribute("Salaire").kind == AttributeKind::numeric);
    CHECK_FALSE(out.has_column("ID"));
  }
  SUBCASE("the empty node only strips identifiers") {
    Table out = generalize_table(psg, hierarchies, {});
    CHECK(out.column_count() == 3);
    CHECK(out.attribute("age").kind == AttributeKind::numeric);
    CHECK(std::get<double>(out.cell(0, 0)) == 35.0);
  }
  SUBCASE("club collapses to the top label") {
    Table out = generalize_table(psg, hierarchies, {{"Club", 1}});
    for (std::size_t r = 0; r < out.row_count(); ++r) {
      CHECK(std::get<std::string>(out.cell(r, 1)) == "*");
    }
  }
  SUBCASE("node keys must name covered attributes with valid levels") {
    CHECK_THROWS_AS(generalize_table(psg, hierarchies, {{"Salaire", 1}}), Error);
    CHECK_THROWS_AS(generalize_table(psg, hierarchies, {{"age", 3}}), Error);
  }
}
