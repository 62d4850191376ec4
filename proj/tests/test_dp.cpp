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

#include <cmath>
#include <limits>
#include <string>

#include "anonkit/dp.hpp"
#include "anonkit/error.hpp"

using namespace anonkit;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("seeded rng reproduces its stream") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng c(42);
  Rng d(43);
  bool diverged = false;
  for (int i = 0; i < 10 && !diverged; ++i) diverged = c.uniform() != d.uniform();
  CHECK(diverged);

  Rng e(7);
  for (int i = 0; i < 1000; ++i) CHECK(e.below(10) < 10);
}

TEST_CASE("privacy level of randomized response") {
  SUBCASE("two fair coins over a binary domain cost exactly ln 3") {
    // P(answer = truth) = 3/4, P(answer = other) = 1/4, ratio exactly 3.
    CHECK(rr_epsilon({0.5, 2}) == std::log(3.0));
  }
  SUBCASE("a fair coin over four values costs exactly ln 5") {
    CHECK(rr_epsilon({0.5, 4}) == std::log(5.0));
  }
  SUBCASE("pure noise costs nothing") {
    CHECK(rr_epsilon({0.0, 2}) == 0.0);
  }
  SUBCASE("always answering honestly costs everything") {
    CHECK(rr_epsilon({1.0, 2}) == kInf);
  }
  SUBCASE("more honesty costs more") {
    double prev = 0.0;
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      double eps = rr_epsilon({p, 2});
      CHECK(eps > prev);
      prev = eps;
    }
  }
  SUBCASE("parameters are validated") {
    CHECK_THROWS_AS(rr_epsilon({-0.1, 2}), Error);
    CHECK_THROWS_AS(rr_epsilon({1.1, 2}), Error);
    CHECK_THROWS_AS(rr_epsilon({0.5, 1}), Error);
  }
}

TEST_CASE("calibrating a mechanism to a target epsilon") {
  SUBCASE("ln 3 over a binary domain gives back the fair coin") {
    auto mech = rr_mechanism_for_epsilon(std::log(3.0), 2);
    CHECK(mech.p_honest == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mech.domain_size == 2);
  }
  SUBCASE("the calibration inverts the cost formula") {
    for (double eps : {0.1, 0.5, 1.0, std::log(3.0), 2.0, 5.0}) {
      for (std::size_t m : {2, 3, 10}) {
        auto mech = rr_mechanism_for_epsilon(eps, m);
        CHECK(rr_epsilon(mech) == doctest::Approx(eps).epsilon(1e-12));
      }
    }
  }
  SUBCASE("degenerate targets") {
    CHECK(rr_mechanism_for_epsilon(0.0, 2).p_honest == 0.0);
    CHECK(rr_mechanism_for_epsilon(kInf, 2).p_honest == 1.0);
  }
  SUBCASE("parameters are validated") {
    CHECK_THROWS_AS(rr_mechanism_for_epsilon(-1.0, 2), Error);
    CHECK_THROWS_AS(rr_mechanism_for_epsilon(1.0, 1), Error);
  }
}

TEST_CASE("randomized responses") {
  RandomizedResponseMechanism fair{0.5, 2};

  SUBCASE("a seed pins the answer") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CHECK(rr_respond(1, fair, seed) == rr_respond(1, fair, seed));
    }
  }
  SUBCASE("answers stay inside the domain") {
    RandomizedResponseMechanism wide{0.3, 5};
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) CHECK(rr_respond(3, wide, rng) < 5);
  }
  SUBCASE("full honesty echoes the truth") {
    RandomizedResponseMechanism honest{1.0, 4};
    Rng rng(1);
    for (int i = 0; i < 100; ++i) CHECK(rr_respond(2, honest, rng) == 2);
  }
  SUBCASE("fair coins flip both ways") {
    Rng rng(3);
    std::size_t ones = 0;
    for (int i = 0; i < 1000; ++i) ones += rr_respond(0, fair, rng);
    // P(1 | truth 0) = 1/4; anywhere near is fine, zero or all would be broken
    CHECK(ones > 100);
    CHECK(ones < 500);
  }
  SUBCASE("the true value must be in the domain") {
    CHECK_THROWS_AS(rr_respond(2, fair, 0), Error);
  }
}

TEST_CASE("recovering a count from randomized answers") {
  RandomizedResponseMechanism fair{0.5, 2};

  SUBCASE("the estimator inverts the expected observation") {
    // E[observed] = x*3/4 + (n-x)/4; observed 500 of 1000 maps back to 500.
    CHECK(rr_estimate_count(500, 1000, fair).estimate == 500.0);
    CHECK(rr_estimate_count(750, 1000, fair).estimate == 1000.0);
    CHECK(rr_estimate_count(250, 1000, fair).estimate == 0.0);
  }
  SUBCASE("estimates beyond the valid range are reported and clamped") {
    auto high = rr_estimate_count(1000, 1000, fair);
    CHECK(high.estimate == 1500.0);
    CHECK(high.clamped == 1000.0);
    auto low = rr_estimate_count(100, 1000, fair);
    CHECK(low.estimate == -300.0);
    CHECK(low.clamped == 0.0);
  }
  SUBCASE("a more honest mechanism shrinks the correction") {
    RandomizedResponseMechanism honest{1.0, 2};
    CHECK(rr_estimate_count(321, 1000, honest).estimate == 321.0);
  }
  SUBCASE("parameters are validated") {
    CHECK_THROWS_AS(rr_estimate_count(10, 100, {0.0, 2}), Error);
    CHECK_THROWS_AS(rr_estimate_count(10, 100, {0.5, 3}), Error);
    CHECK_THROWS_AS(rr_estimate_count(101, 100, fair), Error);
  }
}

TEST_CASE("reidentification bound") {
  SUBCASE("calibrated inputs hit exact outputs") {
    CHECK(reid_bound(std::log(3.0), 2) == 0.75);
    CHECK(reid_bound(0.0, 2) == 0.5);
    CHECK(reid_bound(0.0, 4) == 0.25);
  }
  SUBCASE("a large domain absorbs a big budget") {
    CHECK(reid_bound(10.0, 1000000) == doctest::Approx(0.0215517780).epsilon(1e-6));
  }
  SUBCASE("the bound grows with epsilon and shrinks with the domain") {
    double prev = 0.0;
    for (double eps : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      double b = reid_bound(eps, 8);
      CHECK(b > prev);
      prev = b;
    }
    prev = 1.0;
    for (std::uint64_t n : {2, 4, 16, 256}) {
      double b = reid_bound(1.0, n);
      CHECK(b < prev);
      prev = b;
    }
  }
  SUBCASE("the bound stays between the blind guess and certainty") {
    for (double eps : {0.0, 0.1, 1.0, 20.0}) {
      for (std::uint64_t n : {2, 10, 1000}) {
        double b = reid_bound(eps, n);
        CHECK(b >= 1.0 / static_cast<double>(n));
        CHECK(b <= 1.0);
      }
    }
    CHECK(reid_bound(kInf, 2) == 1.0);
  }
  SUBCASE("parameters are validated") {
    CHECK_THROWS_AS(reid_bound(-0.5, 2), Error);
    CHECK_THROWS_AS(reid_bound(1.0, 1), Error);
    CHECK_THROWS_AS(reid_bound(1.0, 0), Error);
  }
}

TEST_CASE("composition calculus") {
  SUBCASE("sequential releases add up") {
    CHECK(compose_sequential({1.0, 2.0, 3.0}) == 6.0);
    CHECK(compose_sequential({0.5}) == 0.5);
    CHECK(compose_sequential({}) == 0.0);
    CHECK(compose_sequential({1.0, kInf}) == kInf);
  }
  SUBCASE("parallel releases cost the worst one") {
    CHECK(compose_parallel({1.0, 2.0, 3.0}) == 3.0);
    CHECK(compose_parallel({}) == 0.0);
    CHECK(compose_parallel({2.0, 2.0}) == 2.0);
  }
  SUBCASE("parallel never exceeds sequential") {
    std::vector<double> eps = {0.3, 1.7, 0.0, 2.2};
    CHECK(compose_parallel(eps) <= compose_sequential(eps));
  }
  SUBCASE("negative budgets are rejected") {
    CHECK_THROWS_AS(compose_sequential({1.0, -0.5}), Error);
    CHECK_THROWS_AS(compose_parallel({-0.1}), Error);
  }
}

TEST_CASE("privacy parameter validation") {
  CHECK_NOTHROW(validate(DpParameters{0.0, 0.0}));
  CHECK_NOTHROW(validate(DpParameters{kInf, 0.0}));
  CHECK_NOTHROW(validate(DpParameters{1.0, 0.999}));
  CHECK_THROWS_AS(validate(DpParameters{-1.0, 0.0}), Error);
  CHECK_THROWS_AS(validate(DpParameters{1.0, 1.0}), Error);
  CHECK_THROWS_AS(validate(DpParameters{1.0, -0.1}), Error);
  CHECK_THROWS_AS(validate(DpParameters{std::nan(""), 0.0}), Error);
}

TEST_CASE("budgeted ledger enforces its plan") {
  BudgetLedger ledger = BudgetLedger::budgeted(1.0, 4);
  CHECK(ledger.per_release_epsilon() == 0.25);

  SUBCASE("spends up to the plan, then refuses") {
    for (int i = 0; i < 4; ++i) {
      ledger.spend("release " + std::to_string(i), 0.25);
    }
    CHECK(ledger.spent_epsilon() == 1.0);
    CHECK(ledger.remaining_budget() == 0.0);
    CHECK_THROWS_AS(ledger.spend("one too many", 0.0), Error);
    CHECK(ledger.entries().size() == 4);
  }
  SUBCASE("refuses a spend that overdraws the budget") {
    ledger.spend("big", 0.8);
    try {
      ledger.spend("too big", 0.3);
      FAIL("expected a refusal");
    } catch (const Error& e) {
      std::string msg = e.what();
      CHECK(msg.find("remaining budget") != std::string::npos);
      CHECK(msg.find("0.2") != std::string::npos);
    }
    // the refused spend left no trace
    CHECK(ledger.entries().size() == 1);
    CHECK(ledger.remaining_budget() == doctest::Approx(0.2));
  }
  SUBCASE("conservation: spent plus remaining equals the budget") {
    ledger.spend("a", 0.25);
    ledger.spend("b", 0.125);
    CHECK(ledger.spent_epsilon() + ledger.remaining_budget() == ledger.budget());
  }
  SUBCASE("construction is validated") {
    CHECK_THROWS_AS(BudgetLedger::budgeted(0.0, 4), Error);
    CHECK_THROWS_AS(BudgetLedger::budgeted(-1.0, 4), Error);
    CHECK_THROWS_AS(BudgetLedger::budgeted(1.0, 0), Error);
  }
  SUBCASE("spends are validated before any bookkeeping") {
    CHECK_THROWS_AS(ledger.spend("bad", -0.5), Error);
    CHECK_THROWS_AS(ledger.spend("bad", 0.1, 1.0), Error);
    CHECK(ledger.entries().empty());
  }
}

TEST_CASE("accumulating ledger composes totals per dataset") {
  BudgetLedger ledger = BudgetLedger::accumulating();
  ledger.spend("histogram", 1.0, 0.0, "census");
  ledger.spend("mean", 0.5, 1e-6, "census");
  ledger.spend("survey count", 2.0, 0.0, "survey");

  // sequential within a tag: census 1.5, survey 2.0; parallel across tags
  CHECK(ledger.total_epsilon() == 2.0);
  CHECK(ledger.total_delta() == doctest::Approx(1e-6));
  CHECK(ledger.spent_epsilon() == 3.5);

  SUBCASE("one more census release flips the max") {
    ledger.spend("quantiles", 1.0, 0.0, "census");
    CHECK(ledger.total_epsilon() == 2.5);
  }
  SUBCASE("no plan to enforce, any valid spend goes through") {
    ledger.spend("huge", kInf);
    CHECK(ledger.total_epsilon() == kInf);
  }
  SUBCASE("budget queries make no sense here") {
    CHECK_THROWS_AS(ledger.remaining_budget(), Error);
    CHECK_THROWS_AS(ledger.per_release_epsilon(), Error);
  }
}

TEST_CASE("ledger state round-trips through JSON") {
  SUBCASE("budgeted ledger") {
    BudgetLedger ledger = BudgetLedger::budgeted(2.0, 3);
    ledger.spend("first", 0.5, 1e-7, "census");
    ledger.spend("second", 0.25);
    std::string text = ledger.to_json();

    BudgetLedger back = BudgetLedger::from_json(text);
    CHECK(back.mode() == BudgetLedger::Mode::budgeted);
    CHECK(back.budget() == 2.0);
    CHECK(back.planned_releases() == 3);
    REQUIRE(back.entries().size() == 2);
    CHECK(back.entries()[0].label == "first");
    CHECK(back.entries()[0].epsilon == 0.5);
    CHECK(back.entries()[0].delta == 1e-7);
    CHECK(back.entries()[0].dataset_tag == "census");
    CHECK(back.entries()[1].dataset_tag == "default");
    CHECK(back.remaining_budget() == ledger.remaining_budget());
    CHECK(back.to_json() == text);  // byte-stable
  }
  SUBCASE("infinite spends persist") {
    BudgetLedger ledger = BudgetLedger::accumulating();
    ledger.spend("all in", kInf);
    BudgetLedger back = BudgetLedger::from_json(ledger.to_json());
    CHECK(back.entries()[0].epsilon == kInf);
    CHECK(back.total_epsilon() == kInf);
  }
  SUBCASE("malformed ledgers are rejected") {
    CHECK_THROWS_AS(BudgetLedger::from_json("not json"), Error);
    CHECK_THROWS_AS(BudgetLedger::from_json("{}"), Error);
    CHECK_THROWS_AS(BudgetLedger::from_json(R"({"mode": "weird"})"), Error);
    CHECK_THROWS_AS(BudgetLedger::from_json(R"({"mode": "budgeted"})"), Error);
    CHECK_THROWS_AS(
        BudgetLedger::from_json(R"({"mode": "accumulating", "entries": 5})"), Error);
    CHECK_THROWS_AS(
        BudgetLedger::from_json(R"({"mode": "accumulating", "entries": [{}]})"), Error);
  }
  SUBCASE("replayed entries still respect the budget") {
    // a hand-edited ledger that overdraws must not load
    std::string text = R"({
      "mode": "budgeted",
      "budget": 1.0,
      "planned_releases": 2,
      "entries": [
        {"label": "a", "epsilon": 0.9},
        {"label": "b", "epsilon": 0.9}
      ]
    })";
    CHECK_THROWS_AS(BudgetLedger::from_json(text), Error);
  }
}
