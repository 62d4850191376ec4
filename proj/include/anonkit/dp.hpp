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

#ifndef ANONKIT_DP_HPP
#define ANONKIT_DP_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace anonkit {

// Deterministic random source. mt19937_64 output is bit-exact across
// platforms, and both mappings below avoid std distributions (whose results
// are implementation-defined), so every seeded run reproduces everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, n) via 128-bit multiply-shift.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

// Local randomized response over a finite domain {0, ..., domain_size-1}:
// answer truthfully with probability p_honest, otherwise answer uniformly
// over the whole domain (the true value included). The classic two-fair-coins
// protocol is p_honest = 0.5 with domain_size = 2.
struct RandomizedResponseMechanism {
  double p_honest = 0.5;
  std::size_t domain_size = 2;
};

// One randomized answer. Deterministic given the rng state / seed.
std::size_t rr_respond(std::size_t true_value, const RandomizedResponseMechanism& mech,
                       Rng& rng);
std::size_t rr_respond(std::size_t true_value, const RandomizedResponseMechanism& mech,
                       std::uint64_t seed);

// Privacy level of the mechanism: the max log-ratio of output probabilities
// across two inputs, ln((p + (1-p)/m) / ((1-p)/m)). Fair coins over a binary
// domain give ln 3. p_honest = 1 reports infinity rather than an error so
// ledgers can record degenerate releases.
double rr_epsilon(const RandomizedResponseMechanism& mech);

// Inverse calibration: the mechanism over `domain_size` values whose
// rr_epsilon equals `epsilon`; p_honest = expm1(eps) / (expm1(eps) + m).
RandomizedResponseMechanism rr_mechanism_for_epsilon(double epsilon,
                                                     std::size_t domain_size);

struct CountEstimate {
  double estimate = 0.0;  // unbiased, may fall outside [0, n]
  double clamped = 0.0;   // estimate clamped into [0, n]
};

// Recovers the true count of 1-answers from the observed count over a binary
// domain: x_est = (observed - n*(1-p)/2) / p, which is 2*observed - n/2 at
// p = 0.5. Undefined at p = 0 (pure noise carries no signal).
CountEstimate rr_estimate_count(std::size_t observed_true, std::size_t n,
                                const RandomizedResponseMechanism& mech);

// Upper bound on the probability of guessing a respondent's value among
// n_values possibilities from an epsilon-DP release: e^eps / (e^eps + n - 1).
// Computed in extended precision so calibrated inputs hit exact outputs
// (epsilon = ln 3, n = 2 yields exactly 0.75).
double reid_bound(double epsilon, std::uint64_t n_values);

// Sequential composition: releases on the same data add their budgets.
double compose_sequential(const std::vector<double>& epsilons);

// Parallel composition: releases on disjoint data cost the max budget.
double compose_parallel(const std::vector<double>& epsilons);

// (epsilon, delta) privacy parameters; delta = 0 is pure epsilon-DP.
struct DpParameters {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Throws unless epsilon >= 0 (infinity allowed) and delta in [0, 1).
void validate(const DpParameters& params);

// Privacy-budget accountant. Two modes:
//  - budgeted: a fixed total epsilon split across a planned number of
//    releases; spends beyond the count or the budget are refused;
//  - accumulating: records spends and reports the composed total, sequential
//    within a dataset_tag and parallel (max) across tags.
// Deltas compose additively within a tag, max across tags.
class BudgetLedger {
 public:
  enum class Mode { budgeted, accumulating };

  struct Entry {
    std::string label;
    double epsilon = 0.0;
    double delta = 0.0;
    std::string dataset_tag;
  };

  static BudgetLedger budgeted(double budget, std::size_t planned_releases);
  static BudgetLedger accumulating();

  Mode mode() const { return mode_; }
  double budget() const { return budget_; }
  std::size_t planned_releases() const { return planned_releases_; }
  // The per-release allowance in budgeted mode: budget / planned_releases.
  double per_release_epsilon() const;

  // Records a release. In budgeted mode the spend is refused (with the
  // remaining amount in the message) when the release count or the remaining
  // budget would be exceeded.
  void spend(std::string label, double epsilon, double delta = 0.0,
             std::string dataset_tag = "default");

  const std::vector<Entry>& entries() const { return entries_; }
  // Sum of all recorded epsilons (budgeted-mode conservation:
  // spent + remaining = budget).
  double spent_epsilon() const;
  double remaining_budget() const;
  // Composed totals: sequential within each dataset_tag, max across tags.
  double total_epsilon() const;
  double total_delta() const;

  // Round-trips through JSON: {mode, budget, planned_releases, entries};
  // infinite epsilons persist as the string "inf".
  std::string to_json() const;
  static BudgetLedger from_json(std::string_view text);

 private:
  BudgetLedger() = default;

  Mode mode_ = Mode::accumulating;
  double budget_ = 0.0;
  std::size_t planned_releases_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace anonkit

#endif  // ANONKIT_DP_HPP
