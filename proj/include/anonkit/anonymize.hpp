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

#ifndef ANONKIT_ANONYMIZE_HPP
#define ANONKIT_ANONYMIZE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/models.hpp"
#include "anonkit/table.hpp"

namespace anonkit {

// One point of the generalization lattice: a level per hierarchical QID
// attribute, keyed by attribute name.
struct LatticeNode {
  std::map<std::string, int> levels;
  double loss = 0.0;
  bool feasible = false;
  std::size_t suppressed_count = 0;
};

// All level vectors over the given hierarchies, ordered by total level sum,
// then lexicographically by attribute name. Size = prod of (max_level + 1).
std::vector<LatticeNode> build_lattice(const HierarchySet& hierarchies);

// Privacy constraints the published table must satisfy. k is mandatory;
// l and t additionally suppress classes that violate them. l and t need a
// sensitive attribute.
struct Constraints {
  std::size_t k = 1;
  std::optional<std::size_t> l;
  std::optional<double> t;
  std::optional<std::string> sensitive;
};

struct AnonymizeOptions {
  double suppression_budget = 0.0;  // max fraction of rows suppressed
  bool prune = true;                // skip ancestors of zero-suppression k-winners
};

struct AnonymizationResult {
  Table output_table;  // generalized, identifiers dropped, suppressed rows removed
  LatticeNode chosen_node;
  std::vector<std::size_t> suppressed_row_indices;  // indices into the input
  std::vector<ModelVerdict> verdicts;               // checks re-run on the output
  double loss = 0.0;
};

// Mean normalized generalization intensity plus suppression fraction:
// (1/|node attrs|) * sum of levels[a]/max_level(a) + suppressed/|rows|.
// Attributes with max_level 0 contribute 0. Range [0, 2].
double information_loss(const Table& original, const LatticeNode& node,
                        const HierarchySet& hierarchies, std::size_t suppressed);

// Searches the lattice for the minimum-loss node whose generalized table,
// after suppressing every class violating the constraints, suppresses at most
// budget * rows and satisfies all constraints. Suppression repeats until no
// violating class remains (removing rows reshapes the global distribution the
// t constraint compares against). Ties resolve to the smallest total level
// sum, then lexicographic levels. Ancestor pruning is applied only when k is
// the sole constraint, where feasibility is monotone up the lattice.
// Throws InfeasibleError when no node qualifies.
AnonymizationResult anonymize(const Table& table, const std::vector<std::string>& qid,
                              const HierarchySet& hierarchies,
                              const Constraints& constraints,
                              const AnonymizeOptions& options = {});

}  // namespace anonkit

#endif  // ANONKIT_ANONYMIZE_HPP
