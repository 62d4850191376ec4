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

#include "anonkit/anonymize.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace anonkit {

namespace {

// Groups the given rows of `table` by their qid tuple; map order makes the
// grouping deterministic.
std::map<std::vector<Cell>, std::vector<std::size_t>> group_rows(
    const Table& table, const std::vector<std::size_t>& qid_cols,
    const std::vector<std::size_t>& rows) {
  std::map<std::vector<Cell>, std::vector<std::size_t>> groups;
  for (std::size_t r : rows) {
    std::vector<Cell> key;
    key.reserve(qid_cols.size());
    for (std::size_t c : qid_cols) key.push_back(table.cell(r, c));
    groups[std::move(key)].push_back(r);
  }
  return groups;
}

struct NodeEvaluation {
  std::vector<std::size_t> active_rows;      // survivors, in original order
  std::vector<std::size_t> suppressed_rows;  // indices into the input table
  std::size_t unsuppressed_min_class = 0;    // min class size before suppression
};

// Generalizes nothing here; `generalized` is the node's table. Suppresses
// whole violating classes and repeats until none remain: removing rows
// changes the global sensitive distribution, so a class that passed the
// t test earlier can start failing.
NodeEvaluation evaluate_node(const Table& generalized,
                             const std::vector<std::size_t>& qid_cols,
                             const Constraints& constraints,
                             std::optional<std::size_t> sensitive_col) {
  NodeEvaluation eval;
  eval.active_rows.resize(generalized.row_count());
  for (std::size_t r = 0; r < eval.active_rows.size(); ++r) eval.active_rows[r] = r;

  bool first_pass = true;
  for (;;) {
    if (eval.active_rows.empty()) break;
    auto groups = group_rows(generalized, qid_cols, eval.active_rows);
    if (first_pass) {
      std::size_t min_size = std::numeric_limits<std::size_t>::max();
      for (const auto& [key, rows] : groups) min_size = std::min(min_size, rows.size());
      eval.unsuppressed_min_class = min_size;
      first_pass = false;
    }

    // Global sensitive distribution over the currently active rows, needed
    // only by the t constraint.
    std::map<Cell, std::size_t> global_counts;
    if (constraints.t) {
      for (std::size_t r : eval.active_rows) {
        global_counts[generalized.cell(r, *sensitive_col)]++;
      }
    }

    std::set<std::size_t> to_suppress;
    for (const auto& [key, rows] : groups) {
      bool violates = rows.size() < constraints.k;
      if (!violates && constraints.l) {
        std::set<Cell> distinct;
        for (std::size_t r : rows) distinct.insert(generalized.cell(r, *sensitive_col));
        violates = distinct.size() < *constraints.l;
      }
      if (!violates && constraints.t) {
        std::map<Cell, std::size_t> class_counts;
        for (std::size_t r : rows) class_counts[generalized.cell(r, *sensitive_col)]++;
        double l1 = 0.0;
        double n_global = static_cast<double>(eval.active_rows.size());
        double n_class = static_cast<double>(rows.size());
        for (const auto& [value, count] : global_counts) {
          double p = static_cast<double>(count) / n_global;
          auto it = class_counts.find(value);
          double q = it == class_counts.end()
                         ? 0.0
                         : static_cast<double>(it->second) / n_class;
          l1 += std::abs(q - p);
        }
        violates = 0.5 * l1 > *constraints.t + 1e-9;
      }
      if (violates) to_suppress.insert(rows.begin(), rows.end());
    }
    if (to_suppress.empty()) break;

    std::vector<std::size_t> remaining;
    remaining.reserve(eval.active_rows.size() - to_suppress.size());
    for (std::size_t r : eval.active_rows) {
      if (to_suppress.count(r)) {
        eval.suppressed_rows.push_back(r);
      } else {
        remaining.push_back(r);
      }
    }
    eval.active_rows = std::move(remaining);
  }
  if (generalized.row_count() == 0) eval.unsuppressed_min_class = 0;
  std::sort(eval.suppressed_rows.begin(), eval.suppressed_rows.end());
  return eval;
}

bool is_ancestor_of(const std::map<std::string, int>& node,
                    const std::map<std::string, int>& root) {
  auto it = root.begin();
  for (const auto& [attr, level] : node) {
    if (level < it->second) return false;
    ++it;
  }
  return true;
}

}  // namespace

std::vector<LatticeNode> build_lattice(const HierarchySet& hierarchies) {
  if (hierarchies.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "lattice needs at least one hierarchical attribute");
  }
  std::vector<std::string> attrs;
  std::vector<int> max_levels;
  for (const auto& [attr, hierarchy] : hierarchies) {
    attrs.push_back(attr);
    max_levels.push_back(hierarchy.max_level());
  }

  std::vector<LatticeNode> nodes;
  std::vector<int> levels(attrs.size(), 0);
  for (;;) {
    LatticeNode node;
    for (std::size_t i = 0; i < attrs.size(); ++i) node.levels[attrs[i]] = levels[i];
    nodes.push_back(std::move(node));
    // Odometer increment over the level ranges.
    std::size_t i = attrs.size();
    while (i > 0) {
      --i;
      if (levels[i] < max_levels[i]) {
        ++levels[i];
        break;
      }
      levels[i] = 0;
      if (i == 0) {
        std::stable_sort(nodes.begin(), nodes.end(),
                         [](const LatticeNode& a, const LatticeNode& b) {
                           int sa = 0, sb = 0;
                           for (const auto& [attr, level] : a.levels) sa += level;
                           for (const auto& [attr, level] : b.levels) sb += level;
                           if (sa != sb) return sa < sb;
                           return a.levels < b.levels;
                         });
        return nodes;
      }
    }
  }
}

double information_loss(const Table& original, const LatticeNode& node,
                        const HierarchySet& hierarchies, std::size_t suppressed) {
  double intensity = 0.0;
  for (const auto& [attr, level] : node.levels) {
    int max_level = hierarchies.at(attr).max_level();
    if (max_level > 0) {
      intensity += static_cast<double>(level) / static_cast<double>(max_level);
    }
  }
  if (!node.levels.empty()) intensity /= static_cast<double>(node.levels.size());
  double suppression = original.row_count() == 0
                           ? 0.0
                           : static_cast<double>(suppressed) /
                                 static_cast<double>(original.row_count());
  return intensity + suppression;
}

AnonymizationResult anonymize(const Table& table, const std::vector<std::string>& qid,
                              const HierarchySet& hierarchies,
                              const Constraints& constraints,
                              const AnonymizeOptions& options) {
  if (constraints.k < 1) {
    throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  }
  if ((constraints.l || constraints.t) && !constraints.sensitive) {
    throw Error(ErrorCode::invalid_argument,
                "l and t constraints need a sensitive attribute");
  }
  if (constraints.t && !(*constraints.t >= 0.0 && *constraints.t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "t must lie in [0, 1]");
  }
  if (!(options.suppression_budget >= 0.0 && options.suppression_budget <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "suppression budget must lie in [0, 1]");
  }
  if (qid.empty()) {
    throw Error(ErrorCode::invalid_argument, "qid attribute list must not be empty");
  }
  for (const auto& attr : qid) {
    if (table.attribute(attr).role == AttributeRole::identifier) {
      throw Error(ErrorCode::invalid_argument,
                  "identifier attribute '" + attr +
                      "' cannot be a qid: identifiers are dropped, not generalized");
    }
  }

  // The lattice spans the qid attributes that have hierarchies; the rest stay
  // at level 0 in every node.
  HierarchySet node_hierarchies;
  for (const auto& attr : qid) {
    if (auto it = hierarchies.find(attr); it != hierarchies.end()) {
      node_hierarchies.emplace(attr, it->second);
    }
  }
  std::vector<LatticeNode> lattice;
  if (node_hierarchies.empty()) {
    lattice.push_back(LatticeNode{});
  } else {
    lattice = build_lattice(node_hierarchies);
  }

  bool k_only = !constraints.l && !constraints.t;
  std::vector<std::map<std::string, int>> prune_roots;

  struct Best {
    bool found = false;
    LatticeNode node;
    Table output;
    std::vector<std::size_t> suppressed;
  } best;
  std::size_t best_achieved_k = 0;
  double min_suppression_needed = 1.0;

  for (auto& node : lattice) {
    if (options.prune && k_only) {
      bool skip = false;
      for (const auto& root : prune_roots) {
        // A strict ancestor of a zero-suppression winner is also feasible but
        // always costs strictly more, so it can never become the optimum.
        if (node.levels != root && is_ancestor_of(node.levels, root)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
    }

    Table generalized = generalize_table(table, node_hierarchies, node.levels);
    std::vector<std::size_t> qid_cols;
    qid_cols.reserve(qid.size());
    for (const auto& attr : qid) qid_cols.push_back(generalized.column_index(attr));
    std::optional<std::size_t> sensitive_col;
    if (constraints.sensitive) {
      sensitive_col = generalized.column_index(*constraints.sensitive);
    }

    NodeEvaluation eval = evaluate_node(generalized, qid_cols, constraints, sensitive_col);
    node.suppressed_count = eval.suppressed_rows.size();
    double fraction = table.row_count() == 0
                          ? 0.0
                          : static_cast<double>(node.suppressed_count) /
                                static_cast<double>(table.row_count());
    node.feasible = fraction <= options.suppression_budget;
    node.loss = information_loss(table, node, node_hierarchies, node.suppressed_count);

    best_achieved_k = std::max(best_achieved_k, eval.unsuppressed_min_class);
    min_suppression_needed = std::min(min_suppression_needed, fraction);

    if (node.feasible) {
      if (k_only && node.suppressed_count == 0) prune_roots.push_back(node.levels);
      // Lattice order is (level sum, lex), so replacing only on strictly
      // smaller loss realizes the tie-break for free.
      if (!best.found || node.loss < best.node.loss) {
        std::vector<std::vector<Cell>> rows;
        rows.reserve(eval.active_rows.size());
        for (std::size_t r : eval.active_rows) rows.push_back(generalized.row(r));
        best.found = true;
        best.node = node;
        best.output = Table(generalized.schema(), std::move(rows));
        best.suppressed = eval.suppressed_rows;
      }
    }
  }

  if (!best.found) {
    throw InfeasibleError(
        "no generalization satisfies the constraints within the suppression budget (best k " +
            std::to_string(best_achieved_k) + ", min suppression needed " +
            std::to_string(min_suppression_needed) + ")",
        best_achieved_k, min_suppression_needed);
  }

  AnonymizationResult result;
  result.output_table = std::move(best.output);
  result.chosen_node = best.node;
  result.suppressed_row_indices = std::move(best.suppressed);
  result.loss = best.node.loss;

  Partition partition = partition_by_qid(result.output_table, qid);
  result.verdicts.push_back(check_k_anonymity(partition, constraints.k));
  if (constraints.l) {
    result.verdicts.push_back(check_l_diversity(result.output_table, partition,
                                                *constraints.sensitive, *constraints.l));
  }
  if (constraints.t) {
    if (result.output_table.row_count() == 0) {
      ModelVerdict vacuous;
      vacuous.model = "t-closeness";
      vacuous.threshold = *constraints.t;
      vacuous.satisfied = true;
      vacuous.detail = "vacuous: no rows remain";
      result.verdicts.push_back(std::move(vacuous));
    } else {
      result.verdicts.push_back(check_t_closeness(result.output_table, partition,
                                                  *constraints.sensitive, *constraints.t));
    }
  }
  return result;
}

}  // namespace anonkit
