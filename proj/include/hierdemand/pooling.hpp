// Copyright 2026 The hierdemand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hierdemand/milp.hpp"
#include "hierdemand/panel.hpp"
#include "hierdemand/strategies.hpp"

namespace hierdemand::pooling {

// Mean-absolute-difference Gini: sum_ij |x_i - x_j| / (2 n^2 mean).
double gini_imbalance(std::span<const double> shares);

// kappa = s * M * (1 + nu * G).
double pool_cost(std::size_t model_count, double gini, double s, double nu);

// One candidate pool over series indices of a PoolLossTable. Candidates whose
// weighted cost is zero are always open.
struct PoolCandidate {
  std::string id;
  std::vector<std::size_t> members;  // sorted, unique
  std::size_t model_count = 1;
  double gini = 0.0;
  double cost = 0.0;
  // Zero-cost fallback (local models); never rescaled by calibrate_costs.
  bool free = false;
};

struct PoolLossTable {
  std::vector<std::string> series_ids;
  // No-pooling loss L_i0 per series.
  std::vector<double> baseline;
  // loss[g][k]: loss of candidate g's model for its k-th member.
  std::vector<std::vector<double>> loss;
};

// Candidates named "local:<series>" with zero cost whose losses equal the
// baseline; appended to both lists so every series is covered.
void add_local_candidates(PoolLossTable& table, std::vector<PoolCandidate>& candidates);

// Sets every non-free candidate's cost to s * M (1 + nu G) with s chosen so
// that the mean cost equals the mean |L_ig - L_i0| over their (i, g) pairs
// (s = 1 when that mean is zero). Returns s.
double calibrate_costs(const PoolLossTable& table, std::vector<PoolCandidate>& candidates, double nu);

struct SelectionOptions {
  // Exact enumeration over open sets up to this many costly candidates;
  // branch and bound above.
  std::size_t max_enumerated = 20;
  milp::SolverOptions solver;
};

struct Selection {
  // Chosen candidate per series.
  std::vector<std::size_t> assignment;
  // Open flag per candidate: exactly the candidates some series uses.
  std::vector<bool> open;
  // sum_i dL_i + lambda * sum_{g open} kappa_g, with dL = L_ig - L_i0.
  double objective = 0.0;
  double mean_relative_loss = 0.0;
  std::string method;
};

// Globally optimal solution of the selection program in relative-loss form.
// Series choose among open candidates by relative loss, then more members,
// then smaller id. Throws ConfigError for uncovered series or malformed
// tables.
Selection solve_pool_selection(const PoolLossTable& table, const std::vector<PoolCandidate>& candidates,
                               double lambda, const SelectionOptions& options = {});

// Objective of a given open set (free candidates are always open) together with
// the induced assignment.
Selection evaluate_open_set(const PoolLossTable& table, const std::vector<PoolCandidate>& candidates, double lambda,
                            const std::vector<bool>& open);

struct FrontierPoint {
  double lambda = 0.0;
  double objective = 0.0;
  double mean_relative_loss = 0.0;
  // Costly candidates opened and their total cost.
  std::size_t pools_opened = 0;
  double opened_cost = 0.0;
  std::vector<std::string> open_ids;
  Selection selection;
};

// One solve per lambda in grid order. The opened cost is non-increasing in
// lambda; the opened count is non-increasing when costly candidates share a cost.
std::vector<FrontierPoint> lambda_frontier(const PoolLossTable& table, const std::vector<PoolCandidate>& candidates,
                                           const std::vector<double>& lambda_grid,
                                           const SelectionOptions& options = {});

// Interior point with the largest second difference of mean relative loss
// (earliest on ties); index 0 when fewer than three points.
std::size_t elbow_index(const std::vector<FrontierPoint>& frontier);

std::vector<double> default_lambda_grid();

// A family of pools: series sharing the values of `keys` (key columns,
// attribute names, or "global" for one pool) form one group.
struct FamilySpec {
  std::string name;
  std::vector<std::string> keys;
};

struct Family {
  std::string id;
  std::vector<std::string> group_names;
  // Panel rows per group, ascending.
  std::vector<std::vector<std::size_t>> groups;
  // Observed samples per group over the first `observed` months, as shares.
  std::vector<double> sample_shares;
};

FamilySpec parse_family(const std::string& text);

// Groups the given panel rows. Observed samples of a series count months from
// its introduction (or the panel start) up to `observed`. DataError when a row
// lacks a key.
Family build_family(const Panel& panel, const std::vector<std::size_t>& rows, const FamilySpec& spec,
                    std::size_t observed);

// Candidate over the series of a loss table whose series are the panel rows
// `table_rows` (in table order); cost left at zero for calibrate_costs.
PoolCandidate make_candidate(const Family& family, const std::vector<std::size_t>& table_rows);

// Active pools of every open family, one pool per group, named "<family>:<group>".
strategies::PoolAssignment to_pool_assignment(const Panel& panel, const std::vector<Family>& families,
                                              const std::vector<bool>& open);

}  // namespace hierdemand::pooling
