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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hierdemand/hierarchy.hpp"
#include "hierdemand/milp.hpp"

namespace hierdemand::reconcile {

// Forecast matrices are N x H: one row per summing-matrix row, one column per
// horizon step.

// S * (bottom slice of base).
Eigen::MatrixXd reconcile_bu(const Eigen::MatrixXd& base, const SummingMatrix& s);

// Orthogonal projection S (S'S)^-1 S' base. SolverError if S'S is singular.
Eigen::MatrixXd reconcile_ols(const Eigen::MatrixXd& base, const SummingMatrix& s);

struct CovarianceSpec {
  Eigen::MatrixXd sigma;
  double shrink_lambda = 0.0;
};

// (1 - lambda) * sigma + lambda * diag(sigma).
Eigen::MatrixXd shrunk_covariance(const CovarianceSpec& cov);

// S (S'WS)^-1 S'W base with W the inverse of the shrunk covariance.
// SolverError when the shrunk covariance is not positive definite.
Eigen::MatrixXd reconcile_mint(const Eigen::MatrixXd& base, const SummingMatrix& s, const CovarianceSpec& cov);

// Sample covariance (divisor n) of residual rows; residuals[k] is one
// observation of all N series.
Eigen::MatrixXd empirical_covariance(const std::vector<std::vector<double>>& residuals);

struct RoundingResult {
  Eigen::MatrixXd values;
  // Worst violation of y = S y_bottom over all columns.
  double max_violation = 0.0;
  std::size_t incoherent_columns = 0;
  bool coherent() const { return incoherent_columns == 0; }
};

// Half-up rounding floor(x + 0.5) of every entry, then a coherence check.
RoundingResult round_posthoc(const Eigen::MatrixXd& values, const SummingMatrix& s);

struct ReconWeights {
  // Reliability weight per series (row order), >= 0.
  std::vector<double> gamma;
  // Weight per hierarchy level (level-weighted variant), a probability vector.
  std::vector<double> alpha;
};

// gamma_i = 1 / max(wmape_i, floor).
std::vector<double> gamma_from_validation(const std::vector<double>& wmape, double floor = 1e-3);

// Per-series objective weights: gamma, or gamma * alpha[level] when level_weighted.
std::vector<double> series_weights(const ReconWeights& weights, const SummingMatrix& s, bool level_weighted);

enum class Backend { automatic, milp, tree };
Backend parse_backend(const std::string& name);

// Holds series `row` at `value` in period `period`.
struct Immutable {
  std::size_t row = 0;
  std::size_t period = 0;
  double value = 0.0;
};

struct MilpReconOptions {
  bool level_weighted = false;
  Backend backend = Backend::automatic;
  // Automatic backend uses branch and bound up to this many bottom series.
  std::size_t milp_max_bottom = 200;
  // Adds z_i >= chord of w|v - yhat| between the integers around yhat. Valid
  // for integer v = (S b)_i; it tightens the relaxation without changing the
  // integer optimum.
  bool chord_cuts = true;
  std::vector<Immutable> immutable;
  milp::SolverOptions solver;
};

struct MilpReconResult {
  Eigen::MatrixXd values;  // N x H integers
  double objective = 0.0;  // (1 / (N H)) sum_t sum_i w_i |values - base|
  std::vector<std::size_t> node_counts;
  std::string backend;
};

// Weighted L1 projection of every period onto nonnegative integer coherent
// points. Periods are solved independently. SolverError names the failing period.
MilpReconResult reconcile_milp(const Eigen::MatrixXd& base, const SummingMatrix& s, const ReconWeights& weights,
                               const MilpReconOptions& options = {});

// Integer box used for every bottom variable of one period:
// max(ceil(2 * max_i base_i), 10).
double integer_box(const Eigen::VectorXd& base_column);

// The MILP of one period: variables b_0..b_{B-1} (integer), then z_0..z_{N-1}.
milp::MilpProblem period_problem(const Eigen::VectorXd& base_column, const SummingMatrix& s,
                                 const std::vector<double>& w, bool chord_cuts,
                                 const std::vector<Immutable>& fixed = {});

// Exact weighted L1 projection of one period by dynamic programming over the
// tree (discrete convex slope merging). Returns bottom values; ties resolve to
// the smallest totals.
std::vector<double> tree_projection(const Eigen::VectorXd& base_column, const SummingMatrix& s,
                                    const std::vector<double>& w, double box);

// (1 / (N H)) sum w_i |values - base|.
double l1_objective(const Eigen::MatrixXd& values, const Eigen::MatrixXd& base, const std::vector<double>& w);

struct LevelWeightSearch {
  std::vector<double> alpha;
  double bottom_weight = 0.0;
  std::vector<double> grid;
  std::vector<double> scores;
};

// Grid search of the bottom-level weight over {0, 0.1, ..., 1}; other levels
// share the remaining mass equally. Score: mean over levels of the mean WMAPE
// of the reconciled validation forecasts (series with all-zero actuals
// skipped). Ties keep the smaller bottom weight.
LevelWeightSearch tune_level_weights(const Eigen::MatrixXd& base, const Eigen::MatrixXd& actual,
                                     const SummingMatrix& s, const std::vector<double>& gamma,
                                     const MilpReconOptions& options = {});

}  // namespace hierdemand::reconcile
