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
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hierdemand::milp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { le, eq, ge };

struct Constraint {
  std::vector<std::pair<std::size_t, double>> terms;
  Relation relation = Relation::le;
  double rhs = 0.0;
};

// minimize c'x subject to the constraints, lo <= x <= hi, and integrality of
// the flagged variables. Integer variables must have finite bounds.
struct MilpProblem {
  std::vector<double> objective;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<bool> integer;
  std::vector<std::string> names;
  std::vector<Constraint> constraints;

  std::size_t add_variable(double cost, double lower, double upper, bool is_integer, std::string name = {});
  void add_constraint(std::vector<std::pair<std::size_t, double>> terms, Relation relation, double rhs);
  std::size_t n_vars() const { return objective.size(); }

  // Throws ConfigError on inconsistent dimensions, empty boxes or unboxed integers.
  void validate() const;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };
std::string to_string(Status s);

struct MilpSolution {
  Status status = Status::infeasible;
  std::vector<double> values;
  double objective_value = kInf;
  std::size_t node_count = 0;
  std::size_t lp_iterations = 0;
  // LP solves: b'y of the optimal dual. Branch and bound: root relaxation bound.
  double dual_bound = -kInf;
  // Smallest relaxation bound among nodes fathomed by bound (kInf if none).
  double min_pruned_bound = kInf;
  // Incumbent objective after every improvement, in discovery order.
  std::vector<double> incumbent_trace;
};

struct SolverOptions {
  std::size_t max_nodes = 200000;
  std::size_t max_lp_iterations = 200000;
  double feasibility_tol = 1e-7;
  double integrality_tol = 1e-6;
  // Consecutive degenerate pivots before switching from Dantzig to Bland's rule.
  std::size_t degenerate_switch = 50;
};

// Two-phase dense tableau simplex on the LP relaxation. Entering column by
// most negative reduced cost, lowest index on ties, falling back to Bland's
// rule on long degenerate streaks; leaving row by minimum ratio, lowest basic
// index on ties. Every optimal solve is checked against its dual bound
// (SolverError if primal < dual - 1e-6).
MilpSolution solve_lp(const MilpProblem& problem, const SolverOptions& options = {});

// Best-first branch and bound (ties: deeper node, then newer node) branching
// on the most fractional integer variable (lowest index on ties). Integer
// values of an optimal solution are exactly rounded.
MilpSolution solve_milp(const MilpProblem& problem, const SolverOptions& options = {});

// CPLEX LP-format text of the problem.
std::string to_lp_format(const MilpProblem& problem);

}  // namespace hierdemand::milp
