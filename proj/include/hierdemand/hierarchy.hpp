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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace hierdemand {

struct NodeRecord {
  std::string id;
  int level = 0;
  std::optional<std::string> parent;
};

// Strictly nested aggregation structure. Level 0 holds the single root; every
// other node names its parent. Construction only stores the declaration;
// validation happens in build_summing_matrix().
class HierarchySpec {
 public:
  HierarchySpec() = default;
  HierarchySpec(std::vector<std::string> levels, std::vector<NodeRecord> nodes,
                std::vector<std::string> bottom_ids);

  // Materializes one node per distinct key-path prefix. Level 0 is the root
  // (`root_id`), level k holds the distinct prefixes of length k. Node ids are
  // the prefix joined with '/'. Every key path must have level_names.size()
  // entries; the leaves are the full paths in the order given (deduplicated).
  static HierarchySpec from_key_paths(const std::vector<std::string>& level_names,
                                      const std::vector<std::vector<std::string>>& key_paths,
                                      const std::string& root_id = "total");

  const std::vector<std::string>& levels() const { return levels_; }
  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<std::string>& bottom_ids() const { return bottom_ids_; }

  // Throws DataError on duplicate ids, orphan or cyclic parent links, a
  // missing/duplicated root, level inconsistencies, or a bottom_ids list that
  // does not match the leaves exactly.
  void validate() const;

  // {"levels": [...], "nodes": [{"id","level","parent"}...], "bottom_ids": [...]}
  std::string to_json() const;

 private:
  std::vector<std::string> levels_;
  std::vector<NodeRecord> nodes_;
  std::vector<std::string> bottom_ids_;
};

// Dense 0/1 matrix mapping bottom series (columns) to every series (rows).
// Rows are level-major and sorted by node id within a level; columns follow
// HierarchySpec::bottom_ids().
class SummingMatrix {
 public:
  std::size_t rows() const { return row_ids_.size(); }
  std::size_t cols() const { return col_ids_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols(), cols()};
  }

  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::vector<std::string>& col_ids() const { return col_ids_; }
  // Hierarchy level of each row.
  const std::vector<int>& row_levels() const { return row_levels_; }
  int n_levels() const { return n_levels_; }
  // Row holding bottom series j.
  const std::vector<std::size_t>& bottom_rows() const { return bottom_rows_; }
  // Parent row of each row (nullopt for the root).
  const std::vector<std::optional<std::size_t>>& parent_rows() const { return parent_rows_; }
  std::optional<std::size_t> row_of(const std::string& id) const;

  Eigen::MatrixXd to_eigen() const;

 private:
  friend SummingMatrix build_summing_matrix(const HierarchySpec& spec);

  std::vector<double> entries_;
  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<int> row_levels_;
  std::vector<std::size_t> bottom_rows_;
  std::vector<std::optional<std::size_t>> parent_rows_;
  std::unordered_map<std::string, std::size_t> row_index_;
  int n_levels_ = 0;
};

SummingMatrix build_summing_matrix(const HierarchySpec& spec);

// S * b. Throws ConfigError when b.size() != S.cols().
std::vector<double> aggregate_bottom(const SummingMatrix& s, std::span<const double> bottom_values);

// Bottom slice (in column order) of a full N-vector.
std::vector<double> bottom_slice(const SummingMatrix& s, std::span<const double> full_values);

struct CoherenceReport {
  bool coherent = true;
  double max_violation = 0.0;
};

// Infinity norm of y - S * y_bottom, compared against tol.
CoherenceReport check_coherence(const SummingMatrix& s, std::span<const double> full_values, double tol);

}  // namespace hierdemand
