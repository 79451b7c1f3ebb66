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
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hierdemand/csv.hpp"
#include "hierdemand/hierarchy.hpp"
#include "hierdemand/month.hpp"

namespace hierdemand {

// Marker for an absent covariate observation.
inline constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

struct PanelSeries {
  std::string series_id;
  // Key values from the top level down; empty for the root.
  std::vector<std::string> key_path;
  int level = 0;
  std::vector<Month> timestamps;
  // Orders per month; never negative.
  std::vector<double> target;
  // Aligned with timestamps; kAbsent where unobserved.
  std::map<std::string, std::vector<double>> covariates;
  std::optional<Month> intro_date;
  // Categorical metadata (body type, market cluster, ...). Upper nodes keep an
  // attribute only when every descendant leaf agrees on it.
  std::map<std::string, std::string> attributes;

  std::size_t size() const { return target.size(); }
};

// Complete hierarchical panel: one series per summing-matrix row, in row order.
struct Panel {
  HierarchySpec hierarchy;
  SummingMatrix smatrix;
  std::vector<PanelSeries> series;
  std::vector<Month> timestamps;
  std::vector<std::string> key_columns;
  std::vector<std::string> covariate_names;
  std::vector<std::string> attribute_names;

  std::size_t length() const { return timestamps.size(); }
  const std::vector<std::size_t>& bottom_rows() const { return smatrix.bottom_rows(); }
};

struct PanelSchema {
  std::vector<std::string> key_columns{"market", "product_cluster", "product_line", "product_type"};
  std::string time_column = "month";
  std::string target_column = "orders";
  // Categorical per-leaf columns; every other non-key column is a numeric covariate.
  std::vector<std::string> attribute_columns;
  // Optional per-leaf introduction month (YYYY-MM); used when present in the header.
  std::string intro_column = "intro_month";
  std::string root_id = "total";
};

// Builds the hierarchy from the leaves' key paths and materializes every upper
// node by summation. Leaves must share identical timestamps.
Panel assemble_panel(std::vector<PanelSeries> leaves, const std::vector<std::string>& key_columns,
                     const std::string& root_id = "total");

Panel load_panel(const std::string& path, const PanelSchema& schema = {});
Panel panel_from_table(const csv::Table& table, const PanelSchema& schema, const std::string& context);

// Long CSV of the bottom series. Numeric fields use the shortest round-trip
// representation, so load_panel(write) reproduces every value bit-for-bit.
void write_panel_csv(const Panel& panel, std::ostream& out, const std::string& intro_column = "intro_month");

struct SplitPlan {
  // Training length of the first window; when absent the windows are placed
  // so that the last test range ends at the final observation.
  std::optional<std::size_t> train_end;
  std::size_t horizon = 6;
  std::size_t n_windows = 1;
};

struct Window {
  std::size_t train_begin = 0;
  std::size_t train_end = 0;  // exclusive; also the forecast origin
  std::size_t test_begin = 0;
  std::size_t test_end = 0;  // exclusive
};

// Rolling-origin windows; consecutive origins advance by one month.
std::vector<Window> rolling_windows(const SplitPlan& plan, std::size_t series_len);

}  // namespace hierdemand
