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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hierdemand/config.hpp"
#include "hierdemand/panel.hpp"
#include "hierdemand/quantile.hpp"
#include "hierdemand/strategies.hpp"

namespace hierdemand::pipeline {

// Synthetic panel or CSV panel, per the [data] section.
Panel load_panel(const PipelineConfig& config);

std::vector<Window> plan_windows(const PipelineConfig& config, const Panel& panel);

// Forecast file: series_id,level,step,month,q<level>... one row per series and
// step, steps 1..H after `origin`.
void write_forecast_csv(const QuantileGridForecast& forecast, const Panel& panel, std::size_t origin,
                        std::ostream& out);
// Reads a forecast file; DataError when series or months do not line up with
// the panel and origin.
QuantileGridForecast read_forecast_csv(const std::string& path, const Panel& panel, std::size_t origin);

// Point file: series_id,level,step,month,value. `values` is N x H in panel row order.
void write_point_csv(const Eigen::MatrixXd& values, const Panel& panel, std::size_t origin, std::ostream& out);
Eigen::MatrixXd read_point_csv(const std::string& path, const Panel& panel, std::size_t origin);

// Median paths of a forecast as an N x H matrix in panel row order; DataError
// when a panel series is missing.
Eigen::MatrixXd point_matrix(const QuantileGridForecast& forecast, const Panel& panel);

// Actuals of the window's test range as an N x H matrix.
Eigen::MatrixXd actual_matrix(const Panel& panel, const Window& window);

// {"pools": [{"id", "members"}...]} as written by pool-select.
strategies::PoolAssignment read_pool_assignment(const std::string& path);

// Commands. Each writes only below config.output_dir and prints a short
// summary to `console`.
void cmd_simulate(const PipelineConfig& config, std::ostream& console);
void cmd_forecast(const PipelineConfig& config, std::ostream& console);
void cmd_pool_select(const PipelineConfig& config, std::ostream& console);
void cmd_reconcile(const PipelineConfig& config, std::ostream& console);
void cmd_evaluate(const PipelineConfig& config, std::ostream& console);

// Two bottom series under one total with base forecasts (1.5, 5.6, 8.7) for
// (b1, b2, top), reconciled by OLS, MinT (shrinkage 0.3) and REC-MILP.
// Coordinates are reported in (b1, b2, top) order.
struct GeometryDemo {
  std::array<double, 3> base{};
  std::array<double, 3> ols{};
  std::array<double, 3> mint{};
  std::array<double, 3> milp{};
  std::array<double, 3> ols_expected{2.033, 6.133, 8.167};
  std::array<double, 3> mint_expected{1.716, 6.086, 7.803};
  std::array<double, 3> milp_expected{2.0, 6.0, 8.0};
  bool ols_pass = false;
  bool mint_pass = false;
  bool milp_pass = false;
};

GeometryDemo run_geometry_demo();
// Prints the three reconciled points with PASS/FAIL; returns the failure count.
int cmd_geometry_demo(std::ostream& console);

}  // namespace hierdemand::pipeline
