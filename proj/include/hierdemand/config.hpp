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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hierdemand/features.hpp"
#include "hierdemand/learner.hpp"
#include "hierdemand/panel.hpp"
#include "hierdemand/quantile.hpp"
#include "hierdemand/reconcile.hpp"
#include "hierdemand/strategies.hpp"
#include "hierdemand/synthetic.hpp"

namespace hierdemand {

// Strategy defaults of the pipeline: the feature stack also carries the
// "visits" covariate as WDI input and as a raw exogenous column.
strategies::StrategyOptions pipeline_strategy_defaults();

// Every setting of a pipeline run. Defaults reproduce the reference setup:
// H = 6, the 9-point grid, k = 3 smoothing, season 12, SES alpha 0.4.
struct PipelineConfig {
  std::uint64_t seed = 42;
  std::string output_dir = "out";

  // [data]
  std::string source = "synthetic";  // synthetic | csv
  std::string data_path;
  PanelSchema schema;

  SyntheticConfig synthetic;

  // [forecast]
  std::size_t horizon = 6;
  std::size_t windows = 1;
  std::optional<std::size_t> train_end;
  QuantileGrid grid;
  std::vector<std::string> methods{"DIR", "REC", "HYB", "ENS", "DRFAM-PP", "naive", "snaive", "ma", "ses"};
  strategies::StrategyOptions strategy = pipeline_strategy_defaults();
  std::size_t ma_window = 2;
  double ses_alpha = 0.4;
  std::size_t season_length = 12;

  LearnerConfig learner;

  // [pooling]
  std::vector<std::string> families{"market",        "product_cluster", "body_type",
                                    "fuel_type",     "market_cluster",  "market_maturity",
                                    "market_cluster+body_type"};
  // Hierarchical families used by DRFAM-PP when no selection file is given.
  std::vector<std::string> drfam_families{"market", "market+product_cluster", "product_cluster+product_line"};
  // Selection file written by pool-select; used by DRFAM-PP when set.
  std::string assignment;
  double nu = 1.0;
  std::optional<double> cost_scale;  // auto calibration when absent
  std::optional<double> lambda;      // frontier elbow when absent
  std::vector<double> lambda_grid{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0, 100.0};
  std::size_t folds = 2;

  // [reconcile]
  std::vector<std::string> recon_methods{"BU", "BU+round", "OLS", "MinT", "MinT+round", "REC-MILP", "REC-MILP-LW"};
  std::string base_method = "ENS";
  double mint_lambda = 0.3;
  reconcile::Backend backend = reconcile::Backend::automatic;
  std::size_t milp_max_bottom = 200;
  double gamma_floor = 1e-3;
  std::size_t tune_anchors = 6;

  // [evaluate]
  std::string method_a = "REC-MILP";
  std::string method_b = "MinT+round";
  std::string eval_source = "reconciled";  // reconciled | forecasts
  std::string alternative = "less";

  void validate() const;
};

// INI text with sections [run] [data] [synthetic] [forecast] [learner]
// [features] [pooling] [reconcile] [evaluate]; lists are comma separated.
// Unknown sections or keys raise ConfigError.
PipelineConfig parse_config(const std::string& text, const std::string& context = "config");
PipelineConfig load_config(const std::string& path);

// Shared list parsing: comma separated, whitespace trimmed, empty items dropped.
std::vector<std::string> split_list(const std::string& text);

}  // namespace hierdemand
