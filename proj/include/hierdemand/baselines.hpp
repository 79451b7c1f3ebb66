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
#include <vector>

#include "hierdemand/quantile.hpp"

namespace hierdemand::baselines {

enum class Kind { naive, snaive, ma, ses };

struct BaselineConfig {
  Kind kind = Kind::naive;
  std::optional<std::size_t> window;  // ma only
  std::optional<double> alpha;        // ses only
  std::size_t season_length = 12;

  static BaselineConfig naive() { return {}; }
  static BaselineConfig snaive(std::size_t season = 12) { return {Kind::snaive, {}, {}, season}; }
  static BaselineConfig ma(std::size_t window = 2) { return {Kind::ma, window, {}, 12}; }
  static BaselineConfig ses(double alpha = 0.4) { return {Kind::ses, {}, alpha, 12}; }

  // Throws ConfigError when the optional fields do not match the kind.
  void validate() const;
  // Observations needed before a point forecast exists.
  std::size_t min_history() const;
  std::string name() const;
};

// Parses "naive", "snaive", "ma", "ses" (defaults: window 2, alpha 0.4, season 12).
BaselineConfig parse_kind(const std::string& name);

// Point path of length H. naive repeats the last value; snaive walks through the
// last season; ma repeats the trailing-window mean; ses repeats the smoothed
// level, seeded with the first observation.
std::vector<double> forecast_point(const BaselineConfig& cfg, std::span<const double> insample, std::size_t horizon);

inline constexpr std::size_t kMinResiduals = 8;

// Quantile band [h][q]: point path plus the empirical q-quantile of the
// in-sample h-step residuals (re-forecast from every feasible origin), clipped
// at zero and sorted across the grid. Needs kMinResiduals residuals per step.
std::vector<std::vector<double>> forecast_quantiles(const BaselineConfig& cfg, std::span<const double> insample,
                                                    std::size_t horizon, const QuantileGrid& grid);

}  // namespace hierdemand::baselines
