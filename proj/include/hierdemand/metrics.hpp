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

#include <span>
#include <string_view>
#include <vector>

#include "hierdemand/quantile.hpp"

namespace hierdemand::metrics {

// Every scaled metric follows the same denominator rule: in-sample one-step
// naive errors y_t - y_{t-1} (t = 2..T) enter the scale only for periods with
// y_t != 0, and the scale is their mean. Undefined results raise MetricError.

// Mean of (y_t - y_{t-1})^2 over the included periods.
double squared_naive_scale(std::span<const double> insample);
// Mean of |y_t - y_{t-1}| over the included periods.
double absolute_naive_scale(std::span<const double> insample);

double rmsse(std::span<const double> insample, std::span<const double> actual, std::span<const double> forecast);

// sum |y - f| / sum |y|
double wmape(std::span<const double> actual, std::span<const double> forecast);

// sum (y - f) / sum y; positive means under-forecasting.
double forecast_bias(std::span<const double> actual, std::span<const double> forecast);

// Pinball loss of a single error at level q.
inline double pinball(double y, double f, double q) { return y >= f ? q * (y - f) : (1.0 - q) * (f - y); }

// Horizon-mean pinball loss at q divided by absolute_naive_scale(insample).
double spl(std::span<const double> insample, std::span<const double> actual, std::span<const double> forecast_q,
           double q);

// Unweighted mean of spl over the grid; quantile_paths[k] is the path at grid[k].
double mspl(std::span<const double> insample, std::span<const double> actual,
            const std::vector<std::vector<double>>& quantile_paths, const QuantileGrid& grid);

// mspl for one series of a forecast object.
double mspl(std::span<const double> insample, std::span<const double> actual, const QuantileGridForecast& forecast,
            std::size_t series);

enum class DemandClass { smooth, intermittent, erratic, lumpy };

std::string_view to_string(DemandClass c);

struct DemandProfile {
  double adi = 0.0;
  double cv2 = 0.0;
  DemandClass cls = DemandClass::smooth;
};

inline constexpr double kAdiCutoff = 1.32;
inline constexpr double kCv2Cutoff = 0.49;

// ADI = length / number of nonzero periods; CV^2 = population variance of the
// nonzero sizes over their squared mean. Values at a cutoff count as low.
DemandProfile classify_demand(std::span<const double> insample);

// Unweighted mean of the scores within each level 0..n_levels-1.
std::vector<double> two_stage_average(std::span<const double> scores, std::span<const int> levels, int n_levels);

}  // namespace hierdemand::metrics
