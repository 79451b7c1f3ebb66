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

#include "hierdemand/month.hpp"
#include "hierdemand/panel.hpp"

namespace hierdemand::features {

enum class Provenance { lag, rolling, ewm, calendar, avm, wdi, exogenous };
std::string to_string(Provenance p);

enum class RollingStat { mean, min, max, std };
std::string to_string(RollingStat s);
RollingStat parse_rolling_stat(const std::string& name);

// How absent feature values (unobserved covariates, short histories) reach a learner.
enum class ImputePolicy {
  sentinel,      // absent -> -1
  forward_fill,  // covariates carry their last observed value; anything still absent -> -1
};
ImputePolicy parse_impute_policy(const std::string& name);

inline constexpr double kSentinel = -1.0;

struct FeatureSpec {
  std::vector<int> lags{1, 2, 3, 6, 12};
  std::vector<int> rolling_windows{3, 6};
  std::vector<RollingStat> rolling_stats{RollingStat::mean, RollingStat::min, RollingStat::max};
  std::vector<double> ewm_alphas{0.5};
  bool calendar = true;
  bool avm = true;
  int avm_k = 3;
  // Covariate used by WDI; empty disables the column.
  std::string wdi_covariate;
  int wdi_k = 3;
  // Raw covariates entered at their latest usable value.
  std::vector<std::string> exogenous;
  ImputePolicy impute = ImputePolicy::sentinel;

  void validate() const;
  // Autoregressive observations needed before every AR column is defined.
  std::size_t min_history() const;
};

// Column names and provenance for one spec and calendar-year range.
struct FeatureLayout {
  std::vector<std::string> names;
  std::vector<Provenance> provenance;
  std::vector<int> years;

  std::size_t size() const { return names.size(); }
};

FeatureLayout make_layout(const FeatureSpec& spec, int first_year, int last_year);

// Everything a row of series i may read. Reads of covariates and of
// descendant-leaf targets are limited to indices < observed.
struct SeriesContext {
  const PanelSeries* series = nullptr;
  // Descendant bottom series for upper nodes (empty for a bottom series).
  std::vector<const PanelSeries*> leaves;
  std::size_t observed = 0;
};

// Throws DataError when an introduction date lies after the panel end.
SeriesContext make_context(const Panel& panel, std::size_t row, std::size_t observed);

// Inputs of one feature row:
//   path     target values; path[t] for t < ar_end may be observed or predicted
//   ar_end   autoregressive columns use path[0 .. ar_end)
//   exo_end  covariates use indices [0 .. min(exo_end, observed))
//   target   time index (months after the first timestamp) the row predicts
// AVM and WDI of an upper node are sums of its leaves' values, computed from
// observed leaf data only.
struct RowRequest {
  std::size_t ar_end = 0;
  std::size_t exo_end = 0;
  std::size_t target = 0;
};

// Writes layout.size() values; absent values are imputed per spec.impute.
void feature_row(const FeatureSpec& spec, const FeatureLayout& layout, const SeriesContext& ctx,
                 std::span<const double> path, const RowRequest& req, std::span<double> out);

// feature_row without imputation: absent entries stay kAbsent.
void feature_row_raw(const FeatureSpec& spec, const FeatureLayout& layout, const SeriesContext& ctx,
                     std::span<const double> path, const RowRequest& req, std::span<double> out);

// Replaces absent entries with kSentinel.
void impute(std::span<double> row);

// Rows t = 0..T-1 of one series with ar_end = exo_end = target = t, values not imputed.
struct FeatureMatrix {
  FeatureLayout layout;
  std::vector<std::vector<double>> rows;
};
FeatureMatrix build_feature_matrix(const FeatureSpec& spec, const FeatureLayout& layout, const SeriesContext& ctx);

// Column-level operations. Entry t only reads values before t; kAbsent marks
// undefined entries.
struct Column {
  std::string name;
  Provenance provenance;
  std::vector<double> values;
};

// Trailing statistic over x[end - window, end); nullopt when end < window.
std::optional<double> trailing_stat(std::span<const double> x, std::size_t end, int window, RollingStat stat);

std::vector<Column> lag_features(std::span<const double> target, const std::vector<int>& lags);
std::vector<Column> rolling_features(std::span<const double> target, const std::vector<int>& windows,
                                     const std::vector<RollingStat>& stats);
// age_t * S_k(y before t) with age_t = months since introduction; 0 while age <= 0.
Column avm(std::span<const double> target, const std::vector<Month>& timestamps, Month intro_date, int k);
// S_k(visits before t) * S_k(y before t).
Column wdi(std::span<const double> visits, std::span<const double> target, int k);
// month_sin, month_cos, moq_sin, moq_cos, quarter_1..4, year_<first..last>.
std::vector<Column> calendar_features(const std::vector<Month>& timestamps, int first_year, int last_year);

struct Differenced {
  std::vector<double> diffs;  // diffs[0] absent
  double anchor = 0.0;        // first level
};
Differenced difference(std::span<const double> target);
// Levels following `anchor` after applying the differences in order.
std::vector<double> integrate(double anchor, std::span<const double> diffs);

}  // namespace hierdemand::features
