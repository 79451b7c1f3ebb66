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

namespace hierdemand::strategies {

enum class Strategy { direct, recursive, hybrid };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

// What REC/HYB feed as covariates for months after the origin.
enum class ExoFuture {
  hold_last,  // last observed value
  absent,     // imputed sentinel
};
ExoFuture parse_exo_future(const std::string& name);

enum class Pooling { global, local };
Pooling parse_pooling(const std::string& name);

struct StrategyOptions {
  features::FeatureSpec features;
  // Learn the change from the last autoregressive value instead of the level.
  bool differencing = true;
  // Divide target-derived features and the target by each series' mean
  // absolute training value (covariates by their own training means).
  bool scaling = true;
  ExoFuture exo_future = ExoFuture::hold_last;
  // Training anchors per series, most recent first; 0 keeps all.
  std::size_t max_train_origins = 36;
  // Pooled fits give each member series its own offset.
  bool member_categorical = true;
  std::uint64_t seed = 42;
};

// Forecast setting shared by every strategy: data before `origin` is observed.
struct ForecastSetup {
  const Panel* panel = nullptr;
  std::size_t origin = 0;
  std::size_t horizon = 1;
  QuantileGrid grid;
};

// One-step in-sample residuals of the median direct model, aligned on common
// training anchors: residuals[a][k] for anchor a and series k of the output.
struct InsampleResiduals {
  // Target month index of each anchor row.
  std::vector<std::size_t> anchors;
  std::vector<std::vector<double>> residuals;
};

// Runs one strategy. `pools` partitions panel rows into training sets; each
// pool fits its own models and forecasts its members. Output rows follow the
// concatenation of the pools. Finalized (clipped, non-crossing).
QuantileGridForecast run_strategy(Strategy strategy, const LearnerFactory& factory, const ForecastSetup& setup,
                                  const std::vector<std::vector<std::size_t>>& pools, const StrategyOptions& options,
                                  InsampleResiduals* residuals = nullptr);

// Training pools for one set of rows: a single global pool or one pool per series.
std::vector<std::vector<std::size_t>> make_pools(const std::vector<std::size_t>& rows, Pooling pooling);

// Convenience entry points over the given rows (all panel rows when empty).
QuantileGridForecast forecast_direct(const LearnerFactory& factory, const ForecastSetup& setup,
                                     const StrategyOptions& options, Pooling pooling = Pooling::global,
                                     const std::vector<std::size_t>& rows = {});
QuantileGridForecast forecast_recursive(const LearnerFactory& factory, const ForecastSetup& setup,
                                        const StrategyOptions& options, Pooling pooling = Pooling::global,
                                        const std::vector<std::size_t>& rows = {});
QuantileGridForecast forecast_hybrid(const LearnerFactory& factory, const ForecastSetup& setup,
                                     const StrategyOptions& options, Pooling pooling = Pooling::global,
                                     const std::vector<std::size_t>& rows = {});

// Cellwise mean, then finalization. Inputs must share series, horizon and grid.
// Each cell is summed in ascending order, so the result does not depend on
// the order of the inputs.
QuantileGridForecast ensemble(const std::vector<const QuantileGridForecast*>& forecasts);

struct Pool {
  std::string id;
  std::vector<std::string> members;
  bool active = true;
};

struct PoolAssignment {
  std::vector<Pool> pools;
};

// For every series covered by an active pool: mean over {DIR, REC} x (active
// pools containing it) of the pool-trained forecasts. `series` selects and
// orders the output rows; when empty, every covered series in panel row order.
QuantileGridForecast drfam_pp(const LearnerFactory& factory, const ForecastSetup& setup, const PoolAssignment& pools,
                              const StrategyOptions& options, const std::vector<std::string>& series = {});

// Seed of the model for grid index q at horizon slot h (1-based). Recursive
// models use h = 1, so all strategies share their one-step models.
std::uint64_t model_seed(std::uint64_t base, std::size_t q, std::size_t h);

}  // namespace hierdemand::strategies
