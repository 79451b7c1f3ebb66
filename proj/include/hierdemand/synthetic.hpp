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
#include <cstdint>
#include <string>
#include <vector>

#include "hierdemand/month.hpp"
#include "hierdemand/panel.hpp"

namespace hierdemand {

// Product life cycle: a half-sine over `span` months lifted by two Gaussian
// bumps during maturity.
struct LifecycleShape {
  double span = 72.0;
  std::array<double, 2> bump_center{24.0, 48.0};
  std::array<double, 2> bump_width{5.0, 5.0};
  std::array<double, 2> bump_height{0.5, 0.5};
};

// Zero at age <= 0 and age >= span.
double lifecycle_envelope(const LifecycleShape& shape, double age);

struct SyntheticConfig {
  std::vector<std::string> level_names{"market", "product_cluster", "product_line", "product_type"};
  // Children per node at each level below the root, e.g. {23, 2, 2, 5}.
  std::vector<std::size_t> branching{23, 2, 2, 5};
  std::size_t n_months = 120;
  Month start = Month::from_year_month(2013, 1);
  // Peak expected orders per month of a bottom series before market scaling.
  double base_volume = 6.0;
  // Scales the multiplicative log-normal noise (0 = Poisson only).
  double noise_scale = 1.0;
  std::uint64_t seed = 42;
};

// Seeded hierarchical demand panel with trend, annual seasonality, multi-peak
// product life cycles, cross-market common shocks and a "visits" covariate
// that leads demand by one month. Leaves carry body_type, fuel_type,
// market_cluster and market_maturity attributes and an introduction month.
Panel generate_synthetic(const SyntheticConfig& config);

}  // namespace hierdemand
