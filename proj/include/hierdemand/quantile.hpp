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

namespace hierdemand {

// Strictly increasing quantile levels in (0, 1).
class QuantileGrid {
 public:
  // The 9-point grid {0.005, 0.025, 0.165, 0.25, 0.5, 0.75, 0.835, 0.975, 0.995}.
  QuantileGrid();
  explicit QuantileGrid(std::vector<double> levels);

  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }
  const std::vector<double>& levels() const { return levels_; }
  std::optional<std::size_t> index_of(double q) const;

  bool operator==(const QuantileGrid&) const = default;

 private:
  std::vector<double> levels_;
};

// Type-7 (linear interpolation) sample quantile; sorts `sample` in place.
double empirical_quantile(std::vector<double>& sample, double q);

// Value read off a sorted quantile cell at level q: linear interpolation
// between neighbouring grid levels, clamped to the outermost levels.
double interpolate_quantile(std::span<const double> cell, const QuantileGrid& grid, double q);

// Forecast values indexed by (series, step, quantile). Steps are 0-based here
// (step index h corresponds to horizon h + 1).
class QuantileGridForecast {
 public:
  QuantileGridForecast() = default;
  QuantileGridForecast(std::vector<std::string> series_ids, std::size_t horizon, QuantileGrid grid);

  std::size_t n_series() const { return series_ids_.size(); }
  std::size_t horizon() const { return horizon_; }
  const QuantileGrid& grid() const { return grid_; }
  const std::vector<std::string>& series_ids() const { return series_ids_; }
  std::optional<std::size_t> series_index(const std::string& id) const;

  double& at(std::size_t s, std::size_t h, std::size_t q) { return values_[offset(s, h) + q]; }
  double at(std::size_t s, std::size_t h, std::size_t q) const { return values_[offset(s, h) + q]; }
  std::span<double> cell(std::size_t s, std::size_t h) { return {values_.data() + offset(s, h), grid_.size()}; }
  std::span<const double> cell(std::size_t s, std::size_t h) const {
    return {values_.data() + offset(s, h), grid_.size()};
  }
  const std::vector<double>& values() const { return values_; }

  // Clip at zero, then sort every (series, step) cell across the grid.
  void finalize();
  bool non_crossing() const;
  bool same_index(const QuantileGridForecast& other) const;

  // Median path of one series (interpolated when 0.5 is not on the grid).
  std::vector<double> point_path(std::size_t s) const;
  // Values of series s at one grid index over the horizon.
  std::vector<double> quantile_path(std::size_t s, std::size_t q) const;

 private:
  std::size_t offset(std::size_t s, std::size_t h) const { return (s * horizon_ + h) * grid_.size(); }

  std::vector<std::string> series_ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t horizon_ = 0;
  QuantileGrid grid_;
  std::vector<double> values_;
};

}  // namespace hierdemand
