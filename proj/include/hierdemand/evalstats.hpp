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
#include <span>
#include <string>
#include <vector>

namespace hierdemand::evalstats {

enum class Alternative { less, greater, two_sided };
Alternative parse_alternative(const std::string& name);
std::string to_string(Alternative a);

// Paired differences a - b, zeros dropped.
std::vector<double> paired_differences(std::span<const double> a, std::span<const double> b);

struct WilcoxonResult {
  std::size_t n_r = 0;  // nonzero differences
  double v = 0.0;       // sum of ranks of positive differences (midranks)
  double p = 1.0;
  double r_rb = 0.0;  // (2V - T) / T with T = n_r (n_r + 1) / 2
  bool exact = false;
};

// Signed-rank test of the differences (zeros dropped first). Exact null
// distribution for n_r <= exact_max without ties; otherwise the normal
// approximation with tie-corrected variance and continuity correction.
// "less" tests whether differences tend to be negative. DataError when no
// nonzero difference remains.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> d, Alternative alternative,
                                    std::size_t exact_max = 25);

// Median of the Walsh averages (d_i + d_j) / 2, i <= j. DataError on empty input.
double hodges_lehmann(std::span<const double> d);

struct ComparisonRow {
  std::string label;
  std::size_t n = 0;  // pairs before dropping zeros
  WilcoxonResult test;
  double hl = 0.0;
  double mean_diff = 0.0;
  // True when every difference was zero and the test was not run.
  bool skipped = false;
};

// Compares absolute errors of A and B (d = ae_a - ae_b).
ComparisonRow compare(const std::string& label, std::span<const double> ae_a, std::span<const double> ae_b,
                      Alternative alternative);

}  // namespace hierdemand::evalstats
