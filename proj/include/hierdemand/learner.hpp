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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hierdemand {

// Row-major training matrix. Each row may carry a categorical pool-member id
// (>= 0) that learners can use as a per-member offset; -1 means none.
struct DesignMatrix {
  std::size_t cols = 0;
  std::vector<double> x;
  std::vector<int> member;
  int n_members = 0;

  std::size_t rows() const { return member.size(); }
  std::span<const double> row(std::size_t i) const { return {x.data() + i * cols, cols}; }
  void add_row(std::span<const double> values, int member_id = -1);
};

class QuantileLearner {
 public:
  virtual ~QuantileLearner() = default;
  // Fits the q-quantile of y given the rows of x. Throws on invalid input.
  virtual void fit(const DesignMatrix& x, std::span<const double> y, double q) = 0;
  virtual double predict(std::span<const double> row, int member = -1) const = 0;
};

struct LearnerConfig {
  std::string name = "linear_pinball";
  int iterations = 300;
  // Initial step as a multiple of the target's standard deviation.
  double step = 0.5;
  double l2 = 0.0;
};

using LearnerFactory = std::function<std::unique_ptr<QuantileLearner>(std::uint64_t seed)>;
using LearnerBuilder = std::function<std::unique_ptr<QuantileLearner>(const LearnerConfig&, std::uint64_t seed)>;

// Registry keyed by LearnerConfig::name. "linear_pinball" and
// "empirical_quantile" are registered by default.
void register_learner(const std::string& name, LearnerBuilder builder);
LearnerFactory make_learner_factory(const LearnerConfig& config);
std::vector<std::string> registered_learners();

// Linear quantile regression trained by full-batch pinball subgradient descent
// on standardized features: seeded Gaussian init of the weights, intercept
// started at the lower empirical q-quantile, step step*sd(y)/sqrt(k+1), fixed
// iteration count, Polyak averaging over the second half of the iterations.
// Member ids get their own additive offsets.
class LinearPinballLearner : public QuantileLearner {
 public:
  LinearPinballLearner(const LearnerConfig& config, std::uint64_t seed) : config_(config), seed_(seed) {}
  void fit(const DesignMatrix& x, std::span<const double> y, double q) override;
  double predict(std::span<const double> row, int member = -1) const override;

  // Coefficients on the original (unstandardized) feature scale.
  std::vector<double> coefficients() const;
  double intercept() const;

 private:
  LearnerConfig config_;
  std::uint64_t seed_;
  std::vector<double> mean_;
  std::vector<double> inv_sd_;
  std::vector<double> w_;
  std::vector<double> member_bias_;
  double b_ = 0.0;
  bool fitted_ = false;
};

// Ignores the features and predicts the lower empirical q-quantile of the targets.
class EmpiricalQuantileLearner : public QuantileLearner {
 public:
  void fit(const DesignMatrix& x, std::span<const double> y, double q) override;
  double predict(std::span<const double> row, int member = -1) const override;

 private:
  double value_ = 0.0;
  bool fitted_ = false;
};

// Smallest sample value whose empirical CDF reaches q (invariant to duplicating the sample).
double lower_quantile(std::vector<double> sample, double q);

}  // namespace hierdemand
