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

// Arithmetic inner loops shared by the metrics, the pinball learner and the
// reconcilers. Every kernel has a portable scalar reference implementation;
// an AVX2/FMA variant is compiled when the toolchain supports it and is
// selected at runtime when the CPU does. Reductions in the vector variants
// use a different summation order, so results agree with the scalar
// reference to rounding (see tests/test_kernels.cpp), not bit-for-bit.
//
// Set HIERDEMAND_SIMD=scalar in the environment to force the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace hierdemand::kernels {

struct KernelTable {
  std::string_view name;
  // sum_i a_i * b_i
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y_i += alpha * x_i
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum_i x_i
  double (*sum)(const double* x, std::size_t n);
  // sum_i (a_i - b_i)
  double (*sum_diff)(const double* a, const double* b, std::size_t n);
  // sum_i |a_i - b_i|
  double (*sum_abs_diff)(const double* a, const double* b, std::size_t n);
  // sum_i (a_i - b_i)^2
  double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
  // sum_i pinball_q(y_i - f_i)
  double (*pinball_sum)(const double* y, const double* f, double q, std::size_t n);
  // out_i = d/df pinball_q(y_i - f_i): -q if y > f, 1-q if y < f, 0 on ties
  void (*pinball_grad)(const double* y, const double* f, double q, double* out, std::size_t n);
  // out = A x, A row-major rows x cols
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* out);
};

const KernelTable& scalar_kernels();

// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

// True when avx2_kernels() exists and the running CPU supports AVX2 + FMA.
bool avx2_usable();

// Kernel table selected once per process.
const KernelTable& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double sum_diff(std::span<const double> a, std::span<const double> b) {
  return active().sum_diff(a.data(), b.data(), a.size());
}
inline double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
  return active().sum_abs_diff(a.data(), b.data(), a.size());
}
inline double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
  return active().sum_sq_diff(a.data(), b.data(), a.size());
}
inline double pinball_sum(std::span<const double> y, std::span<const double> f, double q) {
  return active().pinball_sum(y.data(), f.data(), q, y.size());
}
inline void pinball_grad(std::span<const double> y, std::span<const double> f, double q,
                         std::span<double> out) {
  active().pinball_grad(y.data(), f.data(), q, out.data(), y.size());
}

}  // namespace hierdemand::kernels
