/*
 * Copyright 2026 The Albertine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "albertine/exterior.hpp"

#include "albertine/linalg.hpp"

namespace albertine {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

template <class T>
void check_args(const Matrix<T>& m, std::size_t k) {
  if (!m.square()) throw ShapeError("exterior power of non-square matrix " + m.shape());
  if (k > m.rows()) {
    throw ShapeError("exterior power degree " + std::to_string(k) + " exceeds dimension " +
                     std::to_string(m.rows()));
  }
}

template <class T>
Matrix<T> exterior_serial(const Matrix<T>& m, std::size_t k) {
  check_args(m, k);
  const auto subsets = index_subsets(m.rows(), k);
  const std::size_t dim = subsets.size();
  Matrix<T> out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = determinant(m.submatrix(subsets[r], subsets[c]));
  return out;
}

template <class T>
Matrix<T> exterior_parallel(const Matrix<T>& m, std::size_t k) {
  check_args(m, k);
  const auto subsets = index_subsets(m.rows(), k);
  const auto dim = static_cast<std::ptrdiff_t>(subsets.size());
  Matrix<T> out(subsets.size(), subsets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t r = 0; r < dim; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < subsets.size(); ++c)
      out(ru, c) = determinant(m.submatrix(subsets[ru], subsets[c]));
  }
  return out;
}

constexpr std::size_t kParallelThreshold = 64;

}  // namespace

namespace kernels {

MatC exterior_power_serial(const MatC& m, std::size_t k) { return exterior_serial(m, k); }
MatC exterior_power_parallel(const MatC& m, std::size_t k) { return exterior_parallel(m, k); }
MatZ exterior_power_serial(const MatZ& m, std::size_t k) { return exterior_serial(m, k); }
MatZ exterior_power_parallel(const MatZ& m, std::size_t k) { return exterior_parallel(m, k); }
MatG exterior_power_serial(const MatG& m, std::size_t k) { return exterior_serial(m, k); }
MatG exterior_power_parallel(const MatG& m, std::size_t k) { return exterior_parallel(m, k); }

}  // namespace kernels

MatC exterior_power(const MatC& m, std::size_t k) {
  check_args(m, k);
  return binomial(m.rows(), k) >= kParallelThreshold ? exterior_parallel(m, k) : exterior_serial(m, k);
}

MatZ exterior_power(const MatZ& m, std::size_t k) {
  check_args(m, k);
  return binomial(m.rows(), k) >= kParallelThreshold ? exterior_parallel(m, k) : exterior_serial(m, k);
}

MatG exterior_power(const MatG& m, std::size_t k) {
  check_args(m, k);
  return binomial(m.rows(), k) >= kParallelThreshold ? exterior_parallel(m, k) : exterior_serial(m, k);
}

}  // namespace albertine
