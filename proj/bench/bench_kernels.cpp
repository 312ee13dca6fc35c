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

// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "albertine/exterior.hpp"
#include "albertine/oracle.hpp"

using namespace albertine;

namespace {

MatC random_complex(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatC m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

MatG random_gaussian(std::size_t n) {
  std::mt19937_64 rng(n + 1);
  std::uniform_int_distribution<long> u(-3, 3);
  MatG m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = GaussInt(u(rng), u(rng));
  return m;
}

std::vector<AlternatingForm> random_forms(std::size_t g) {
  std::mt19937_64 rng(g);
  std::uniform_int_distribution<long> u(-3, 3);
  std::vector<AlternatingForm> forms;
  for (std::size_t t = 0; t < g; ++t) {
    MatG m(2 * g, 2 * g);
    for (std::size_t i = 0; i < 2 * g; ++i) {
      for (std::size_t j = i + 1; j < 2 * g; ++j) {
        m(i, j) = GaussInt(u(rng), u(rng));
        m(j, i) = -m(i, j);
      }
    }
    forms.emplace_back(std::move(m));
  }
  return forms;
}

// Exterior powers at the middle degree, where the output is largest.
template <MatC (*Kernel)(const MatC&, std::size_t)>
void BM_ExteriorComplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatC m = random_complex(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, n / 2));
}

template <MatG (*Kernel)(const MatG&, std::size_t)>
void BM_ExteriorGaussian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatG m = random_gaussian(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, n / 2));
}

template <GaussInt (*Kernel)(std::span<const AlternatingForm>)>
void BM_MatchingSum(benchmark::State& state) {
  const auto forms = random_forms(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(forms));
}

}  // namespace

BENCHMARK(BM_ExteriorComplex<kernels::exterior_power_serial>)->Name("exterior_complex/serial")->DenseRange(6, 12, 2);
BENCHMARK(BM_ExteriorComplex<kernels::exterior_power_parallel>)->Name("exterior_complex/parallel")->DenseRange(6, 12, 2);
BENCHMARK(BM_ExteriorGaussian<kernels::exterior_power_serial>)->Name("exterior_gaussian/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_ExteriorGaussian<kernels::exterior_power_parallel>)->Name("exterior_gaussian/parallel")->DenseRange(6, 10, 2);
BENCHMARK(BM_MatchingSum<kernels::matching_sum_serial>)->Name("matching_sum/serial")->DenseRange(3, 6);
BENCHMARK(BM_MatchingSum<kernels::matching_sum_parallel>)->Name("matching_sum/parallel")->DenseRange(3, 6);

BENCHMARK_MAIN();
