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

// Shared helpers for the unit tests: seeded random matrices and tolerant
// comparisons.
#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "albertine/linalg.hpp"
#include "albertine/matrix.hpp"
#include "albertine/quaternion.hpp"

namespace testing {

using albertine::Complex;

inline std::string data_path(const std::string& rel) { return std::string(ALBERTINE_DATA_DIR) + "/" + rel; }

inline double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline long small_int(std::mt19937_64& rng, long bound) {
  return std::uniform_int_distribution<long>(-bound, bound)(rng);
}

inline albertine::MatC random_matc(std::mt19937_64& rng, std::size_t n) {
  albertine::MatC m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {uniform(rng), uniform(rng)};
  return m;
}

inline albertine::MatH random_math(std::mt19937_64& rng, std::size_t n) {
  albertine::MatH m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {uniform(rng), uniform(rng), uniform(rng), uniform(rng)};
  return m;
}

inline albertine::MatZ random_matz(std::mt19937_64& rng, std::size_t n, long bound) {
  albertine::MatZ m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = small_int(rng, bound);
  return m;
}

inline albertine::MatG random_matg(std::mt19937_64& rng, std::size_t n, long bound) {
  albertine::MatG m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {small_int(rng, bound), small_int(rng, bound)};
  return m;
}

// Sorted by (real, imag) after rounding away noise, so multisets compare.
inline std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    const double ar = std::round(a.real() * 1e6), br = std::round(b.real() * 1e6);
    if (ar != br) return ar < br;
    return a.imag() < b.imag();
  });
  return v;
}

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

inline bool same_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && close(x, b[j], tol)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace testing
