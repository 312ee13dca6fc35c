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

#pragma once

#include <cstddef>
#include <vector>

#include "albertine/matrix.hpp"

namespace albertine {

/// Size-k subsets of {0, ..., n-1} in lexicographic order; this order
/// indexes the standard basis e_I of the k-th exterior power.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

namespace kernels {

// Entry (I, J) of the k-th exterior power is the minor det M[I, J].
// The serial variant is the reference; the parallel one distributes output
// rows over OpenMP threads and must agree with it bit for bit.
MatC exterior_power_serial(const MatC& m, std::size_t k);
MatC exterior_power_parallel(const MatC& m, std::size_t k);
MatZ exterior_power_serial(const MatZ& m, std::size_t k);
MatZ exterior_power_parallel(const MatZ& m, std::size_t k);
MatG exterior_power_serial(const MatG& m, std::size_t k);
MatG exterior_power_parallel(const MatG& m, std::size_t k);

}  // namespace kernels

/// k-th exterior power of a square matrix; dispatches to the parallel kernel
/// when the output is large enough to be worth it.
MatC exterior_power(const MatC& m, std::size_t k);
MatZ exterior_power(const MatZ& m, std::size_t k);
MatG exterior_power(const MatG& m, std::size_t k);

}  // namespace albertine
