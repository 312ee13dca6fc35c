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

#include <vector>

#include "albertine/matrix.hpp"

namespace albertine {

/// Eigenvalues together with singular values of one square matrix.
struct Spectrum {
  std::vector<Complex> eigenvalues;
  std::vector<double> singular_values;  // nonincreasing
};

/// The standard embedding M_n(H) -> M_2n(C),
/// A1 + A2 j  |->  [[A1, A2], [-conj(A2), conj(A1)]]
/// where A1 = a + b i and A2 = c + d i entrywise. It is an algebra
/// homomorphism compatible with conjugate transposition.
MatC quat_embed(const MatH& a);
MatG quat_embed(const MatHZ& a);

/// All n eigenvalues via Householder reduction to Hessenberg form and shifted
/// complex QR. Throws ConvergenceFailure once 500 n iterations are spent.
std::vector<Complex> eigenvalues(const MatC& m);

/// Singular values by one-sided Jacobi, sorted nonincreasing.
std::vector<double> singular_values(const MatC& m);

Spectrum spectrum(const MatC& m);

/// Largest eigenvalue modulus, taken over defect_clusters means so that a
/// defective eigenvalue does not inflate the result by its eps^(1/s) spread.
double spectral_radius(const MatC& m);

/// Groups values by single linkage with the given radius; each group is
/// returned as (mean, size), in order of first appearance.
std::vector<std::pair<Complex, int>> cluster(const std::vector<Complex>& values, double radius);

/// Groups computed eigenvalues or roots that are perturbations of one
/// repeated value: values within `tight` always merge, and an s-element group
/// up to 10 eps^(1/s) scale across merges when its second central power sum
/// is O(eps scale^2). Groups are seeded from the largest remaining modulus.
std::vector<std::pair<Complex, int>> defect_clusters(std::vector<Complex> values, double tight, double scale);

/// Cluster radius used for conjugate-pair detection on a spectrum.
double pairing_radius(const std::vector<Complex>& values);

Complex determinant(const MatC& m);
Int determinant(const MatZ& m);
GaussInt determinant(const MatG& m);

}  // namespace albertine
