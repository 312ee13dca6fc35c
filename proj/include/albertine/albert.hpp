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

#include <optional>
#include <vector>

#include "albertine/polynomial.hpp"
#include "albertine/variety.hpp"

namespace albertine {

/// How one factor's contribution to the Albert polynomial was obtained.
struct CaseRecord {
  std::size_t factor = 0;
  AlbertType albert_case = AlbertType::I;
  int multiplicity = 0;
  bool halved = false;  // chi_red^{m/2}
  bool paired = false;  // eigenvalues of iota(A_i) split into conjugate pairs
};

/// A degree-g factor P^A with P^A * conj(P^A) = P_alpha.
struct AlbertFactorization {
  PolyC p_albert;
  /// Set when every coefficient was computed exactly and is a rational
  /// integer.
  std::optional<PolyZ> integral;
  std::vector<CaseRecord> case_trace;
  /// Coefficientwise relative residual of P^A * conj(P^A) against P_alpha.
  double residual = 0.0;

  [[nodiscard]] bool exact() const { return integral.has_value(); }
};

/// Builds the Albert polynomial factor by factor:
///  - Types I and II: chi_red^{m/2} (m is always even for these types);
///  - Type III: chi_red^{m/2} when m is even, otherwise each iota(A_i)
///    contributes prod (t - pi_ij)^m over one member of each conjugate pair
///    of its eigenvalues, chosen by `convention`;
///  - Type IV: prod det(tI - A_i)^m.
/// Throws PairingFailure if the assembled factor misses the residual bound.
AlbertFactorization albert_poly(const VarietyModel& model, const Endomorphism& alpha,
                                PairingConvention convention = PairingConvention::UpperHalfPlane,
                                double tol = kPairingTolerance);

/// For a Rosati-symmetric alpha the Albert polynomial has real roots and is
/// unique. Throws NotSymmetric otherwise.
PolyC albert_poly_symmetric(const VarietyModel& model, const Endomorphism& alpha,
                            PairingConvention convention = PairingConvention::UpperHalfPlane,
                            double tol = kPairingTolerance);

/// The g singular values of alpha, one per conjugate pair: the 2g singular
/// values of rational_rep(alpha) sorted nonincreasing, every other one kept.
std::vector<double> pair_singular_values(const VarietyModel& model, const Endomorphism& alpha);

/// (c_0, ..., c_g) with P^A_{alpha^dagger alpha}(t) = sum (-1)^k c_k t^{g-k};
/// c_k = e_k(sigma_1^2, ..., sigma_g^2).
std::vector<double> corollary_b_coefficients(const VarietyModel& model, const Endomorphism& alpha);

/// t^2 - 2a t + (a^2 + b^2 + c^2 + d^2), the characteristic polynomial of
/// a + b i + c j + d k acting on a supersingular elliptic curve.
PolyZ supersingular_char_poly(const Int& a, const Int& b, const Int& c, const Int& d);

}  // namespace albertine
